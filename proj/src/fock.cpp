#include "quaplectic/fock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace quap {

namespace {

using Eigen::Index;
using Eigen::MatrixXcd;

MatrixXcd kron(const MatrixXcd& a, const MatrixXcd& b) {
  MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

MatrixXcd mode_annihilation(int cutoff) {
  MatrixXcd a = MatrixXcd::Zero(cutoff + 1, cutoff + 1);
  for (int k = 1; k <= cutoff; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  return a;
}

// Mode 0 is the slowest (leftmost) tensor factor.
MatrixXcd embed(const MatrixXcd& op, int mode, int modes, int cutoff) {
  const MatrixXcd eye = MatrixXcd::Identity(cutoff + 1, cutoff + 1);
  MatrixXcd out = mode == 0 ? op : eye;
  for (int j = 1; j < modes; ++j) out = kron(out, j == mode ? op : eye);
  return out;
}

MatrixXcd comm(const MatrixXcd& a, const MatrixXcd& b) { return a * b - b * a; }

void check_eps(const Eigen::MatrixXcd& eps, int m) {
  if (eps.rows() != m || eps.cols() != m)
    throw std::invalid_argument("eps block shape does not match the mode count");
  if ((eps - eps.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("eps block must be Hermitian");
}

using OperatorGrid = std::vector<std::vector<MatrixXcd>>;

// Operator-valued trace of ((grid * eta)^k).
MatrixXcd trace_chain(const RepresentationBundle& rep, const OperatorGrid& grid,
                      int k) {
  const int m = rep.signature.modes();
  OperatorGrid power(m, std::vector<MatrixXcd>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) power[a][b] = grid[a][b] * rep.signature.eta(b);
  const OperatorGrid base = power;
  for (int step = 1; step < k; ++step) {
    OperatorGrid next(m, std::vector<MatrixXcd>(m));
    for (int a = 0; a < m; ++a)
      for (int c = 0; c < m; ++c) {
        MatrixXcd acc = MatrixXcd::Zero(rep.dim, rep.dim);
        for (int b = 0; b < m; ++b) acc += power[a][b] * base[b][c];
        next[a][c] = std::move(acc);
      }
    power = std::move(next);
  }
  MatrixXcd tr = MatrixXcd::Zero(rep.dim, rep.dim);
  for (int a = 0; a < m; ++a) tr += power[a][a];
  return tr;
}

OperatorGrid w_grid(const RepresentationBundle& rep) {
  const int m = rep.signature.modes();
  OperatorGrid w(m, std::vector<MatrixXcd>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const MatrixXcd block = rep.zab[a][b] + rep.eps_block(a, b) * rep.identity;
      w[a][b] = rep.zplus[a] * rep.zminus[b] - block;
    }
  return w;
}

OperatorGrid a_grid(const RepresentationBundle& rep) {
  const int m = rep.signature.modes();
  OperatorGrid a(m, std::vector<MatrixXcd>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      a[i][j] = rep.zab[i][j] + rep.eps_block(i, j) * rep.identity;
  return a;
}

}  // namespace

RepresentationBundle build_rep(const Signature& sig, const Truncation& trunc,
                               const Eigen::MatrixXcd& eps_block,
                               Eigen::Index max_elements) {
  if (sig.p < 0 || sig.p > 1 || sig.q < 0 || sig.modes() < 1)
    throw std::invalid_argument("signature must have p in {0,1} and q >= 0");
  if (trunc.cutoff < 4)
    throw std::invalid_argument("cutoff must be at least 4");
  if (trunc.interior_margin < 1 || trunc.interior_margin > trunc.cutoff)
    throw std::invalid_argument("interior margin must lie in [1, cutoff]");

  const int m = sig.modes();
  const Index per = trunc.cutoff + 1;
  Index dim = 1;
  for (int j = 0; j < m; ++j) {
    dim *= per;
    if (dim * dim > max_elements)
      throw std::length_error("occupation basis exceeds the element budget");
  }

  RepresentationBundle rep;
  rep.signature = sig;
  rep.truncation = trunc;
  rep.dim = dim;
  rep.eps_block = eps_block.size() == 0
                      ? Eigen::MatrixXcd::Zero(m, m).eval()
                      : eps_block;
  check_eps(rep.eps_block, m);

  const MatrixXcd a1 = mode_annihilation(trunc.cutoff);
  for (int j = 0; j < m; ++j) {
    const MatrixXcd low = embed(a1, j, m, trunc.cutoff);
    const MatrixXcd raise = low.adjoint();
    if (sig.eta(j) < 0) {
      rep.zplus.push_back(low);
      rep.zminus.push_back(raise);
    } else {
      rep.zplus.push_back(raise);
      rep.zminus.push_back(low);
    }
  }

  rep.zab.assign(m, std::vector<MatrixXcd>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) rep.zab[a][b] = rep.zplus[a] * rep.zminus[b];

  rep.identity = MatrixXcd::Identity(dim, dim);
  rep.number_op = MatrixXcd::Zero(dim, dim);
  for (int a = 0; a < m; ++a) rep.number_op += sig.eta(a) * rep.zab[a][a];
  std::complex<double> eps_trace = 0.0;
  for (int a = 0; a < m; ++a) eps_trace += sig.eta(a) * rep.eps_block(a, a);
  rep.u_op = rep.number_op + eps_trace * rep.identity;

  const Index top = per - 1 - trunc.interior_margin;
  rep.interior_projector = MatrixXcd::Zero(dim, dim);
  for (Index idx = 0; idx < dim; ++idx) {
    Index rest = idx;
    bool inside = true;
    for (int j = m - 1; j >= 0; --j) {
      if (rest % per > top) inside = false;
      rest /= per;
    }
    if (inside) {
      rep.interior.push_back(idx);
      rep.interior_projector(idx, idx) = 1.0;
    }
  }
  return rep;
}

Eigen::MatrixXcd interior_restrict(const RepresentationBundle& rep,
                                   const Eigen::MatrixXcd& m) {
  const Index n = static_cast<Index>(rep.interior.size());
  MatrixXcd out(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) out(i, j) = m(rep.interior[i], rep.interior[j]);
  return out;
}

double interior_max(const RepresentationBundle& rep, const Eigen::MatrixXcd& m) {
  return interior_restrict(rep, m).cwiseAbs().maxCoeff();
}

SpectrumReport interior_spectrum(const RepresentationBundle& rep,
                                 const Eigen::MatrixXcd& m) {
  const MatrixXcd b = interior_restrict(rep, m);
  SpectrumReport report;
  report.method = "fock";
  if ((b - b.adjoint()).cwiseAbs().maxCoeff() < 1e-9) {
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(b);
    report.eigenvalues = es.eigenvalues();
    report.max_imag = 0.0;
  } else {
    Eigen::ComplexEigenSolver<MatrixXcd> es(b);
    report.max_imag = es.eigenvalues().imag().cwiseAbs().maxCoeff();
    Eigen::VectorXd re = es.eigenvalues().real();
    std::sort(re.data(), re.data() + re.size());
    report.eigenvalues = re;
  }
  return report;
}

CommutatorReport commutator_residuals(const RepresentationBundle& rep) {
  const int m = rep.signature.modes();
  auto eta_ab = [&](int a, int b) { return a == b ? rep.signature.eta(a) : 0.0; };
  CommutatorReport r{};
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      r.max_ccr = std::max(
          r.max_ccr, interior_max(rep, comm(rep.zminus[a], rep.zplus[b]) -
                                           eta_ab(a, b) * rep.identity));
      r.max_ladder_ladder = std::max(
          r.max_ladder_ladder, interior_max(rep, comm(rep.zplus[a], rep.zplus[b])));
      r.max_ladder_ladder = std::max(
          r.max_ladder_ladder, interior_max(rep, comm(rep.zminus[a], rep.zminus[b])));
    }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        r.max_unitary_ladder = std::max(
            r.max_unitary_ladder,
            interior_max(rep, comm(rep.zab[a][b], rep.zplus[c]) -
                                  eta_ab(b, c) * rep.zplus[a]));
        r.max_unitary_ladder = std::max(
            r.max_unitary_ladder,
            interior_max(rep, comm(rep.zab[a][b], rep.zminus[c]) +
                                  eta_ab(a, c) * rep.zminus[b]));
        for (int d = 0; d < m; ++d)
          r.max_unitary_unitary = std::max(
              r.max_unitary_unitary,
              interior_max(rep, comm(rep.zab[a][b], rep.zab[c][d]) -
                                    eta_ab(b, c) * rep.zab[a][d] +
                                    eta_ab(a, d) * rep.zab[c][b]));
      }
  const OperatorGrid w = w_grid(rep);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      r.w_equals_minus_eps = std::max(
          r.w_equals_minus_eps,
          interior_max(rep, w[a][b] + rep.eps_block(a, b) * rep.identity));
      for (int c = 0; c < m; ++c) {
        r.max_w_ladder =
            std::max(r.max_w_ladder, interior_max(rep, comm(w[a][b], rep.zplus[c])));
        r.max_w_ladder =
            std::max(r.max_w_ladder, interior_max(rep, comm(w[a][b], rep.zminus[c])));
        const MatrixXcd first = rep.zplus[a] * rep.zminus[b];
        r.w_first_term_only = std::max(
            r.w_first_term_only, interior_max(rep, comm(first, rep.zplus[c])));
        r.w_first_term_only = std::max(
            r.w_first_term_only, interior_max(rep, comm(first, rep.zminus[c])));
      }
    }
  return r;
}

CasimirSet casimir_ops(const RepresentationBundle& rep, int max_order) {
  if (max_order < 1 || max_order > 4)
    throw std::invalid_argument("invariant order must lie in [1, 4]");
  const int m = rep.signature.modes();
  const OperatorGrid w = w_grid(rep);
  const OperatorGrid a = a_grid(rep);
  CasimirSet set{};
  for (int k = 1; k <= max_order; ++k) {
    set.c_ops.push_back({"C" + std::to_string(k), trace_chain(rep, w, k)});
    set.d_ops.push_back({"D" + std::to_string(k), trace_chain(rep, a, k)});
  }
  for (int k = 0; k < max_order; ++k) {
    set.c_spectra.push_back(interior_spectrum(rep, set.c_ops[k].mat));
    set.d_spectra.push_back(interior_spectrum(rep, set.d_ops[k].mat));
  }
  std::vector<const MatrixXcd*> all;
  for (const auto& op : set.c_ops) all.push_back(&op.mat);
  for (const auto& op : set.d_ops) all.push_back(&op.mat);
  set.max_mutual_commutator = 0.0;
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j)
      set.max_mutual_commutator = std::max(
          set.max_mutual_commutator, interior_max(rep, comm(*all[i], *all[j])));
  set.max_c_generator_commutator = 0.0;
  set.max_d_unitary_commutator = 0.0;
  for (int k = 0; k < max_order; ++k) {
    for (int c = 0; c < m; ++c) {
      set.max_c_generator_commutator =
          std::max(set.max_c_generator_commutator,
                   interior_max(rep, comm(set.c_ops[k].mat, rep.zplus[c])));
      set.max_c_generator_commutator =
          std::max(set.max_c_generator_commutator,
                   interior_max(rep, comm(set.c_ops[k].mat, rep.zminus[c])));
    }
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        set.max_c_generator_commutator =
            std::max(set.max_c_generator_commutator,
                     interior_max(rep, comm(set.c_ops[k].mat, rep.zab[i][j])));
        set.max_d_unitary_commutator =
            std::max(set.max_d_unitary_commutator,
                     interior_max(rep, comm(set.d_ops[k].mat, rep.zab[i][j])));
      }
  }
  set.c2_crosscheck =
      max_order >= 2
          ? interior_max(rep, set.c_ops[1].mat - (rep.number_op - rep.u_op))
          : 0.0;
  return set;
}

double g_identity(const RepresentationBundle& rep, int k, int n) {
  if (k < 1 || k > 4)
    throw std::invalid_argument("chain order must lie in [1, 4]");
  const MatrixXcd lhs = trace_chain(rep, rep.zab, k);
  const MatrixXcd shifted =
      rep.number_op - static_cast<double>(n) * rep.identity;
  MatrixXcd rhs = rep.number_op;
  for (int i = 1; i < k; ++i) rhs = rhs * shifted;
  return interior_max(rep, lhs - rhs);
}

GConstantResolution resolve_g_constant(const RepresentationBundle& rep) {
  const int m = rep.signature.modes();
  GConstantResolution best{-2 * m, std::numeric_limits<double>::infinity()};
  for (int n = -2 * m; n <= 2 * m; ++n) {
    const double res = g_identity(rep, 2, n);
    if (res < best.residual) best = {n, res};
  }
  return best;
}

double g_identity(const RepresentationBundle& rep, int k) {
  return g_identity(rep, k, resolve_g_constant(rep).n);
}

OperatorMatrix wave_operator(const RepresentationBundle& rep, int k,
                             const Eigen::MatrixXcd& eps_block) {
  if (k < 1 || k > 4)
    throw std::invalid_argument("wave operator order must lie in [1, 4]");
  const int m = rep.signature.modes();
  MatrixXcd eps = eps_block.size() == 0 ? rep.eps_block : MatrixXcd(eps_block);
  check_eps(eps, m);
  OperatorMatrix out;
  out.label = "wave" + std::to_string(k);
  if (k == 1) {
    out.mat = rep.number_op;
    return out;
  }
  Eigen::MatrixXd eta = Eigen::MatrixXd::Zero(m, m);
  for (int a = 0; a < m; ++a) eta(a, a) = rep.signature.eta(a);
  MatrixXcd link = eps;
  for (int step = 2; step < k; ++step)
    link = eps.transpose() * eta.cast<std::complex<double>>() * link;
  out.mat = MatrixXcd::Zero(rep.dim, rep.dim);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      out.mat += link(b, a) * rep.signature.eta(a) * rep.signature.eta(b) *
                 rep.zab[a][b];
  return out;
}

double f_label_check(double c1, double c2, double d1, double d2, double n) {
  const auto g2 = [n](double x) { return x * (x - n); };
  return 0.5 * (d2 - c2 - g2(d1 + c1));
}

}  // namespace quap
