#include "quaplectic/lie_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace quap {

LieAlgebra::LieAlgebra(int dim, std::vector<std::string> names,
                       const std::vector<BracketTerm>& brackets)
    : dim_(dim), names_(std::move(names)) {
  if (dim_ <= 0) throw std::invalid_argument("algebra dimension must be positive");
  if (names_.empty()) {
    names_.reserve(dim_);
    for (int i = 0; i < dim_; ++i) names_.push_back("X" + std::to_string(i));
  }
  if (static_cast<int>(names_.size()) != dim_)
    throw std::invalid_argument("name count does not match dimension");
  c_.assign(static_cast<size_t>(dim_) * dim_ * dim_, 0.0);
  auto at = [&](int a, int b, int g) -> double& {
    return c_[(static_cast<size_t>(a) * dim_ + b) * dim_ + g];
  };
  // Accumulate terms as listed, then complete the antisymmetric closure:
  // a pair given in one orientation gets its mirror filled in; a pair given
  // in both orientations must already be antisymmetric.
  std::vector<char> touched(static_cast<size_t>(dim_) * dim_, 0);
  for (const auto& t : brackets) {
    if (t.alpha < 0 || t.alpha >= dim_ || t.beta < 0 || t.beta >= dim_ ||
        t.gamma < 0 || t.gamma >= dim_)
      throw std::invalid_argument("bracket term index out of range");
    if (t.alpha == t.beta) {
      if (t.coeff != 0.0)
        throw std::invalid_argument("bracket of a generator with itself must vanish");
      continue;
    }
    at(t.alpha, t.beta, t.gamma) += t.coeff;
    touched[static_cast<size_t>(t.alpha) * dim_ + t.beta] = 1;
  }
  for (int a = 0; a < dim_; ++a)
    for (int b = a + 1; b < dim_; ++b) {
      const bool fwd = touched[static_cast<size_t>(a) * dim_ + b];
      const bool rev = touched[static_cast<size_t>(b) * dim_ + a];
      for (int g = 0; g < dim_; ++g) {
        if (fwd && rev) {
          const double s = at(a, b, g) + at(b, a, g);
          if (std::abs(s) > 1e-12 * std::max(1.0, std::abs(at(a, b, g))))
            throw std::invalid_argument("brackets are not antisymmetric");
          at(b, a, g) = -at(a, b, g);
        } else if (fwd) {
          at(b, a, g) = -at(a, b, g);
        } else if (rev) {
          at(a, b, g) = -at(b, a, g);
        }
      }
    }
}

int LieAlgebra::index_of(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw std::invalid_argument("unknown generator: " + name);
  return static_cast<int>(it - names_.begin());
}

std::vector<BracketTerm> LieAlgebra::bracket_terms() const {
  std::vector<BracketTerm> out;
  for (int a = 0; a < dim_; ++a)
    for (int b = a + 1; b < dim_; ++b)
      for (int g = 0; g < dim_; ++g) {
        const double v = structure_constant(a, b, g);
        if (v != 0.0) out.push_back({a, b, g, v});
      }
  return out;
}

Eigen::VectorXd LieAlgebra::bracket(const Eigen::VectorXd& x,
                                    const Eigen::VectorXd& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw std::invalid_argument("coefficient vector length mismatch");
  Eigen::VectorXd z = Eigen::VectorXd::Zero(dim_);
  for (int a = 0; a < dim_; ++a) {
    if (x(a) == 0.0) continue;
    for (int b = 0; b < dim_; ++b) {
      const double xy = x(a) * y(b);
      if (xy == 0.0) continue;
      for (int g = 0; g < dim_; ++g) z(g) += xy * structure_constant(a, b, g);
    }
  }
  return z;
}

Eigen::MatrixXd LieAlgebra::ad(const Eigen::VectorXd& x) const {
  if (x.size() != dim_) throw std::invalid_argument("coefficient vector length mismatch");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim_, dim_);
  for (int g = 0; g < dim_; ++g)
    for (int b = 0; b < dim_; ++b) {
      double s = 0.0;
      for (int a = 0; a < dim_; ++a) s += x(a) * structure_constant(a, b, g);
      m(g, b) = s;
    }
  return m;
}

double jacobi_residual(const LieAlgebra& L) {
  const int n = L.dim();
  double worst = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int g = b + 1; g < n; ++g)
        for (int nu = 0; nu < n; ++nu) {
          double s = 0.0;
          for (int mu = 0; mu < n; ++mu)
            s += L.structure_constant(a, b, mu) * L.structure_constant(mu, g, nu) +
                 L.structure_constant(b, g, mu) * L.structure_constant(mu, a, nu) +
                 L.structure_constant(g, a, mu) * L.structure_constant(mu, b, nu);
          worst = std::max(worst, std::abs(s));
        }
  return worst;
}

LieAlgebra change_basis(const LieAlgebra& L, const Eigen::MatrixXd& S,
                        const std::vector<std::string>& new_names) {
  const int n = L.dim();
  if (S.rows() != n || S.cols() != n)
    throw std::invalid_argument("basis-change matrix has wrong shape");
  const Eigen::MatrixXd Sinv = S.inverse();
  // tmp(g, i, b) = sum_a S(a,i) c^g_{ab}
  std::vector<double> tmp(static_cast<size_t>(n) * n * n, 0.0);
  for (int g = 0; g < n; ++g)
    for (int i = 0; i < n; ++i)
      for (int b = 0; b < n; ++b) {
        double s = 0.0;
        for (int a = 0; a < n; ++a)
          s += S(a, i) * L.structure_constant(a, b, g);
        tmp[(static_cast<size_t>(g) * n + i) * n + b] = s;
      }
  std::vector<BracketTerm> terms;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double s = 0.0;
        for (int g = 0; g < n; ++g) {
          double sg = 0.0;
          for (int b = 0; b < n; ++b)
            sg += tmp[(static_cast<size_t>(g) * n + i) * n + b] * S(b, j);
          s += Sinv(k, g) * sg;
        }
        if (std::abs(s) > 1e-300) terms.push_back({i, j, k, s});
      }
  return LieAlgebra(n, new_names.empty() ? L.names() : new_names, terms);
}

LieAlgebra algebra_from_matrices(const std::vector<std::string>& names,
                                 const std::vector<Eigen::MatrixXcd>& gens,
                                 double tol) {
  const int k = static_cast<int>(gens.size());
  if (k == 0) throw std::invalid_argument("no generator matrices");
  const Eigen::Index rows = gens[0].rows(), cols = gens[0].cols();
  const Eigen::Index sz = rows * cols;
  Eigen::MatrixXd v(2 * sz, k);
  for (int i = 0; i < k; ++i) {
    if (gens[i].rows() != rows || gens[i].cols() != cols)
      throw std::invalid_argument("generator matrices differ in shape");
    const Eigen::Map<const Eigen::VectorXcd> flat(gens[i].data(), sz);
    v.col(i).head(sz) = flat.real();
    v.col(i).tail(sz) = flat.imag();
  }
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(v);
  if (qr.rank() < k)
    throw std::invalid_argument("generator matrices are linearly dependent");
  std::vector<BracketTerm> terms;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const Eigen::MatrixXcd comm = gens[i] * gens[j] - gens[j] * gens[i];
      const Eigen::Map<const Eigen::VectorXcd> flat(comm.data(), sz);
      Eigen::VectorXd rhs(2 * sz);
      rhs.head(sz) = flat.real();
      rhs.tail(sz) = flat.imag();
      const Eigen::VectorXd coeff = qr.solve(rhs);
      const double resid = (v * coeff - rhs).norm();
      if (resid > tol * std::max(1.0, rhs.norm()))
        throw std::invalid_argument("matrix span is not closed under commutators");
      for (int g = 0; g < k; ++g)
        if (std::abs(coeff(g)) > tol) terms.push_back({i, j, g, coeff(g)});
    }
  return LieAlgebra(k, names, terms);
}

LieAlgebra subalgebra(const LieAlgebra& L, const Eigen::MatrixXd& span,
                      const std::vector<std::string>& names, double tol) {
  if (span.rows() != L.dim()) throw std::invalid_argument("span has wrong row count");
  const int k = static_cast<int>(span.cols());
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(span);
  const Eigen::MatrixXd q =
      qr.householderQ() * Eigen::MatrixXd::Identity(L.dim(), k);
  std::vector<BracketTerm> terms;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const Eigen::VectorXd w = L.bracket(q.col(i), q.col(j));
      const Eigen::VectorXd coords = q.transpose() * w;
      if ((w - q * coords).norm() > tol * std::max(1.0, w.norm()))
        throw std::invalid_argument("span is not closed under the bracket");
      for (int g = 0; g < k; ++g)
        if (std::abs(coords(g)) > tol) terms.push_back({i, j, g, coords(g)});
    }
  std::vector<std::string> nm = names;
  if (nm.empty())
    for (int i = 0; i < k; ++i) nm.push_back("Q" + std::to_string(i));
  return LieAlgebra(k, nm, terms);
}

namespace {

// Orthonormal basis of the column space, relative-threshold rank cut.
Eigen::MatrixXd column_space(const Eigen::MatrixXd& m, double tol) {
  if (m.cols() == 0) return Eigen::MatrixXd(m.rows(), 0);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return Eigen::MatrixXd(m.rows(), 0);
  int rank = 0;
  while (rank < s.size() && s(rank) > tol * s(0)) ++rank;
  return svd.matrixU().leftCols(rank);
}

// Span of all brackets [a_i, b_j].
Eigen::MatrixXd bracket_space(const LieAlgebra& L, const Eigen::MatrixXd& a,
                              const Eigen::MatrixXd& b, double tol) {
  Eigen::MatrixXd prod(L.dim(), a.cols() * b.cols());
  int col = 0;
  for (int i = 0; i < a.cols(); ++i)
    for (int j = 0; j < b.cols(); ++j) prod.col(col++) = L.bracket(a.col(i), b.col(j));
  return column_space(prod, tol);
}

}  // namespace

AlgebraFingerprint fingerprint(const LieAlgebra& L, double tol) {
  const int n = L.dim();
  AlgebraFingerprint fp;
  fp.dim = n;

  Eigen::MatrixXd cur = Eigen::MatrixXd::Identity(n, n);
  fp.derived_series.push_back(n);
  while (true) {
    const Eigen::MatrixXd next = bracket_space(L, cur, cur, tol);
    if (next.cols() == cur.cols()) break;
    fp.derived_series.push_back(static_cast<int>(next.cols()));
    cur = next;
    if (cur.cols() == 0) break;
  }

  const Eigen::MatrixXd full = Eigen::MatrixXd::Identity(n, n);
  cur = full;
  fp.lower_central_series.push_back(n);
  while (true) {
    const Eigen::MatrixXd next = bracket_space(L, full, cur, tol);
    if (next.cols() == cur.cols()) break;
    fp.lower_central_series.push_back(static_cast<int>(next.cols()));
    cur = next;
    if (cur.cols() == 0) break;
  }

  Eigen::MatrixXd cen(n * n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int g = 0; g < n; ++g) cen(b * n + g, a) = L.structure_constant(a, b, g);
  Eigen::JacobiSVD<Eigen::MatrixXd> csvd(cen);
  const auto& cs = csvd.singularValues();
  int crank = 0;
  if (cs.size() > 0 && cs(0) > 0.0)
    while (crank < cs.size() && cs(crank) > tol * cs(0)) ++crank;
  fp.center_dim = n - crank;

  Eigen::MatrixXd killing(n, n);
  std::vector<Eigen::MatrixXd> ads;
  ads.reserve(n);
  for (int i = 0; i < n; ++i)
    ads.push_back(L.ad(Eigen::VectorXd::Unit(n, i)));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      killing(i, j) = killing(j, i) = (ads[i] * ads[j]).trace();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(killing);
  const double kmax = es.eigenvalues().cwiseAbs().maxCoeff();
  fp.killing_positive = fp.killing_negative = 0;
  if (kmax > 0.0)
    for (int i = 0; i < n; ++i) {
      if (es.eigenvalues()(i) > tol * kmax) ++fp.killing_positive;
      if (es.eigenvalues()(i) < -tol * kmax) ++fp.killing_negative;
    }
  fp.killing_rank = fp.killing_positive + fp.killing_negative;
  return fp;
}

bool operator==(const AlgebraFingerprint& a, const AlgebraFingerprint& b) {
  return a.dim == b.dim && a.derived_series == b.derived_series &&
         a.lower_central_series == b.lower_central_series &&
         a.center_dim == b.center_dim && a.killing_rank == b.killing_rank &&
         a.killing_positive == b.killing_positive &&
         a.killing_negative == b.killing_negative;
}

std::string to_json(const LieAlgebra& L) {
  nlohmann::json j;
  j["dim"] = L.dim();
  j["names"] = L.names();
  auto terms = nlohmann::json::array();
  for (const auto& t : L.bracket_terms())
    terms.push_back({t.alpha, t.beta, t.gamma, t.coeff});
  j["brackets"] = terms;
  return j.dump(2);
}

LieAlgebra algebra_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  const int dim = j.at("dim").get<int>();
  std::vector<std::string> names;
  if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
  std::vector<BracketTerm> terms;
  for (const auto& t : j.at("brackets")) {
    if (!t.is_array() || t.size() != 4)
      throw std::invalid_argument("bracket entries must be [alpha, beta, gamma, coeff]");
    terms.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>(),
                     t[3].get<double>()});
  }
  return LieAlgebra(dim, names, terms);
}

}  // namespace quap
