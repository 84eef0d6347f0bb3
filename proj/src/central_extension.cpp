#include "quaplectic/central_extension.hpp"

#include <cmath>

namespace quap {

namespace {

int rank_of(const Eigen::VectorXd& sv) {
  if (sv.size() == 0 || sv(0) <= 0.0) return 0;
  int r = 0;
  while (r < sv.size() && sv(r) > kRankThreshold * sv(0)) ++r;
  return r;
}

}  // namespace

CocycleSolution central_extensions(const LieAlgebra& L) {
  const int n = L.dim();
  const int npairs = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(npairs);
  Eigen::MatrixXi pair_index = Eigen::MatrixXi::Constant(n, n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      pair_index(a, b) = static_cast<int>(pairs.size());
      pairs.emplace_back(a, b);
    }
  // omega_{mu nu} as a signed lookup of the ordered unknowns.
  auto add_omega = [&](Eigen::MatrixXd& row_target, int row, int mu, int nu,
                       double coeff) {
    if (mu == nu || coeff == 0.0) return;
    if (mu < nu)
      row_target(row, pair_index(mu, nu)) += coeff;
    else
      row_target(row, pair_index(nu, mu)) -= coeff;
  };

  const int ntriples = n * (n - 1) * (n - 2) / 6;
  Eigen::MatrixXd cond = Eigen::MatrixXd::Zero(std::max(ntriples, 1), npairs);
  int row = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int g = b + 1; g < n; ++g) {
        for (int mu = 0; mu < n; ++mu) {
          add_omega(cond, row, mu, g, L.structure_constant(a, b, mu));
          add_omega(cond, row, mu, a, L.structure_constant(b, g, mu));
          add_omega(cond, row, mu, b, L.structure_constant(g, a, mu));
        }
        ++row;
      }

  Eigen::MatrixXd cobound(npairs, n);
  for (int p = 0; p < npairs; ++p)
    for (int g = 0; g < n; ++g)
      cobound(p, g) = L.structure_constant(pairs[p].first, pairs[p].second, g);

  CocycleSolution out;
  out.h2_dim = 0;
  out.cocycle_kernel_dim = npairs;
  out.coboundary_rank = 0;
  out.max_condition_residual = 0.0;
  out.min_coboundary_distance = 0.0;
  if (npairs == 0) return out;

  Eigen::MatrixXd kernel;
  if (ntriples == 0) {
    kernel = Eigen::MatrixXd::Identity(npairs, npairs);
  } else {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(cond, Eigen::ComputeFullV);
    const int r = rank_of(svd.singularValues());
    out.cocycle_kernel_dim = npairs - r;
    kernel = svd.matrixV().rightCols(npairs - r);
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> bsvd(cobound, Eigen::ComputeThinU);
  out.coboundary_rank = rank_of(bsvd.singularValues());
  const Eigen::MatrixXd bbasis = bsvd.matrixU().leftCols(out.coboundary_rank);

  out.h2_dim = out.cocycle_kernel_dim - out.coboundary_rank;
  if (out.h2_dim <= 0) {
    out.h2_dim = std::max(out.h2_dim, 0);
    return out;
  }

  // Representatives: the kernel directions orthogonal to the redefinitions.
  Eigen::MatrixXd proj = kernel - bbasis * (bbasis.transpose() * kernel);
  Eigen::JacobiSVD<Eigen::MatrixXd> psvd(proj, Eigen::ComputeThinU);
  out.min_coboundary_distance = 1.0;
  for (int k = 0; k < out.h2_dim; ++k) {
    Eigen::VectorXd v = psvd.matrixU().col(k);
    int lead = 0;
    for (int i = 1; i < v.size(); ++i)
      if (std::abs(v(i)) > std::abs(v(lead))) lead = i;
    if (v(lead) < 0.0) v = -v;
    if (ntriples > 0)
      out.max_condition_residual =
          std::max(out.max_condition_residual, (cond * v).cwiseAbs().maxCoeff());
    out.min_coboundary_distance = std::min(
        out.min_coboundary_distance,
        (v - bbasis * (bbasis.transpose() * v)).norm());
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(n, n);
    for (int p = 0; p < npairs; ++p) {
      omega(pairs[p].first, pairs[p].second) = v(p);
      omega(pairs[p].second, pairs[p].first) = -v(p);
    }
    out.cocycles.push_back(omega / omega.norm());
  }
  return out;
}

double cosine_similarity(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  const double na = a.norm(), nb = b.norm();
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::abs((a.array() * b.array()).sum()) / (na * nb);
}

}  // namespace quap
