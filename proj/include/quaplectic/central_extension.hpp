#pragma once

#include <Eigen/Dense>
#include <vector>

#include "quaplectic/lie_algebra.hpp"

namespace quap {

// Classification of one-generator central enlargements of an algebra. A
// candidate pairing omega must satisfy the cyclic compatibility condition
//   omega([X_a, X_b], X_c) + omega([X_b, X_c], X_a) + omega([X_c, X_a], X_b) = 0
// and pairings of the form omega(x, y) = lambda([x, y]) are discarded as
// generator redefinitions.
struct CocycleSolution {
  int h2_dim;
  std::vector<Eigen::MatrixXd> cocycles;  // antisymmetric, unit Frobenius norm
  int cocycle_kernel_dim;                 // solutions of the cyclic condition
  int coboundary_rank;                    // redefinition directions among them
  double max_condition_residual;          // cyclic condition on returned basis
  double min_coboundary_distance;         // distance of basis to redefinitions
};

// Relative singular-value threshold used for all rank decisions.
inline constexpr double kRankThreshold = 1e-9;

CocycleSolution central_extensions(const LieAlgebra& L);

// |<a, b>_F| / (|a|_F |b|_F); 0 when either argument vanishes.
double cosine_similarity(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

}  // namespace quap
