#pragma once

#include <string>
#include <vector>

#include "quaplectic/lie_algebra.hpp"

namespace quap {

// Rescaling exponents X_alpha -> eps^{w_alpha} X_alpha for the singular limit
// eps -> 0. A bracket coefficient c^gamma_{alpha beta} acquires epsilon degree
// w_alpha + w_beta - w_gamma: degree 0 survives, positive degree vanishes,
// negative degree means the limit does not exist.
struct ContractionWeights {
  std::vector<int> w;
};

LieAlgebra contract(const LieAlgebra& L, const ContractionWeights& weights);

// Named weight assignments for unitary_split(1,3):
//   "special_relativity"  S block scaled away once (b grows): L keeps its
//                         brackets, S abelianizes, [L,S] survives
//   "nonrelativistic"     joint limit (b and c grow): spatial rotations kept,
//                         boosts and force generators pair into a Heisenberg
//                         block with the S_00 center
ContractionWeights preset_weights(const std::string& preset, const LieAlgebra& L);

}  // namespace quap
