#pragma once

#include <string>

#include "quaplectic/lie_algebra.hpp"

namespace quap {

// Catalog algebras, by name (n is the spacelike count where applicable):
//   poincare(1,3)       boosts/rotations plus spacetime translations
//   heisenberg(n)       [Z+_i, Z-_j] = delta_ij I, dim 2n+1
//   hamilton(1)         {V, F, R} with [V, F] = 2R, R central
//   quaplectic(1,n)     A_ab block, Z+-_a pairs, central I (real-basis table)
//   inhom_unitary(1,n)  u(1,n) acting on the realified translations R^{2n+2}
//   unitary_split(1,n)  the A block rewritten in the L (antisymmetric) and
//                       S (symmetric) basis used by the contraction limits
// Accepts "poincare(1,3)" and "poincare13" spellings alike.
LieAlgebra builtin_algebra(const std::string& name);

// Metric entry for index a in signature (1, n): -1 for a = 0, +1 otherwise.
inline double eta13(int a) { return a == 0 ? -1.0 : 1.0; }

}  // namespace quap
