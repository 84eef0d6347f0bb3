#include "quaplectic/contraction.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace quap {

LieAlgebra contract(const LieAlgebra& L, const ContractionWeights& weights) {
  const int n = L.dim();
  if (static_cast<int>(weights.w.size()) != n)
    throw std::invalid_argument("weight count does not match algebra dimension");
  std::vector<BracketTerm> kept;
  for (const auto& t : L.bracket_terms()) {
    const int degree = weights.w[t.alpha] + weights.w[t.beta] - weights.w[t.gamma];
    if (degree == 0) {
      kept.push_back(t);
    } else if (degree < 0 && std::abs(t.coeff) > 1e-12) {
      throw std::invalid_argument(
          "contraction limit diverges on [" + L.names()[t.alpha] + ", " +
          L.names()[t.beta] + "] -> " + L.names()[t.gamma]);
    }
  }
  return LieAlgebra(n, L.names(), kept);
}

namespace {

// Parses the unitary_split generator labels "Lab" / "Sab".
struct SplitLabel {
  char block;
  int a;
  int b;
};

SplitLabel parse_split(const std::string& name) {
  if (name.size() == 3 && (name[0] == 'L' || name[0] == 'S') &&
      std::isdigit(static_cast<unsigned char>(name[1])) &&
      std::isdigit(static_cast<unsigned char>(name[2])))
    return {name[0], name[1] - '0', name[2] - '0'};
  throw std::invalid_argument("preset weights need unitary_split labels, got " + name);
}

}  // namespace

ContractionWeights preset_weights(const std::string& preset, const LieAlgebra& L) {
  ContractionWeights out;
  out.w.reserve(L.dim());
  for (const auto& name : L.names()) {
    const SplitLabel g = parse_split(name);
    if (preset == "special_relativity") {
      out.w.push_back(g.block == 'L' ? 0 : 1);
    } else if (preset == "nonrelativistic") {
      if (g.block == 'L') {
        out.w.push_back(g.a == 0 ? 1 : 0);
      } else {
        out.w.push_back(g.a == 0 && g.b == 0 ? 2 : 1);
      }
    } else {
      throw std::invalid_argument("unknown contraction preset: " + preset);
    }
  }
  return out;
}

}  // namespace quap
