#pragma once

#include <cmath>
#include <stdexcept>

namespace quap {

// Universal bounds: c caps relative velocity, b caps relative force,
// hbar sets the phase-space cell. Defaults are natural units.
struct Constants {
  double c = 1.0;
  double b = 1.0;
  double hbar = 1.0;

  void validate() const {
    if (!(c > 0.0) || !(b > 0.0) || !(hbar > 0.0))
      throw std::invalid_argument("constants must be positive");
  }
};

// Characteristic scales that render (t, q, p, e) dimensionless.
// lambda_q * lambda_p = lambda_t * lambda_e = hbar.
struct DimensionalScales {
  double lambda_t;
  double lambda_q;
  double lambda_p;
  double lambda_e;
};

inline DimensionalScales scales(const Constants& k) {
  k.validate();
  return {std::sqrt(k.hbar / (k.b * k.c)), std::sqrt(k.hbar * k.c / k.b),
          std::sqrt(k.hbar * k.b / k.c), std::sqrt(k.hbar * k.b * k.c)};
}

}  // namespace quap
