#pragma once

#include <cmath>
#include <stdexcept>

#include "quaplectic/constants.hpp"

namespace quap {

// Relative velocity, force, and power of one frame with respect to another.
template <typename Scalar = double>
struct FrameParamsT {
  Scalar v{0};
  Scalar f{0};
  Scalar r{0};
};
using FrameParams = FrameParamsT<double>;

// Radicand guard: parameters whose gamma radicand falls at or below this are
// treated as on/beyond the null surface, where the matrices are singular.
inline constexpr double kGammaGuard = 1e-12;

template <typename Scalar = double>
struct GammaFactorsT {
  Scalar gamma0;  // inertial factor, function of v alone
  Scalar gamma;   // noninertial factor, function of (v, f, r)
};
using GammaFactors = GammaFactorsT<double>;

// gamma0 = (1 - v^2/c^2)^(-1/2)
// gamma  = (1 - v^2/c^2 - f^2/b^2 + r^2/(b^2 c^2))^(-1/2)
template <typename Scalar>
GammaFactorsT<Scalar> gamma_factors(const FrameParamsT<Scalar>& p,
                                    const Constants& k) {
  const Scalar c2 = Scalar(k.c) * Scalar(k.c);
  const Scalar b2 = Scalar(k.b) * Scalar(k.b);
  const Scalar rad0 = Scalar(1) - p.v * p.v / c2;
  const Scalar rad = rad0 - p.f * p.f / b2 + p.r * p.r / (b2 * c2);
  if (!(rad0 > Scalar(kGammaGuard)))
    throw std::domain_error("velocity at or beyond the bound c");
  if (!(rad > Scalar(kGammaGuard)))
    throw std::domain_error("frame parameters on or beyond the null surface");
  using std::sqrt;
  return {Scalar(1) / sqrt(rad0), Scalar(1) / sqrt(rad)};
}

// Proper rates (acceleration, force rate, power rate) seen from a frame.
template <typename Scalar = double>
struct RateVectorT {
  Scalar dv_dt{0};
  Scalar df_dt{0};
  Scalar dr_dt{0};
};
using RateVector = RateVectorT<double>;

}  // namespace quap
