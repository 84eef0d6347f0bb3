#pragma once

#include <Eigen/Dense>
#include <array>

#include "quaplectic/constants.hpp"

namespace quap {

// Coordinate ordering is (t, q, p, e) everywhere.

// Orthogonal line element -dt^2 + dq^2/c^2 + dp^2/b^2 - de^2/(b^2 c^2),
// signature (2,2).
inline Eigen::Matrix4d born_green_metric(const Constants& k) {
  const double c2 = k.c * k.c, b2 = k.b * k.b;
  Eigen::Matrix4d g = Eigen::Matrix4d::Zero();
  g(0, 0) = -1.0;
  g(1, 1) = 1.0 / c2;
  g(2, 2) = 1.0 / b2;
  g(3, 3) = -1.0 / (b2 * c2);
  return g;
}

// Canonical two-form -de^dt + dp^dq written as an antisymmetric matrix.
inline Eigen::Matrix4d symplectic_form() {
  Eigen::Matrix4d z = Eigen::Matrix4d::Zero();
  z(0, 3) = 1.0;
  z(3, 0) = -1.0;
  z(2, 1) = 1.0;
  z(1, 2) = -1.0;
  return z;
}

// Degenerate absolute-time form -dt^2.
inline Eigen::Matrix4d nonrel_time_metric() {
  Eigen::Matrix4d g = Eigen::Matrix4d::Zero();
  g(0, 0) = -1.0;
  return g;
}

// The pair of degenerate inertial line elements: proper time on (t, q) and
// proper momentum-energy on (p, e).
inline std::array<Eigen::Matrix4d, 2> sr_pair(const Constants& k) {
  const double c2 = k.c * k.c;
  Eigen::Matrix4d ds2 = Eigen::Matrix4d::Zero();
  ds2(0, 0) = -1.0;
  ds2(1, 1) = 1.0 / c2;
  Eigen::Matrix4d dmu2 = Eigen::Matrix4d::Zero();
  dmu2(2, 2) = 1.0;
  dmu2(3, 3) = -1.0 / c2;
  return {ds2, dmu2};
}

struct Metrics {
  Eigen::Matrix4d born_green;
  Eigen::Matrix4d symplectic;
  Eigen::Matrix4d nonrel;
  std::array<Eigen::Matrix4d, 2> sr;
};

inline Metrics metrics(const Constants& k) {
  return {born_green_metric(k), symplectic_form(), nonrel_time_metric(),
          sr_pair(k)};
}

}  // namespace quap
