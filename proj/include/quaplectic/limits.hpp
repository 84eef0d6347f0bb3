#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "quaplectic/transforms.hpp"

namespace quap {

struct LimitSchedulePoint {
  double c;
  double b;
};

// Convergence of the bounded-rate matrices toward their two limiting
// families along a schedule of (c, b) values:
//   err_vs_binf[i]     = || G_{c,b} - G0_c ||_max   (b -> infinity target)
//   err_vs_hamilton[i] = || G_{c,b} - Phi ||_max    (b, c -> infinity target)
// slope_vs_b is the least-squares slope of log(err_vs_binf) against log(b);
// the leading correction is O(1/b^2), so the slope is close to -2.
struct LimitReport {
  std::vector<double> err_vs_binf;
  std::vector<double> err_vs_hamilton;
  double slope_vs_b;
};

inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("slope fit needs at least two points");
  const int n = static_cast<int>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline LimitReport limit_check(const FrameParams& p,
                               const std::vector<LimitSchedulePoint>& schedule) {
  if (schedule.empty()) throw std::invalid_argument("empty limit schedule");
  LimitReport rep;
  const Eigen::Matrix4d phi = hamilton_matrix(p);
  std::vector<double> bs;
  for (const auto& pt : schedule) {
    const Constants k{pt.c, pt.b, 1.0};
    const Eigen::Matrix4d full = reciprocal_matrix(p, k);
    const Eigen::Matrix4d binf = reciprocal_binf_matrix(p, k);
    rep.err_vs_binf.push_back((full - binf).cwiseAbs().maxCoeff());
    rep.err_vs_hamilton.push_back((full - phi).cwiseAbs().maxCoeff());
    bs.push_back(pt.b);
  }
  rep.slope_vs_b = (schedule.size() >= 2 && rep.err_vs_binf.front() > 0.0)
                       ? loglog_slope(bs, rep.err_vs_binf)
                       : 0.0;
  return rep;
}

// The default geometric schedule b = 10^2 ... 10^6 at fixed c.
inline std::vector<LimitSchedulePoint> default_b_schedule(double c = 1.0) {
  std::vector<LimitSchedulePoint> s;
  for (double b = 1e2; b <= 1e6 + 1.0; b *= 10.0) s.push_back({c, b});
  return s;
}

// A joint schedule where both bounds grow, for the unipotent target.
inline std::vector<LimitSchedulePoint> default_joint_schedule() {
  std::vector<LimitSchedulePoint> s;
  for (double x = 1e1; x <= 1e5 + 1.0; x *= 10.0) s.push_back({x, x});
  return s;
}

}  // namespace quap
