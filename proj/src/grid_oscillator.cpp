#include "quaplectic/grid_oscillator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace quap {

Eigen::VectorXd grid_oscillator_levels(double half_width, int points, int count) {
  if (half_width <= 0.0 || points < 5 || count < 1 || count > points)
    throw std::invalid_argument("bad grid parameters");
  const double h = 2.0 * half_width / (points - 1);
  const double h2 = h * h;
  Eigen::MatrixXd op = Eigen::MatrixXd::Zero(points, points);
  for (int i = 0; i < points; ++i) {
    const double x = -half_width + i * h;
    op(i, i) = 2.5 / h2 + x * x;
    if (i + 1 < points) op(i, i + 1) = op(i + 1, i) = -4.0 / (3.0 * h2);
    if (i + 2 < points) op(i, i + 2) = op(i + 2, i) = 1.0 / (12.0 * h2);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(op);
  return es.eigenvalues().head(count);
}

SpectrumReport oscillator_spectrum_grid(double half_width, int points_per_axis,
                                        int levels_per_axis) {
  if (half_width < 6.0)
    throw std::invalid_argument("half width below 6 lets eigenfunctions touch the boundary");
  if (points_per_axis < 101)
    throw std::invalid_argument("need at least 101 points per axis");
  if (levels_per_axis < 1)
    throw std::invalid_argument("need at least one level per axis");
  const Eigen::VectorXd levels = grid_oscillator_levels(
      half_width, points_per_axis, std::max(levels_per_axis, 5));
  for (int i = 0; i < 5; ++i)
    if (std::abs(levels(i) - (2.0 * i + 1.0)) > 1e-3)
      throw std::runtime_error("grid resolution too coarse for the oscillator ladder");
  SpectrumReport report;
  report.method = "grid";
  report.max_imag = 0.0;
  report.eigenvalues.resize(levels_per_axis * levels_per_axis);
  int k = 0;
  for (int it = 0; it < levels_per_axis; ++it)
    for (int iq = 0; iq < levels_per_axis; ++iq)
      report.eigenvalues(k++) = levels(iq) - levels(it);
  std::sort(report.eigenvalues.data(),
            report.eigenvalues.data() + report.eigenvalues.size());
  return report;
}

double fock_grid_agreement(const RepresentationBundle& rep,
                           const SpectrumReport& grid, int count) {
  const Eigen::MatrixXcd op = 2.0 * rep.number_op + 2.0 * rep.identity;
  const Eigen::VectorXd fock = interior_spectrum(rep, op).eigenvalues;
  double worst = 0.0;
  int matched = 0;
  double last = 0.0;
  for (Eigen::Index i = 0; i < grid.eigenvalues.size() && matched < count; ++i) {
    const double g = grid.eigenvalues(i);
    if (matched > 0 && std::abs(g - last) < 0.5) continue;  // degenerate copy
    last = g;
    ++matched;
    double dist = std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j < fock.size(); ++j)
      dist = std::min(dist, std::abs(g - fock(j)));
    worst = std::max(worst, dist);
  }
  return worst;
}

}  // namespace quap
