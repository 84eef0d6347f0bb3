#pragma once

#include <Eigen/Dense>

#include "quaplectic/fock.hpp"

namespace quap {

// Lowest `count` eigenvalues of -d^2/dx^2 + x^2 on [-half_width, half_width]
// with a fourth-order five-point stencil and zero boundary conditions. The
// three-point stencil misses the 1e-3 target at 201 points, the five-point
// one clears it with margin.
Eigen::VectorXd grid_oscillator_levels(double half_width, int points, int count);

// Indefinite two-mode oscillator spectrum by separation of variables: the
// operator splits into two positive 1-D oscillators whose eigenvalues
// subtract, so no hyperbolic 2-D eigensolve (with its spectral pollution) is
// ever formed. Returns all pairwise differences E_q - E_t of the lowest
// levels_per_axis 1-D eigenvalues, sorted ascending.
//
// Throws on half_width < 6 or points_per_axis < 101 (validation), and when
// the 1-D ladder {1, 3, 5, 7, 9} is not reproduced to 1e-3 (resolution).
SpectrumReport oscillator_spectrum_grid(double half_width, int points_per_axis,
                                        int levels_per_axis = 5);

// Cross-method agreement: distance from each of the first `count` distinct
// grid differences to the nearest eigenvalue of 2N + 2 on the interior of a
// (1,1) bundle; returns the worst case.
double fock_grid_agreement(const RepresentationBundle& rep,
                           const SpectrumReport& grid, int count = 5);

}  // namespace quap
