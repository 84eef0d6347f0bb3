#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "quaplectic/catalog.hpp"
#include "quaplectic/fock.hpp"
#include "quaplectic/grid_oscillator.hpp"

using namespace quap;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

MatrixXcd comm(const MatrixXcd& a, const MatrixXcd& b) { return a * b - b * a; }

}  // namespace

TEST_CASE("bundle construction guards") {
  CHECK_THROWS_AS((void)build_rep(Signature{2, 1}, Truncation{8}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)build_rep(Signature{1, 1}, Truncation{3}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)build_rep(Signature{1, 1}, Truncation{8, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)build_rep(Signature{1, 1}, Truncation{8, 9}),
                  std::invalid_argument);
  // four modes at this cutoff blow past the dense-matrix budget
  CHECK_THROWS_AS((void)build_rep(Signature{1, 3}, Truncation{12}),
                  std::length_error);
  // eps block validation
  MatrixXcd bad = MatrixXcd::Zero(3, 3);
  CHECK_THROWS_AS((void)build_rep(Signature{1, 1}, Truncation{6}, bad),
                  std::invalid_argument);
  MatrixXcd nh = MatrixXcd::Zero(2, 2);
  nh(0, 1) = 1.0;
  CHECK_THROWS_AS((void)build_rep(Signature{1, 1}, Truncation{6}, nh),
                  std::invalid_argument);
}

TEST_CASE("single euclidean mode") {
  auto rep = build_rep(Signature{0, 1}, Truncation{8});
  CHECK(rep.dim == 9);
  // ladder adjointness holds as constructed, not just numerically
  CHECK((rep.zminus[0] - rep.zplus[0].adjoint()).norm() == 0.0);
  CHECK(interior_max(rep, comm(rep.zminus[0], rep.zplus[0]) - rep.identity) <
        1e-12);
  auto spec = interior_spectrum(rep, rep.number_op);
  CHECK(spec.method == "fock");
  for (int i = 0; i < spec.eigenvalues.size(); ++i)
    CHECK(spec.eigenvalues(i) == doctest::Approx(double(i)).epsilon(1e-12));
}

TEST_CASE("indefinite pairing flips the timelike ladder") {
  auto rep = build_rep(Signature{1, 1}, Truncation{10});
  CHECK(rep.signature.eta(0) == -1.0);
  CHECK(rep.signature.eta(1) == 1.0);
  CHECK(interior_max(rep, comm(rep.zminus[0], rep.zplus[0]) + rep.identity) <
        1e-12);
  CHECK(interior_max(rep, comm(rep.zminus[1], rep.zplus[1]) - rep.identity) <
        1e-12);
  // different tensor factors commute exactly, no projection needed
  CHECK(comm(rep.zplus[0], rep.zplus[1]).norm() == 0.0);
  CHECK(comm(rep.zminus[0], rep.zplus[1]).norm() == 0.0);
}

TEST_CASE("commutation relations across cutoffs") {
  for (int cutoff : {6, 8, 12}) {
    CAPTURE(cutoff);
    auto rep = build_rep(Signature{1, 1}, Truncation{cutoff});
    auto r = commutator_residuals(rep);
    CHECK(r.max_ccr < 1e-10);
    CHECK(r.max_ladder_ladder == 0.0);
    CHECK(r.max_unitary_ladder < 1e-10);
    CHECK(r.max_unitary_unitary < 1e-10);
    CHECK(r.max_w_ladder < 1e-10);
    // with no internal block the ordering defect operator vanishes
    CHECK(r.w_equals_minus_eps == 0.0);
    // dropping the ordering correction leaves an O(1) defect, so the
    // correction is load bearing
    CHECK(r.w_first_term_only > 1.0);
  }
}

TEST_CASE("number operator spectrum") {
  auto rep = build_rep(Signature{1, 1}, Truncation{10});
  auto spec = interior_spectrum(rep, rep.number_op);
  CHECK(spec.max_imag < 1e-12);
  // graded occupancy minus the timelike shift: integers from -9 to 7
  CHECK(spec.eigenvalues(0) == doctest::Approx(-9.0).epsilon(1e-12));
  CHECK(spec.eigenvalues(spec.eigenvalues.size() - 1) ==
        doctest::Approx(7.0).epsilon(1e-12));
  for (int i = 0; i < spec.eigenvalues.size(); ++i)
    CHECK(std::abs(spec.eigenvalues(i) - std::round(spec.eigenvalues(i))) <
          1e-12);

  // trivial internal block: the unitary-sector diagonal equals the number op
  CHECK((rep.u_op - rep.number_op).norm() == 0.0);

  // interior projector is idempotent and selects the window
  CHECK((rep.interior_projector * rep.interior_projector -
         rep.interior_projector)
            .norm() < 1e-14);
  CHECK(static_cast<int>(rep.interior.size()) == 9 * 9);
}

TEST_CASE("extended algebra maps onto the ladder representation") {
  // dictionary: A_ab -> -Z_ba, Z+_a -> Z+_a, Z-_a -> -Z-_a, I -> identity
  auto q = builtin_algebra("quaplectic11");
  auto rep = build_rep(Signature{1, 1}, Truncation{8});
  auto phi = [&](int idx) -> MatrixXcd {
    const std::string& nm = q.names()[idx];
    if (nm == "I") return rep.identity;
    int a = nm[nm.size() - 2] - '0', b = nm[nm.size() - 1] - '0';
    if (nm[0] == 'A') return -rep.zab[b][a];
    if (nm[0] == 'Z' && nm[1] == 'p') return rep.zplus[b];
    return -rep.zminus[b];
  };
  double worst = 0.0;
  for (int i = 0; i < q.dim(); ++i)
    for (int j = i + 1; j < q.dim(); ++j) {
      MatrixXcd lhs = comm(phi(i), phi(j));
      for (int g = 0; g < q.dim(); ++g) {
        double c = q.structure_constant(i, j, g);
        if (c != 0.0) lhs -= c * phi(g);
      }
      worst = std::max(worst, interior_max(rep, lhs));
    }
  CHECK(worst < 1e-10);
}

TEST_CASE("invariant chains with trivial internal block") {
  auto rep = build_rep(Signature{1, 1}, Truncation{10});
  auto cas = casimir_ops(rep);
  REQUIRE(cas.c_ops.size() == 4);
  REQUIRE(cas.d_ops.size() == 4);
  // the ordering defect vanishes identically, so every C chain is zero
  for (const auto& op : cas.c_ops) CHECK(op.mat.norm() == 0.0);
  CHECK(cas.max_mutual_commutator < 1e-8);
  CHECK(cas.max_c_generator_commutator < 1e-8);
  CHECK(cas.max_d_unitary_commutator < 1e-8);
  CHECK(cas.c2_crosscheck == 0.0);

  // D_1 is the number operator
  CHECK(interior_max(rep, cas.d_ops[0].mat - rep.number_op) < 1e-12);

  CHECK_THROWS_AS((void)casimir_ops(rep, 0), std::invalid_argument);
  CHECK_THROWS_AS((void)casimir_ops(rep, 5), std::invalid_argument);
}

TEST_CASE("invariant chains with a finite internal block") {
  MatrixXcd eps(2, 2);
  eps << std::complex<double>(0.7, 0.0), std::complex<double>(0.2, 0.3),
      std::complex<double>(0.2, -0.3), std::complex<double>(-0.4, 0.0);
  auto rep = build_rep(Signature{1, 1}, Truncation{8}, eps);
  auto cas = casimir_ops(rep, 3);

  // W = -eps, so each C chain is the scalar trace of a 2x2 power
  MatrixXcd eta = MatrixXcd::Zero(2, 2);
  eta(0, 0) = -1.0;
  eta(1, 1) = 1.0;
  MatrixXcd base = -eps * eta, pw = MatrixXcd::Identity(2, 2);
  for (int k = 1; k <= 3; ++k) {
    pw = pw * base;
    std::complex<double> scalar = pw.trace();
    CHECK(interior_max(rep, cas.c_ops[k - 1].mat - scalar * rep.identity) <
          1e-10);
  }
  // scalar chains stay central against every generator
  CHECK(cas.max_c_generator_commutator < 1e-8);
  // the shifted diagonal picks up the eta trace of the block
  std::complex<double> treps = (eta * eps).trace();
  CHECK((rep.u_op - rep.number_op - treps * rep.identity).norm() < 1e-13);
}

TEST_CASE("contracted chain identity") {
  auto rep = build_rep(Signature{1, 1}, Truncation{12});
  auto res = resolve_g_constant(rep);
  // one less than minus the mode count, not the total dimension
  CHECK(res.n == -1);
  CHECK(res.residual < 1e-10);
  for (int k = 1; k <= 4; ++k) CHECK(g_identity(rep, k) < 1e-9);
  // the competing label fails by an integer-sized margin
  CHECK(g_identity(rep, 2, 2) > 1.0);
  CHECK_THROWS_AS((void)g_identity(rep, 0), std::invalid_argument);

  auto rep3 = build_rep(Signature{1, 2}, Truncation{6});
  CHECK(resolve_g_constant(rep3).n == -2);
  CHECK(g_identity(rep3, 2) < 1e-10);
}

TEST_CASE("wave operators") {
  auto rep = build_rep(Signature{1, 1}, Truncation{8});
  auto w1 = wave_operator(rep, 1);
  CHECK(w1.label == "wave1");
  CHECK((w1.mat - rep.number_op).norm() == 0.0);

  // trivial internal block: the second-order operator collapses to zero
  auto w2 = wave_operator(rep, 2);
  CHECK(w2.mat.norm() == 0.0);

  MatrixXcd eps(2, 2);
  eps << std::complex<double>(1.0, 0.0), std::complex<double>(0.3, 0.4),
      std::complex<double>(0.3, -0.4), std::complex<double>(2.0, 0.0);
  auto w2e = wave_operator(rep, 2, eps);
  CHECK((w2e.mat - w2e.mat.adjoint()).cwiseAbs().maxCoeff() < 1e-13);
  CHECK(w2e.mat.norm() > 0.0);
  // third order exists but carries no hermiticity guarantee
  CHECK(wave_operator(rep, 3, eps).mat.rows() == rep.dim);

  CHECK_THROWS_AS((void)wave_operator(rep, 5), std::invalid_argument);
  MatrixXcd bad = MatrixXcd::Zero(3, 3);
  CHECK_THROWS_AS((void)wave_operator(rep, 2, bad), std::invalid_argument);
}

TEST_CASE("frequency labels") {
  CHECK(f_label_check(0.0, 0.0, 0.0, 0.0, 3.0) == 0.0);
  CHECK(f_label_check(0.0, 0.0, 2.0, 4.0, 2.0) == 2.0);

  // spectral consistency: with a trivial block the second-order operator is
  // zero, and the label formula agrees on every number eigenvalue
  auto rep = build_rep(Signature{1, 1}, Truncation{10});
  CHECK(wave_operator(rep, 2).mat.norm() == 0.0);
  auto spec = interior_spectrum(rep, rep.number_op);
  for (int i = 0; i < spec.eigenvalues.size(); ++i) {
    double nu = spec.eigenvalues(i);
    CHECK(std::abs(f_label_check(0.0, 0.0, nu, nu * (nu + 1.0), -1.0)) < 1e-9);
  }
}

TEST_CASE("grid oscillator ladder") {
  VectorXd lv = grid_oscillator_levels(8.0, 201, 5);
  for (int i = 0; i < 5; ++i)
    CHECK(std::abs(lv(i) - (2 * i + 1)) < 2e-4);

  // the second-order stencil misses the same target at the same resolution
  const int pts = 201;
  const double h = 16.0 / (pts - 1);
  MatrixXd t = MatrixXd::Zero(pts, pts);
  for (int i = 0; i < pts; ++i) {
    double x = -8.0 + i * h;
    t(i, i) = 2.0 / (h * h) + x * x;
    if (i + 1 < pts) t(i, i + 1) = t(i + 1, i) = -1.0 / (h * h);
  }
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(t);
  double worst3 = 0.0;
  for (int i = 0; i < 5; ++i)
    worst3 = std::max(worst3, std::abs(es.eigenvalues()(i) - (2 * i + 1)));
  CHECK(worst3 > 1e-2);

  CHECK_THROWS_AS((void)grid_oscillator_levels(8.0, 3, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)grid_oscillator_levels(8.0, 10, 11),
                  std::invalid_argument);
}

TEST_CASE("indefinite spectrum by separation") {
  auto grid = oscillator_spectrum_grid(8.0, 201);
  CHECK(grid.method == "grid");
  CHECK(grid.eigenvalues.size() == 25);
  for (int i = 1; i < grid.eigenvalues.size(); ++i)
    CHECK(grid.eigenvalues(i) >= grid.eigenvalues(i - 1));
  // differences of odd ladders are even integers
  for (int i = 0; i < grid.eigenvalues.size(); ++i) {
    double v = grid.eigenvalues(i);
    CHECK(std::abs(v - 2.0 * std::round(v / 2.0)) < 2e-3);
  }

  CHECK_THROWS_AS((void)oscillator_spectrum_grid(5.0, 201),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)oscillator_spectrum_grid(8.0, 95),
                  std::invalid_argument);

  // lowest distinct differences coincide with the 2N + 2 ladder spectrum
  auto rep = build_rep(Signature{1, 1}, Truncation{12});
  CHECK(fock_grid_agreement(rep, grid) < 1e-3);
}
