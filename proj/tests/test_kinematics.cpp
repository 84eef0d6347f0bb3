#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>

#include "quaplectic/constants.hpp"
#include "quaplectic/frame.hpp"
#include "quaplectic/limits.hpp"
#include "quaplectic/metrics.hpp"
#include "quaplectic/transforms.hpp"

using namespace quap;
using Eigen::Matrix4d;
using Eigen::Vector4d;

namespace {

double form_residual(const Matrix4d& m, const Matrix4d& g) {
  return (m.transpose() * g * m - g).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("gamma factors") {
  Constants k;
  CHECK(gamma_factors(FrameParams{0.6, 0.0, 0.0}, k).gamma0 ==
        doctest::Approx(1.25).epsilon(1e-15));
  CHECK(gamma_factors(FrameParams{}, k).gamma == 1.0);

  // full factor reduces to the inertial one when f = r = 0
  auto g = gamma_factors(FrameParams{0.6, 0.0, 0.0}, k);
  CHECK(g.gamma == doctest::Approx(g.gamma0).epsilon(1e-15));

  // force shrinks the radicand, curvature restores it
  CHECK(gamma_factors(FrameParams{0.9, 0.4, 0.0}, k).gamma >
        gamma_factors(FrameParams{0.9, 0.0, 0.0}, k).gamma);
  CHECK(gamma_factors(FrameParams{0.9, 0.4, 0.4}, k).gamma <
        gamma_factors(FrameParams{0.9, 0.4, 0.0}, k).gamma);

  CHECK_THROWS_AS((void)gamma_factors(FrameParams{1.0, 0.0, 0.0}, k),
                  std::domain_error);
  CHECK_THROWS_AS((void)gamma_factors(FrameParams{1.5, 0.0, 0.0}, k),
                  std::domain_error);
  // on the null surface the radicand vanishes
  CHECK_THROWS_AS((void)gamma_factors(FrameParams{0.6, 0.8, 0.0}, k),
                  std::domain_error);
}

TEST_CASE("metric forms") {
  Constants k{2.0, 3.0, 1.0};
  Matrix4d g = born_green_metric(k);
  Eigen::SelfAdjointEigenSolver<Matrix4d> es(g);
  int pos = 0, neg = 0;
  for (int i = 0; i < 4; ++i) (es.eigenvalues()(i) > 0 ? pos : neg)++;
  CHECK(pos == 2);
  CHECK(neg == 2);

  Matrix4d z = symplectic_form();
  CHECK((z + z.transpose()).norm() == 0.0);
  CHECK(std::abs(z.determinant()) == doctest::Approx(1.0).epsilon(1e-14));

  CHECK(nonrel_time_metric()(0, 0) == -1.0);
  CHECK(nonrel_time_metric().cwiseAbs().sum() == 1.0);

  auto pair = sr_pair(k);
  CHECK(pair[0](0, 0) == -1.0);
  CHECK(pair[0](1, 1) == doctest::Approx(0.25));
  CHECK(pair[1](2, 2) == 1.0);
  CHECK(pair[1](3, 3) == doctest::Approx(-0.25));
}

TEST_CASE("inertial transform") {
  Constants k;
  Matrix4d lam = lorentz_matrix(0.8, k);
  CHECK(lam(0, 0) ==
        doctest::Approx(gamma_factors(FrameParams{0.8, 0.0, 0.0}, k).gamma0)
            .epsilon(1e-15));
  CHECK(form_residual(lam, born_green_metric(k)) < 1e-14);
  CHECK(form_residual(lam, symplectic_form()) < 1e-14);
  auto pair = sr_pair(k);
  CHECK(form_residual(lam, pair[0]) < 1e-14);
  CHECK(form_residual(lam, pair[1]) < 1e-14);

  // velocity-only bounded-rate transform is exactly the inertial one
  for (double v = -0.9; v < 0.95; v += 0.1) {
    auto t = build_transform(TransformKind::reciprocal, FrameParams{v, 0.0, 0.0}, k);
    CHECK((t.matrix - lorentz_matrix(v, k)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("transform invariants") {
  Constants k;
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> u(-0.45, 0.45);
  for (int trial = 0; trial < 200; ++trial) {
    FrameParams p{u(rng), u(rng), u(rng)};
    auto rec = invariance_residuals(
        build_transform(TransformKind::reciprocal, p, k), k);
    CHECK(rec.born_green < 1e-12);
    CHECK(rec.symplectic < 1e-12);

    auto ham = invariance_residuals(
        build_transform(TransformKind::hamilton, p, k), k);
    CHECK(ham.symplectic < 1e-14);
    CHECK(ham.nonrel < 1e-14);
  }

  // the first degenerate line element survives the b -> infinity family
  auto binf = build_transform(TransformKind::reciprocal_binf,
                              FrameParams{0.4, 0.3, 0.2}, k);
  CHECK(form_residual(binf.matrix, sr_pair(k)[0]) < 1e-12);
  CHECK(form_residual(binf.matrix, symplectic_form()) < 1e-12);

  // force mixes time into momentum, so the full metric is not preserved
  auto ham = build_transform(TransformKind::hamilton, FrameParams{0.0, 1.5, 0.0}, k);
  CHECK(form_residual(ham.matrix, born_green_metric(k)) > 1.0);
}

TEST_CASE("unipotent matrices square to identity plus nothing") {
  FrameParams p{2.0, -3.0, 5.0};
  Matrix4d n = hamilton_matrix(p) - Matrix4d::Identity();
  CHECK((n * n).norm() == 0.0);
}

TEST_CASE("unipotent composition is exact") {
  Constants k;
  // (4, 5, 6) applied first, then (1, 2, 3)
  FrameParams first{4.0, 5.0, 6.0};
  FrameParams second{1.0, 2.0, 3.0};
  auto c = compose(TransformKind::hamilton, second, first, k);
  CHECK(c.v == 5.0);
  CHECK(c.f == 7.0);
  CHECK(c.r == 12.0);

  // matrix product against the closed form, exact for integer inputs
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      FrameParams q1{double(a), double(b), double(a - b)};
      FrameParams q2{double(b), double(-a), double(a + b)};
      auto got = extract_params(Matrix4d(hamilton_matrix(q1) * hamilton_matrix(q2)));
      auto want = compose(TransformKind::hamilton, q2, q1, k);
      CHECK(got.v == want.v);
      CHECK(got.f == want.f);
      CHECK(got.r == want.r);
    }
}

TEST_CASE("composition matches matrix products") {
  Constants k;
  std::mt19937_64 rng(72);
  std::uniform_real_distribution<double> u(-0.4, 0.4);
  for (auto kind : {TransformKind::reciprocal, TransformKind::reciprocal_binf,
                    TransformKind::lorentz, TransformKind::hamilton}) {
    for (int trial = 0; trial < 100; ++trial) {
      FrameParams p1{u(rng), u(rng), u(rng)};
      FrameParams p2{u(rng), u(rng), u(rng)};
      if (kind == TransformKind::lorentz) p1.f = p1.r = p2.f = p2.r = 0.0;
      Matrix4d prod =
          build_transform(kind, p1, k).matrix * build_transform(kind, p2, k).matrix;
      auto got = extract_params(prod);
      auto want = compose(kind, p2, p1, k);
      CHECK(std::abs(got.v - want.v) < 1e-12 * std::max(1.0, std::abs(want.v)));
      CHECK(std::abs(got.f - want.f) < 1e-12 * std::max(1.0, std::abs(want.f)));
      CHECK(std::abs(got.r - want.r) < 1e-12 * std::max(1.0, std::abs(want.r)));
    }
  }
}

TEST_CASE("composition guards") {
  Constants k;
  // in-domain pair whose composition denominator vanishes
  FrameParams p1{0.0, 0.0, 10.0};
  FrameParams p2{0.0, 0.0, 0.1};
  CHECK_NOTHROW((void)gamma_factors(p1, k));
  CHECK_THROWS_AS((void)compose(TransformKind::reciprocal, p2, p1, k),
                  std::domain_error);
  CHECK_THROWS_AS((void)extract_params(Matrix4d(Matrix4d::Zero())),
                  std::domain_error);
}

TEST_CASE("transform kind names") {
  CHECK(transform_kind_from_string("reciprocal") == TransformKind::reciprocal);
  CHECK(transform_kind_from_string("binf") == TransformKind::reciprocal_binf);
  CHECK(transform_kind_from_string("reciprocal_binf") ==
        TransformKind::reciprocal_binf);
  CHECK(transform_kind_from_string("lorentz") == TransformKind::lorentz);
  CHECK(transform_kind_from_string("hamilton") == TransformKind::hamilton);
  CHECK_THROWS_AS((void)transform_kind_from_string("galileo"),
                  std::invalid_argument);
}

TEST_CASE("proper rate transformation") {
  Constants k;
  RateVector d{1.0, 0.0, 0.0};
  // velocity-only frames recover the cubic inertial rate law
  auto out = rates_transform(FrameParams{0.6, 0.0, 0.0}, d, k);
  double g0 = gamma_factors(FrameParams{0.6, 0.0, 0.0}, k).gamma0;
  CHECK(out.dv_dt == doctest::Approx(g0 * g0 * g0).epsilon(1e-14));
  CHECK(out.df_dt == 0.0);
  CHECK(out.dr_dt == 0.0);

  // linear in the rates
  FrameParams p{0.3, 0.2, 0.1};
  RateVector d2{-0.7, 0.4, 1.1};
  auto a = rates_transform(p, d, k);
  auto b = rates_transform(p, d2, k);
  auto c = rates_transform(p, RateVector{d.dv_dt + d2.dv_dt, d.df_dt + d2.df_dt,
                                         d.dr_dt + d2.dr_dt}, k);
  CHECK(c.dv_dt == doctest::Approx(a.dv_dt + b.dv_dt).epsilon(1e-13));
  CHECK(c.df_dt == doctest::Approx(a.df_dt + b.df_dt).epsilon(1e-13));
  CHECK(c.dr_dt == doctest::Approx(a.dr_dt + b.dr_dt).epsilon(1e-13));
}

TEST_CASE("null surface") {
  Constants k;
  auto rep = null_surface(FrameParams{0.6, 0.8, 0.0}, k);
  CHECK(rep.residual == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(rep.is_fixed_point);

  CHECK(!null_surface(FrameParams{0.5, 0.0, 0.0}, k).is_fixed_point);
  CHECK(null_surface(FrameParams{0.3, 0.4, 0.0}, k).residual ==
        doctest::Approx(0.09 + 0.16 - 1.0).epsilon(1e-14));

  // curvature pushes the point off the surface entirely
  CHECK(std::isinf(null_surface(FrameParams{0.6, 0.8, 0.5}, k).residual));

  // surface points are fixed under formula-level self-composition
  for (int i = 0; i < 36; ++i) {
    double th = i * (3.14159265358979323846 / 18.0);
    FrameParams p{std::cos(th), std::sin(th), 0.0};
    auto q = compose(TransformKind::reciprocal, p, p, k);
    CHECK(std::abs(q.v - p.v) < 1e-14);
    CHECK(std::abs(q.f - p.f) < 1e-14);
    CHECK(std::abs(q.r - p.r) < 1e-14);
  }
}

TEST_CASE("limiting regimes") {
  FrameParams p{0.5, 0.3, 0.1};
  auto rep = limit_check(p, default_b_schedule());
  CHECK(rep.slope_vs_b == doctest::Approx(-2.0).epsilon(0.02));
  CHECK(rep.err_vs_binf.back() < 1e-10);
  for (std::size_t i = 1; i < rep.err_vs_binf.size(); ++i)
    CHECK(rep.err_vs_binf[i] < rep.err_vs_binf[i - 1]);

  auto joint = limit_check(p, default_joint_schedule());
  for (std::size_t i = 1; i < joint.err_vs_hamilton.size(); ++i)
    CHECK(joint.err_vs_hamilton[i] < joint.err_vs_hamilton[i - 1]);
  CHECK(joint.err_vs_hamilton.back() < 1e-8);

  CHECK_THROWS_AS((void)limit_check(p, {}), std::invalid_argument);
}

TEST_CASE("integrated frame") {
  FrameParams p{0.2, -0.4, 0.7};
  auto fr = integrate_frame(p);
  CHECK((fr.jacobian - hamilton_matrix(p)).norm() == 0.0);
  CHECK(fr.offset.norm() == 0.0);
  CHECK(fr.residuals.norm() == 0.0);

  Vector4d x(1.0, 2.0, 3.0, 4.0);
  CHECK((map_point(fr, x) - fr.jacobian * x).norm() == 0.0);
  // e' = e + v p - f q + r t
  CHECK(map_point(fr, x)(3) ==
        doctest::Approx(4.0 + 0.2 * 3.0 + 0.4 * 2.0 + 0.7 * 1.0).epsilon(1e-15));
}

TEST_CASE("characteristic scales") {
  auto s = scales(Constants{});
  CHECK(s.lambda_t == 1.0);
  CHECK(s.lambda_q == 1.0);
  CHECK(s.lambda_p == 1.0);
  CHECK(s.lambda_e == 1.0);

  Constants k{2.99792458e8, 1.0e22, 1.054571817e-34};
  auto u = scales(k);
  // conjugate pairs multiply to the action scale, ratios give the bounds
  CHECK(u.lambda_t * u.lambda_e == doctest::Approx(k.hbar).epsilon(1e-12));
  CHECK(u.lambda_q * u.lambda_p == doctest::Approx(k.hbar).epsilon(1e-12));
  CHECK(u.lambda_q / u.lambda_t == doctest::Approx(k.c).epsilon(1e-12));
  CHECK(u.lambda_p / u.lambda_t == doctest::Approx(k.b).epsilon(1e-12));

  CHECK_THROWS_AS((void)scales(Constants{-1.0, 1.0, 1.0}), std::invalid_argument);
}
