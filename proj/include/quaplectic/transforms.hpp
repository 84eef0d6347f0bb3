#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "quaplectic/constants.hpp"
#include "quaplectic/frame.hpp"
#include "quaplectic/metrics.hpp"

namespace quap {

// The four transformation families on (t, q, p, e):
//   lorentz          inertial boost acting block-diagonally on (t,q) and (p,e)
//   hamilton         nonrelativistic noninertial (unipotent) transformations
//   reciprocal       noninertial transformations bounded by both c and b
//   reciprocal_binf  the b -> infinity members, bounded by c only
enum class TransformKind { lorentz, hamilton, reciprocal, reciprocal_binf };

inline const char* to_string(TransformKind kind) {
  switch (kind) {
    case TransformKind::lorentz: return "lorentz";
    case TransformKind::hamilton: return "hamilton";
    case TransformKind::reciprocal: return "reciprocal";
    case TransformKind::reciprocal_binf: return "reciprocal_binf";
  }
  return "?";
}

inline TransformKind transform_kind_from_string(const std::string& s) {
  if (s == "lorentz") return TransformKind::lorentz;
  if (s == "hamilton") return TransformKind::hamilton;
  if (s == "reciprocal") return TransformKind::reciprocal;
  if (s == "reciprocal_binf" || s == "binf") return TransformKind::reciprocal_binf;
  throw std::invalid_argument("unknown transform kind: " + s);
}

template <typename Scalar>
using Matrix4 = Eigen::Matrix<Scalar, 4, 4>;

// Cotangent frame components in the fixed (t, q, p, e) ordering.
template <typename Scalar = double>
struct PhaseFrameT {
  Scalar dt{0}, dq{0}, dp{0}, de{0};

  Eigen::Matrix<Scalar, 4, 1> vec() const {
    return Eigen::Matrix<Scalar, 4, 1>(dt, dq, dp, de);
  }
  static PhaseFrameT from_vec(const Eigen::Matrix<Scalar, 4, 1>& x) {
    return {x(0), x(1), x(2), x(3)};
  }
};
using PhaseFrame = PhaseFrameT<double>;

template <typename Scalar>
Matrix4<Scalar> lorentz_matrix(Scalar v, const Constants& k) {
  const Scalar g = gamma_factors(FrameParamsT<Scalar>{v, Scalar(0), Scalar(0)}, k).gamma0;
  const Scalar c2 = Scalar(k.c) * Scalar(k.c);
  Matrix4<Scalar> m = Matrix4<Scalar>::Zero();
  m(0, 0) = 1; m(0, 1) = v / c2;
  m(1, 0) = v; m(1, 1) = 1;
  m(2, 2) = 1; m(2, 3) = v / c2;
  m(3, 2) = v; m(3, 3) = 1;
  return g * m;
}

// Unipotent matrix: unit diagonal, first column (1, v, f, r), last row
// (r, -f, v, 1). Exponential of the nilpotent generator v V + f F + r R.
template <typename Scalar>
Matrix4<Scalar> hamilton_matrix(const FrameParamsT<Scalar>& p) {
  Matrix4<Scalar> m = Matrix4<Scalar>::Identity();
  m(1, 0) = p.v;
  m(2, 0) = p.f;
  m(3, 0) = p.r;
  m(3, 1) = -p.f;
  m(3, 2) = p.v;
  return m;
}

template <typename Scalar>
Matrix4<Scalar> reciprocal_matrix(const FrameParamsT<Scalar>& p, const Constants& k) {
  const Scalar g = gamma_factors(p, k).gamma;
  const Scalar c2 = Scalar(k.c) * Scalar(k.c);
  const Scalar b2 = Scalar(k.b) * Scalar(k.b);
  Matrix4<Scalar> m;
  m << Scalar(1), p.v / c2, p.f / b2, -p.r / (b2 * c2),
       p.v, Scalar(1), p.r / b2, -p.f / b2,
       p.f, -p.r / c2, Scalar(1), p.v / c2,
       p.r, -p.f, p.v, Scalar(1);
  return g * m;
}

template <typename Scalar>
Matrix4<Scalar> reciprocal_binf_matrix(const FrameParamsT<Scalar>& p, const Constants& k) {
  const Scalar g = gamma_factors(FrameParamsT<Scalar>{p.v, Scalar(0), Scalar(0)}, k).gamma0;
  const Scalar c2 = Scalar(k.c) * Scalar(k.c);
  Matrix4<Scalar> m;
  m << Scalar(1), p.v / c2, Scalar(0), Scalar(0),
       p.v, Scalar(1), Scalar(0), Scalar(0),
       p.f, -p.r / c2, Scalar(1), p.v / c2,
       p.r, -p.f, p.v, Scalar(1);
  return g * m;
}

template <typename Scalar = double>
struct TransformT {
  TransformKind kind;
  FrameParamsT<Scalar> params;
  Matrix4<Scalar> matrix;
};
using Transform = TransformT<double>;

// lorentz uses params.v only; hamilton needs no gamma factor.
template <typename Scalar>
TransformT<Scalar> build_transform(TransformKind kind, const FrameParamsT<Scalar>& p,
                                   const Constants& k) {
  switch (kind) {
    case TransformKind::lorentz:
      return {kind, {p.v, Scalar(0), Scalar(0)}, lorentz_matrix(p.v, k)};
    case TransformKind::hamilton:
      return {kind, p, hamilton_matrix(p)};
    case TransformKind::reciprocal:
      return {kind, p, reciprocal_matrix(p, k)};
    case TransformKind::reciprocal_binf:
      return {kind, p, reciprocal_binf_matrix(p, k)};
  }
  throw std::logic_error("unreachable");
}

template <typename Scalar>
PhaseFrameT<Scalar> apply_transform(const TransformT<Scalar>& t,
                                    const PhaseFrameT<Scalar>& frame) {
  return PhaseFrameT<Scalar>::from_vec(t.matrix * frame.vec());
}

// First column of every family is the overall factor times (1, v, f, r).
template <typename Scalar>
FrameParamsT<Scalar> extract_params(const Matrix4<Scalar>& m) {
  const Scalar s = m(0, 0);
  if (s == Scalar(0)) throw std::domain_error("degenerate transform matrix");
  return {m(1, 0) / s, m(2, 0) / s, m(3, 0) / s};
}

// Closed-form composition laws. Matrix consistency, valid inside the gamma
// domain for every kind:
//   build(p1).matrix * build(p2).matrix == build(compose(p2, p1)).matrix
// i.e. p1 fills the single-primed slots of the law and p2 the double-primed.
template <typename Scalar>
FrameParamsT<Scalar> compose(TransformKind kind, const FrameParamsT<Scalar>& p2,
                             const FrameParamsT<Scalar>& p1, const Constants& k) {
  const Scalar c2 = Scalar(k.c) * Scalar(k.c);
  const Scalar b2 = Scalar(k.b) * Scalar(k.b);
  switch (kind) {
    case TransformKind::lorentz: {
      const Scalar d = Scalar(1) + p1.v * p2.v / c2;
      if (std::abs(d) <= Scalar(1e-15)) throw std::domain_error("singular composition");
      return {(p1.v + p2.v) / d, Scalar(0), Scalar(0)};
    }
    case TransformKind::hamilton:
      return {p1.v + p2.v, p1.f + p2.f, p1.r + p2.r + p1.v * p2.f - p1.f * p2.v};
    case TransformKind::reciprocal: {
      const Scalar d = Scalar(1) + p1.v * p2.v / c2 + p1.f * p2.f / b2 -
                       p1.r * p2.r / (b2 * c2);
      if (std::abs(d) <= Scalar(1e-15)) throw std::domain_error("singular composition");
      return {(p2.v + p1.v + (p1.r * p2.f - p1.f * p2.r) / b2) / d,
              (p2.f + p1.f + (p1.v * p2.r - p1.r * p2.v) / c2) / d,
              (p2.r + p1.r - p1.f * p2.v + p1.v * p2.f) / d};
    }
    case TransformKind::reciprocal_binf: {
      const Scalar d = Scalar(1) + p1.v * p2.v / c2;
      if (std::abs(d) <= Scalar(1e-15)) throw std::domain_error("singular composition");
      return {(p2.v + p1.v) / d,
              (p2.f + p1.f + (p1.v * p2.r - p1.r * p2.v) / c2) / d,
              (p2.r + p1.r - p1.f * p2.v + p1.v * p2.f) / d};
    }
  }
  throw std::logic_error("unreachable");
}

// Proper-rate transformation with the cubic gamma prefactor. With f = r = 0
// it reduces to the inertial dv'/dt' = gamma0^3 dv/dt.
template <typename Scalar>
RateVectorT<Scalar> rates_transform(const FrameParamsT<Scalar>& p,
                                    const RateVectorT<Scalar>& rates,
                                    const Constants& k) {
  const Scalar g = gamma_factors(p, k).gamma;
  const Scalar g3 = g * g * g;
  const Scalar c2 = Scalar(k.c) * Scalar(k.c);
  const Scalar b2 = Scalar(k.b) * Scalar(k.b);
  return {g3 * (rates.dv_dt + (p.f * rates.dr_dt - p.r * rates.df_dt) / b2),
          g3 * (rates.df_dt + (p.v * rates.dr_dt - p.r * rates.dv_dt) / c2),
          g3 * (rates.dr_dt - p.f * rates.dv_dt + p.v * rates.df_dt)};
}

struct InvarianceResiduals {
  double born_green;
  double symplectic;
  double nonrel;
};

// Max-norm residuals of T^t M T - M for the three candidate invariant forms.
inline InvarianceResiduals invariance_residuals(const Transform& t, const Constants& k) {
  auto res = [&](const Eigen::Matrix4d& m) {
    return (t.matrix.transpose() * m * t.matrix - m).cwiseAbs().maxCoeff();
  };
  return {res(born_green_metric(k)), res(symplectic_form()), res(nonrel_time_metric())};
}

struct NullSurfaceReport {
  double residual;      // v^2/c^2 + f^2/b^2 - 1, or +inf when r != 0
  bool is_fixed_point;  // self-composition (formula level) returns the params
};

// The boundary locus v^2/c^2 + f^2/b^2 = 1, r = 0 where gamma diverges.
// Points on it are fixed under formula-level self-composition even though no
// matrix exists there.
inline NullSurfaceReport null_surface(const FrameParams& p, const Constants& k) {
  const double c2 = k.c * k.c, b2 = k.b * k.b;
  NullSurfaceReport rep;
  rep.residual = (p.r != 0.0) ? std::numeric_limits<double>::infinity()
                              : p.v * p.v / c2 + p.f * p.f / b2 - 1.0;
  try {
    const FrameParams q = compose(TransformKind::reciprocal, p, p, k);
    rep.is_fixed_point = std::abs(q.v - p.v) < 1e-14 && std::abs(q.f - p.f) < 1e-14 &&
                         std::abs(q.r - p.r) < 1e-14;
  } catch (const std::domain_error&) {
    rep.is_fixed_point = false;
  }
  return rep;
}

// Global (integrated) noninertial coordinate change with all integration
// constants set to zero:
//   t' = t,  q' = q + v t,  p' = p + f t,  e' = e + v p - f q + r t.
// Its Jacobian is the unipotent matrix of the same parameters.
struct IntegratedFrame {
  Eigen::Matrix4d jacobian;
  Eigen::Vector4d offset;
  Eigen::Vector3d residuals;  // d(q')/dt - v, d(p')/dt - f, d(e')/dt - r
};

inline IntegratedFrame integrate_frame(const FrameParams& p) {
  IntegratedFrame out;
  out.jacobian = hamilton_matrix(p);
  out.offset = Eigen::Vector4d::Zero();
  out.residuals = Eigen::Vector3d(out.jacobian(1, 0) - p.v, out.jacobian(2, 0) - p.f,
                                  out.jacobian(3, 0) - p.r);
  return out;
}

inline Eigen::Vector4d map_point(const IntegratedFrame& fr, const Eigen::Vector4d& x) {
  return fr.jacobian * x + fr.offset;
}

}  // namespace quap
