#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>
#include <complex>
#include <random>
#include <stdexcept>

#include "quaplectic/constants.hpp"
#include "quaplectic/frame.hpp"

namespace quap {

// Indefinite inner product diag(-1, 1, 1, 1) for the complex 4-space.
inline Eigen::Matrix4d unitary_metric() {
  Eigen::Matrix4d eta = Eigen::Matrix4d::Identity();
  eta(0, 0) = -1.0;
  return eta;
}

inline double eta_unitarity_residual(const Eigen::Matrix4cd& u) {
  const Eigen::Matrix4d eta = unitary_metric();
  return (u.adjoint() * eta.cast<std::complex<double>>() * u -
          eta.cast<std::complex<double>>())
      .cwiseAbs()
      .maxCoeff();
}

// Group element (Upsilon, z, iota): an eta-unitary rotation block, a complex
// translation 4-vector, and a central phase parameter. Realized as a 6x6
// complex matrix
//   [ Upsilon      0   Upsilon z ]
//   [ z^dag eta    1   iota      ]
//   [ 0            0   1         ]
// The eta pairing in the bottom row is what closes the pattern under
// multiplication. iota is real for directly constructed elements; products
// accumulate the complex pairing z1^dag eta Upsilon2 z2, so it is stored
// complex.
class QuaplecticElement {
 public:
  static constexpr double kEtaUnitaryTol = 1e-10;

  QuaplecticElement()
      : upsilon_(Eigen::Matrix4cd::Identity()),
        z_(Eigen::Vector4cd::Zero()),
        iota_(0.0) {}

  QuaplecticElement(const Eigen::Matrix4cd& upsilon, const Eigen::Vector4cd& z,
                    std::complex<double> iota)
      : upsilon_(upsilon), z_(z), iota_(iota) {
    if (eta_unitarity_residual(upsilon_) > kEtaUnitaryTol)
      throw std::invalid_argument("rotation block is not eta-unitary");
  }

  const Eigen::Matrix4cd& upsilon() const { return upsilon_; }
  const Eigen::Vector4cd& z() const { return z_; }
  std::complex<double> iota() const { return iota_; }

  Eigen::Matrix<std::complex<double>, 6, 6> realized() const {
    Eigen::Matrix<std::complex<double>, 6, 6> m =
        Eigen::Matrix<std::complex<double>, 6, 6>::Zero();
    const Eigen::Matrix4cd eta = unitary_metric().cast<std::complex<double>>();
    m.block<4, 4>(0, 0) = upsilon_;
    m.block<4, 1>(0, 5) = upsilon_ * z_;
    m.block<1, 4>(4, 0) = z_.adjoint() * eta;
    m(4, 4) = 1.0;
    m(4, 5) = iota_;
    m(5, 5) = 1.0;
    return m;
  }

  // eta-unitarity gives the cheap exact inverse of the rotation block.
  Eigen::Matrix4cd upsilon_inverse() const {
    const Eigen::Matrix4cd eta = unitary_metric().cast<std::complex<double>>();
    return eta * upsilon_.adjoint() * eta;
  }

  QuaplecticElement operator*(const QuaplecticElement& o) const {
    const Eigen::Matrix4cd eta = unitary_metric().cast<std::complex<double>>();
    QuaplecticElement out;
    out.upsilon_ = upsilon_ * o.upsilon_;
    out.z_ = o.z_ + o.upsilon_inverse() * z_;
    out.iota_ = iota_ + o.iota_ + (z_.adjoint() * eta * o.upsilon_ * o.z_)(0);
    return out;
  }

  QuaplecticElement inverse() const {
    const Eigen::Matrix4cd eta = unitary_metric().cast<std::complex<double>>();
    QuaplecticElement out;
    out.upsilon_ = upsilon_inverse();
    out.z_ = -(upsilon_ * z_);
    out.iota_ = -iota_ + (z_.adjoint() * eta * z_)(0);
    return out;
  }

 private:
  Eigen::Matrix4cd upsilon_;
  Eigen::Vector4cd z_;
  std::complex<double> iota_;
};

// Repackage a real pair (Lambda, M) into the complex rotation block
// Upsilon = M + i Lambda, normalized so that eta-unitarity holds whenever the
// pair genuinely comes from a real symplectic-orthogonal element (for a pure
// Lambda in SO(1,3) this gives Upsilon = i Lambda).
inline QuaplecticElement from_real_blocks(const Eigen::Matrix4d& lambda,
                                          const Eigen::Matrix4d& m) {
  const std::complex<double> i(0.0, 1.0);
  const Eigen::Matrix4cd u =
      m.cast<std::complex<double>>() + i * lambda.cast<std::complex<double>>();
  return QuaplecticElement(u, Eigen::Vector4cd::Zero(), 0.0);
}

// exp(i eta H) with H Hermitian is eta-unitary; used to sample test elements.
inline Eigen::Matrix4cd random_eta_unitary(unsigned seed, double scale = 0.5) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> dist(-scale, scale);
  Eigen::Matrix4cd h;
  for (int a = 0; a < 4; ++a) {
    h(a, a) = dist(gen);
    for (int b = a + 1; b < 4; ++b) {
      const std::complex<double> w(dist(gen), dist(gen));
      h(a, b) = w;
      h(b, a) = std::conj(w);
    }
  }
  const std::complex<double> i(0.0, 1.0);
  const Eigen::Matrix4cd eta = unitary_metric().cast<std::complex<double>>();
  return (i * eta * h).exp();
}

inline Eigen::Vector4cd random_complex_vector(unsigned seed, double scale = 1.0) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> dist(-scale, scale);
  Eigen::Vector4cd z;
  for (int a = 0; a < 4; ++a) z(a) = std::complex<double>(dist(gen), dist(gen));
  return z;
}

// Reordering (t, q, p, e) -> (t, q, e, p), under which the bounded-rate
// matrix takes the real block form [[L, M], [-M, L]].
inline Eigen::Matrix4d tqep_permutation() {
  Eigen::Matrix4d p = Eigen::Matrix4d::Zero();
  p(0, 0) = 1.0;
  p(1, 1) = 1.0;
  p(2, 3) = 1.0;
  p(3, 2) = 1.0;
  return p;
}

// One-mode complex dictionary: the 2x2 eta-unitary unit-determinant matrix
//   V = gamma [[1 + i r', v' - i f'], [v' + i f', 1 - i r']]
// with dimensionless v' = v/c, f' = f/b, r' = r/(b c). Equals L - i M for the
// blocks of the reordered bounded-rate matrix.
inline Eigen::Matrix2cd su11_from_params(const FrameParams& p, const Constants& k) {
  const double vh = p.v / k.c, fh = p.f / k.b, rh = p.r / (k.b * k.c);
  const double rad = 1.0 - vh * vh - fh * fh + rh * rh;
  if (!(rad > kGammaGuard))
    throw std::domain_error("frame parameters on or beyond the null surface");
  const double g = 1.0 / std::sqrt(rad);
  const std::complex<double> i(0.0, 1.0);
  Eigen::Matrix2cd v;
  v << 1.0 + i * rh, vh - i * fh, vh + i * fh, 1.0 - i * rh;
  return g * v;
}

}  // namespace quap
