#include "doctest.h"

#include <complex>
#include <stdexcept>

#include "quaplectic/quaplectic_element.hpp"
#include "quaplectic/transforms.hpp"

using namespace quap;
using Eigen::Matrix2cd;
using Eigen::Matrix4cd;
using Eigen::Matrix4d;
using Eigen::Vector4cd;
using Mat6 = Eigen::Matrix<std::complex<double>, 6, 6>;

TEST_CASE("eta unitary sampling") {
  for (unsigned seed : {1u, 7u, 19u, 1234u}) {
    Matrix4cd u = random_eta_unitary(seed);
    CHECK(eta_unitarity_residual(u) < 1e-12);
    CHECK(std::abs(std::abs(u.determinant()) - 1.0) < 1e-12);
  }
  CHECK_THROWS_AS(QuaplecticElement(2.0 * Matrix4cd::Identity(),
                                    Vector4cd::Zero(), 0.0),
                  std::invalid_argument);
}

TEST_CASE("rotation block inverse") {
  QuaplecticElement e(random_eta_unitary(3), random_complex_vector(4), 0.25);
  CHECK((e.upsilon() * e.upsilon_inverse() - Matrix4cd::Identity())
            .cwiseAbs()
            .maxCoeff() < 1e-12);
}

TEST_CASE("realized product is a homomorphism") {
  for (unsigned seed = 0; seed < 20; ++seed) {
    QuaplecticElement e1(random_eta_unitary(3 * seed + 1),
                         random_complex_vector(3 * seed + 2), 0.1 * seed);
    QuaplecticElement e2(random_eta_unitary(3 * seed + 101),
                         random_complex_vector(3 * seed + 102), -0.2 * seed);
    Mat6 lhs = e1.realized() * e2.realized();
    Mat6 rhs = (e1 * e2).realized();
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("inverse and associativity") {
  QuaplecticElement e(random_eta_unitary(42), random_complex_vector(43), 0.7);
  Mat6 id = (e * e.inverse()).realized();
  CHECK((id - Mat6::Identity()).cwiseAbs().maxCoeff() < 1e-12);
  id = (e.inverse() * e).realized();
  CHECK((id - Mat6::Identity()).cwiseAbs().maxCoeff() < 1e-12);
  // the phase of the inverse stays real for a real input phase
  CHECK(std::abs(e.inverse().iota().imag()) < 1e-13);

  QuaplecticElement a(random_eta_unitary(50), random_complex_vector(51), 0.2);
  QuaplecticElement b(random_eta_unitary(52), random_complex_vector(53), -0.4);
  QuaplecticElement c(random_eta_unitary(54), random_complex_vector(55), 1.1);
  Mat6 l = ((a * b) * c).realized();
  Mat6 r = (a * (b * c)).realized();
  CHECK((l - r).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("real block packing") {
  // identity comes back from the trivial pair
  auto e = from_real_blocks(Matrix4d::Zero(), Matrix4d::Identity());
  CHECK((e.upsilon() - Matrix4cd::Identity()).cwiseAbs().maxCoeff() == 0.0);

  // a genuine eta-unitary splits into (imag, real) and reassembles
  Matrix4cd u = random_eta_unitary(99);
  auto back = from_real_blocks(u.imag(), u.real());
  CHECK((back.upsilon() - u).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(back.z().norm() == 0.0);
}

TEST_CASE("phase space reordering") {
  Matrix4d p = tqep_permutation();
  CHECK((p * p.transpose() - Matrix4d::Identity()).norm() == 0.0);
  CHECK((p * p - Matrix4d::Identity()).norm() == 0.0);
}

TEST_CASE("one mode complex dictionary") {
  Constants k;
  FrameParams fp{0.35, -0.2, 0.15};
  Matrix2cd v = su11_from_params(fp, k);

  // unit determinant, eta-unitary for the 2x2 pairing diag(-1, 1)
  CHECK(std::abs(v.determinant() - 1.0) < 1e-14);
  Matrix2cd eta2 = Matrix2cd::Identity();
  eta2(0, 0) = -1.0;
  CHECK((v.adjoint() * eta2 * v - eta2).cwiseAbs().maxCoeff() < 1e-14);

  // equals L - i M for the blocks of the reordered bounded-rate matrix
  Matrix4d g = build_transform(TransformKind::reciprocal, fp, k).matrix;
  Matrix4d gp = tqep_permutation() * g * tqep_permutation().transpose();
  Eigen::Matrix2d l = gp.block<2, 2>(0, 0);
  Eigen::Matrix2d m = gp.block<2, 2>(0, 2);
  CHECK((gp.block<2, 2>(2, 2) - l).norm() < 1e-14);
  CHECK((gp.block<2, 2>(2, 0) + m).norm() < 1e-14);
  std::complex<double> i(0.0, 1.0);
  Matrix2cd dict = l.cast<std::complex<double>>() - i * m.cast<std::complex<double>>();
  CHECK((dict - v).cwiseAbs().maxCoeff() < 1e-13);

  // identity at rest, singular on the null surface
  CHECK((su11_from_params(FrameParams{}, k) - Matrix2cd::Identity()).norm() == 0.0);
  CHECK_THROWS_AS((void)su11_from_params(FrameParams{0.6, 0.8, 0.0}, k),
                  std::domain_error);
}

TEST_CASE("realized matrix shape") {
  QuaplecticElement e(random_eta_unitary(5), random_complex_vector(6), 0.3);
  Mat6 m = e.realized();
  CHECK(m(4, 4) == std::complex<double>(1.0, 0.0));
  CHECK(m(5, 5) == std::complex<double>(1.0, 0.0));
  for (int col = 0; col < 5; ++col) CHECK(std::abs(m(5, col)) == 0.0);
  for (int row = 0; row < 4; ++row) CHECK(std::abs(m(row, 4)) == 0.0);
  // translation column carries the rotated translation vector
  CHECK((m.block<4, 1>(0, 5) - e.upsilon() * e.z()).cwiseAbs().maxCoeff() == 0.0);
}
