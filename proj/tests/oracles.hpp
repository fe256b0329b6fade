// Test-only reference implementations, kept independent of the library's
// solver paths.
#pragma once

#include "vsgc/types.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace vsgc::testing {

// Eigenvalues of a 3x3 Hermitian matrix straight from the characteristic
// polynomial: shift by the mean eigenvalue, then the trigonometric solution
// of the depressed cubic. Descending order.
inline Eigen::Vector3d charpoly_eigenvalues(const Matrix3c<double>& m) {
  const double shift = m.trace().real() / 3.0;
  const Matrix3c<double> k = m - shift * Matrix3c<double>::Identity();
  const double p2 = (k * k).trace().real() / 6.0;
  const double half_det = k.determinant().real() / 2.0;
  const double p = std::sqrt(std::max(p2, 0.0));

  Eigen::Vector3d lam;
  if (p == 0.0) {
    lam.setConstant(shift);
    return lam;
  }
  const double r = std::clamp(half_det / (p * p * p), -1.0, 1.0);
  const double theta = std::acos(r) / 3.0;
  constexpr double two_thirds_pi = 2.0 * std::numbers::pi / 3.0;
  lam[0] = shift + 2.0 * p * std::cos(theta);
  lam[2] = shift + 2.0 * p * std::cos(theta + two_thirds_pi);
  lam[1] = 3.0 * shift - lam[0] - lam[2];
  std::sort(lam.data(), lam.data() + 3, std::greater<double>());
  return lam;
}

inline Matrix3c<double> random_unitary3(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix3c<double> g;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g(i, j) = std::complex<double>(gauss(rng), gauss(rng));
  const Eigen::HouseholderQR<Matrix3c<double>> qr(g);
  return qr.householderQ();
}

// Hermitian matrix with a prescribed random spectrum in [0, 1].
inline Matrix3c<double> random_hermitian01(std::mt19937_64& rng, Eigen::Vector3d* spectrum_out = nullptr) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  Eigen::Vector3d spec(u01(rng), u01(rng), u01(rng));
  const Matrix3c<double> u = random_unitary3(rng);
  Matrix3c<double> m = u * spec.asDiagonal().toDenseMatrix().cast<std::complex<double>>() *
                       u.adjoint();
  m = ((m + m.adjoint()) / 2.0).eval();  // scrub roundoff asymmetry
  if (spectrum_out) {
    std::sort(spec.data(), spec.data() + 3, std::greater<double>());
    *spectrum_out = spec;
  }
  return m;
}

}  // namespace vsgc::testing
