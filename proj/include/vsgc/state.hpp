#pragma once

#include "vsgc/errors.hpp"
#include "vsgc/types.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace vsgc {

// Entrywise tolerance on |rho - rho^dagger| accepted by the eigensolver.
inline constexpr double kHermiticityTol = 1e-10;

// Eigenvalues in [kEigenvalueClampFloor, 0) are roundoff and are clamped to
// zero; anything below is a genuine positivity loss.
inline constexpr double kEigenvalueClampFloor = -1e-9;

// Packs the 8 independent components into a Hermitian, unit-trace matrix:
// rho11 = 1 - (rho22 + rho33), lower triangle = conjugate of the upper.
DensityMatrix from_bloch(const BlochVector& v);

// Extracts the 8 components again; bit-exact inverse of from_bloch.
BlochVector to_bloch(const DensityMatrix& rho);

// Diagonal (rho11, rho22, rho33).
Eigen::Vector3d populations(const DensityMatrix& rho);

// Eigenvalues of a 3x3 Hermitian expression, descending. Throws
// NonHermitianInput if the Hermiticity defect exceeds kHermiticityTol.
template <class Derived>
Eigen::Matrix<typename Eigen::NumTraits<typename Derived::Scalar>::Real, 3, 1>
hermitian_eigenvalues(const Eigen::MatrixBase<Derived>& rho_expr) {
  using Scalar = typename Derived::Scalar;
  using Real = typename Eigen::NumTraits<Scalar>::Real;
  const Matrix3c<Real> rho = rho_expr;
  const Real defect = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (!(defect <= Real(kHermiticityTol))) {
    throw NonHermitianInput("hermitian_eigenvalues: defect " + std::to_string(double(defect)) +
                            " exceeds tolerance");
  }
  Eigen::SelfAdjointEigenSolver<Matrix3c<Real>> solver(rho, Eigen::EigenvaluesOnly);
  const Eigen::Matrix<Real, 3, 1> ascending = solver.eigenvalues();
  return ascending.reverse();
}

// Von Neumann entropy -sum lambda ln lambda in nats, with 0 ln 0 = 0.
// Eigenvalues inside the clamp window are treated as exact zeros; below it
// PositivityViolation is thrown. Result lies in [0, ln 3] up to roundoff.
template <class Derived>
typename Eigen::NumTraits<typename Derived::Scalar>::Real von_neumann_entropy(
    const Eigen::MatrixBase<Derived>& rho) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  const auto lambda = hermitian_eigenvalues(rho);
  Real s = Real(0);
  for (int i = 0; i < 3; ++i) {
    Real x = lambda[i];
    if (x < Real(kEigenvalueClampFloor)) {
      throw PositivityViolation("von_neumann_entropy: eigenvalue " + std::to_string(double(x)) +
                                " below clamp window (integrator failure?)");
    }
    x = std::clamp(x, Real(0), Real(1));
    if (x > Real(0)) s -= x * std::log(x);
  }
  return std::max(s, Real(0));
}

}  // namespace vsgc
