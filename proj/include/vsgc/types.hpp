#pragma once

#include <Eigen/Dense>

#include <complex>

namespace vsgc {

template <class Scalar> using Matrix3c = Eigen::Matrix<std::complex<Scalar>, 3, 3>;
template <class Scalar> using Vector8 = Eigen::Matrix<Scalar, 8, 1>;
template <class Scalar> using Matrix8 = Eigen::Matrix<Scalar, 8, 8>;

// Atomic density matrix in the bare basis {|1>, |2>, |3>}.
using DensityMatrix = Matrix3c<double>;

// The 8 independent real variables of the equations of motion:
// (rho22, rho33, Re rho12, Im rho12, Re rho13, Im rho13, Re rho32, Im rho32).
// rho11 is implied by unit trace, the lower triangle by Hermiticity, so both
// are conserved by construction no matter what the integrator does.
using BlochVector = Vector8<double>;

enum BlochIndex : int {
  kP22 = 0,
  kP33,
  kRe12,
  kIm12,
  kRe13,
  kIm13,
  kRe32,
  kIm32,
};

}  // namespace vsgc
