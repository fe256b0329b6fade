#pragma once

#include "vsgc/dynamics.hpp"
#include "vsgc/params.hpp"
#include "vsgc/types.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace vsgc {

// Matrices in the basis {|1>, |psi> = (|2>+|3>)/sqrt2, |phi> = (|2>-|3>)/sqrt2}.
// Index order: 0 = |1>, 1 = |psi>, 2 = |phi>.
using DressedMatrix = Matrix3c<double>;

// Change-of-basis transform U rho U. U is real, symmetric and involutive
// (U = U^-1 = U^dagger), so from_dressed is the same conjugation.
template <class Derived>
Eigen::Matrix<typename Derived::Scalar, 3, 3> to_dressed(const Eigen::MatrixBase<Derived>& rho) {
  using Scalar = typename Derived::Scalar;
  using Real = typename Eigen::NumTraits<Scalar>::Real;
  const Scalar s = Scalar(Real(1) / std::sqrt(Real(2)));
  Eigen::Matrix<Scalar, 3, 3> u;
  u << Scalar(1), Scalar(0), Scalar(0),
       Scalar(0), s, s,
       Scalar(0), s, -s;
  return u * rho.derived() * u;
}

template <class Derived>
Eigen::Matrix<typename Derived::Scalar, 3, 3> from_dressed(const Eigen::MatrixBase<Derived>& m) {
  return to_dressed(m);
}

// Dressed-basis equations of motion transcribed verbatim from their printed
// closed form. This is NOT guaranteed consistent with rhs() under the basis
// change: the measured per-element disagreements are itemized in
// KNOWN_DEVIATIONS.md. The conjugated numeric route is authoritative.
DressedMatrix dressed_rhs_closed_form(const SystemParams& p, const DressedMatrix& m);

// Printed closed-form oscillation of the degenerate special case
// (kc = 1, phi = pi, omega_r = omega_l = omega0, rho11(0) = 1), evaluated
// verbatim. Not positivity-safe: |rho_1psi| reaches sqrt2/2, above the pure
// state bound 1/2. Kept strictly separate from the numeric route.
DressedMatrix closed_form_oscillation_state(double omega0, double t);

// Printed closed-form eigenvalue pair for the same special case, verbatim.
// lambda- goes negative (and lambda+ above 1) away from the turning points.
std::array<double, 2> closed_form_oscillation_eigenvalues(double omega0, double t);

struct DegenerateOscillation {
  Trajectory trajectory;               // numeric bare-basis evolution
  std::vector<DressedMatrix> dressed;  // per-sample dressed matrices
  double max_rho_phiphi = 0.0;         // max |rho_phiphi| along the run
  double angular_frequency = 0.0;      // zero-crossing estimate for rho11
  double frequency_spread = 0.0;       // (max-min)/mean of crossing intervals
  std::vector<double> cycle_amplitudes;  // per-cycle peak-to-peak of rho11
};

// Numeric ground truth for the degenerate special case: evolves the bare
// equations of motion at kc = 1, phi = pi, omega_r = omega_l = omega0 from
// the ground state and measures the oscillation. The |phi> level stays
// unpopulated and rho11 oscillates without decay.
DegenerateOscillation run_degenerate_oscillation(double omega0, double t_end, double dt = 1e-3,
                                                 int stride = 10);

}  // namespace vsgc
