#pragma once

#include "vsgc/dynamics.hpp"
#include "vsgc/params.hpp"
#include "vsgc/types.hpp"

#include <array>
#include <limits>
#include <optional>

namespace vsgc {

// The equations of motion in vectorized form, d/dt v = A v + b, over the 8
// real variables with rho11 eliminated. Component order follows BlochIndex.
struct Liouvillian {
  Matrix8<double> A;
  Vector8<double> b;
};

// Hand-assembled (A, b); consistency with rhs() is a test oracle, so the two
// transcriptions stay independent.
Liouvillian build_liouvillian(const SystemParams& p);

// Smallest/largest singular-value ratio below which A counts as degenerate.
// The physical degeneracies (kc = 1 with phi = 0 or pi, equal Rabi
// frequencies) are exact, so this only needs to beat generic conditioning.
inline constexpr double kDegenerateSvRatio = 1e-8;

struct SteadyStateReport {
  std::optional<BlochVector> state;  // nullopt when degenerate
  double residual = std::numeric_limits<double>::quiet_NaN();  // max |A v + b|
  bool degenerate = false;
  std::array<double, 2> smallest_singular_values{};
};

// Solves A v = -b when A is regular; otherwise flags the degenerate
// (non-stationary) regime instead of solving.
SteadyStateReport solve_steady(const SystemParams& p);

// As solve_steady, but throws DegenerateLiouvillian instead of flagging.
BlochVector require_steady(const SystemParams& p);

// Closed-form weak-field steady state on resonance, valid for
// gamma21 = gamma31 = 1, delta_r = delta_l = delta_small = 0 and
// omega_r = omega_l = omega0. Evaluated exactly as printed, including the
// e^{+-i phi} factors and the rho12 = rho13 identification; see
// KNOWN_DEVIATIONS.md for where that identification departs from the
// numeric steady state. Throws DegenerateDenominator when the shared
// denominator vanishes (|D| < 1e-12), which happens at kc = 1, phi = 0.
DensityMatrix analytic_weak_field_steady(double omega0, double phi, double kc);

}  // namespace vsgc
