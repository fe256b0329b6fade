#pragma once

#include "vsgc/errors.hpp"

namespace vsgc {

// Physical knobs of the equations of motion. All rates and frequencies are in
// units of the decay rate gamma; phi is in radians. Rabi frequencies are real
// and non-negative: all phase dependence is carried by the explicit e^{+-i
// phi} interference factors, never by complex field amplitudes.
struct SystemParams {
  double gamma21 = 1.0;      // decay rate of |2> -> |1> (population decays at 2*gamma21)
  double gamma31 = 1.0;      // decay rate of |3> -> |1>
  double omega_r = 0.1;      // Rabi frequency of the field driving |1>-|2>
  double omega_l = 0.1;      // Rabi frequency of the field driving |1>-|3>
  double delta_r = 0.0;      // detuning of the right field
  double delta_l = 0.0;      // detuning of the left field
  double delta_small = 0.0;  // relative frequency of the two driving fields
  double phi = 0.0;          // relative phase phi_R - phi_L, reduced to [0, 2pi)
  double kc = 0.0;           // interference strength K_c = cos(theta), in [0, 1]
};

// Wraps an angle into [0, 2pi). Values already in range pass through bit-exact.
double wrap_phase(double phi);

// Returns p with phi reduced to [0, 2pi). Throws NonFiniteValue / Error when
// an invariant is violated (gamma <= 0, kc outside [0, 1], negative Rabi
// frequency, non-finite value).
SystemParams validated(SystemParams p);

}  // namespace vsgc
