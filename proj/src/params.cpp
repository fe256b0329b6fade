#include "vsgc/params.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace vsgc {

double wrap_phase(double phi) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double w = std::fmod(phi, two_pi);
  if (w < 0.0) w += two_pi;
  if (w >= two_pi) w = 0.0;  // w == two_pi can appear after the += for tiny negatives
  return w;
}

SystemParams validated(SystemParams p) {
  const double fields[] = {p.gamma21, p.gamma31, p.omega_r, p.omega_l, p.delta_r,
                           p.delta_l,  p.delta_small, p.phi, p.kc};
  for (double x : fields) {
    if (!std::isfinite(x)) throw NonFiniteValue("system parameter is not finite");
  }
  if (!(p.gamma21 > 0.0 && p.gamma31 > 0.0))
    throw Error("gamma21 and gamma31 must be positive");
  if (!(p.kc >= 0.0 && p.kc <= 1.0))
    throw Error("kc must lie in [0, 1], got " + std::to_string(p.kc));
  if (p.omega_r < 0.0 || p.omega_l < 0.0)
    throw Error("Rabi frequencies must be non-negative");
  p.phi = wrap_phase(p.phi);
  return p;
}

}  // namespace vsgc
