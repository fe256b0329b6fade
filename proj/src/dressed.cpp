#include "vsgc/dressed.hpp"

#include <cmath>
#include <numbers>

namespace vsgc {

DressedMatrix dressed_rhs_closed_form(const SystemParams& p0, const DressedMatrix& m) {
  using C = std::complex<double>;
  const SystemParams p = validated(p0);
  const C i(0.0, 1.0);
  const double g21 = p.gamma21, g31 = p.gamma31;
  const double gs = g21 + g31;
  const double dd = p.delta_r - p.delta_l;
  const double ds = p.delta_r + p.delta_l;
  const double ccf = p.kc * std::sqrt(g21 * g31) * std::cos(p.phi);
  const double csf = p.kc * std::sqrt(g21 * g31) * std::sin(p.phi);
  const double s2 = std::sqrt(2.0);

  const C r11 = m(0, 0), rpp = m(1, 1), rff = m(2, 2);
  const C r1p = m(0, 1), rp1 = m(1, 0);
  const C r1f = m(0, 2), rf1 = m(2, 0);
  const C rpf = m(1, 2), rfp = m(2, 1);

  // Transcribed term by term as printed. Note the drive factors of the
  // d_r1p/d_r1f lines carry no 1/sqrt2 and the d_r1f line applies the
  // gamma-sum coefficient to r1p; both disagree with the conjugated bare
  // equations (KNOWN_DEVIATIONS.md).
  const C dpp = -(gs + 2.0 * ccf) * rpp - (C(gs, dd) * 0.5 + i * csf) * rpf +
                (-C(gs, -dd) * 0.5 + i * csf) * rfp +
                i * (p.omega_r + p.omega_l) / s2 * (r1p - rp1);

  const C dff = (-gs + 2.0 * ccf) * rff - (C(gs, -dd) * 0.5 + i * csf) * rfp +
                (-C(gs, dd) * 0.5 + i * csf) * rpf +
                i * (p.omega_r - p.omega_l) / s2 * (r1f - rf1);

  const C dpf = (-C(g21 - g31, dd) * 0.5 + i * csf) * rpp +
                (-C(g21 - g31, -dd) * 0.5 + i * csf) * rff - gs * rpf +
                i * (p.omega_r + p.omega_l) / s2 * r1f - i * (p.omega_r - p.omega_l) / s2 * rp1;

  const C d1p = -(C(gs, ds) * 0.5 + ccf) * r1p - (C(g21 - g31, dd) * 0.5 + i * csf) * r1f +
                i * (p.omega_r + p.omega_l) * (rpp - r11) + i * (p.omega_r - p.omega_l) * rfp;

  const C d1f = -(C(g21 - g31, dd) * 0.5 + i * csf) * r1f + (-C(gs, ds) * 0.5 + ccf) * r1p +
                i * (p.omega_r - p.omega_l) * (rff - r11) + i * (p.omega_r + p.omega_l) * rpf;

  const C d11 = -(dff + dpp);

  DressedMatrix out;
  out(0, 0) = d11;
  out(1, 1) = dpp;
  out(2, 2) = dff;
  out(1, 2) = dpf;
  out(2, 1) = std::conj(dpf);
  out(0, 1) = d1p;
  out(1, 0) = std::conj(d1p);
  out(0, 2) = d1f;
  out(2, 0) = std::conj(d1f);
  return out;
}

DressedMatrix closed_form_oscillation_state(double omega0, double t) {
  using C = std::complex<double>;
  const double x = 4.0 * omega0 / std::sqrt(2.0) * t;
  DressedMatrix m = DressedMatrix::Zero();
  m(0, 0) = C(0.5 * (1.0 + std::cos(x)), 0.0);
  m(1, 1) = C(0.5 * (1.0 - std::cos(x)), 0.0);
  m(0, 1) = C(0.0, -std::sqrt(2.0) / 2.0 * std::sin(x));
  m(1, 0) = std::conj(m(0, 1));
  return m;
}

std::array<double, 2> closed_form_oscillation_eigenvalues(double omega0, double t) {
  const double x = 4.0 * omega0 / std::sqrt(2.0) * t;
  const double cs = std::cos(x);
  const double sn = std::sin(x);
  const double root = std::sqrt(cs * cs + std::sqrt(2.0) * sn * sn);
  return {0.5 * (1.0 + root), 0.5 * (1.0 - root)};
}

DegenerateOscillation run_degenerate_oscillation(double omega0, double t_end, double dt,
                                                 int stride) {
  if (!(omega0 > 0.0)) throw Error("omega0 must be positive");
  SystemParams p;
  p.gamma21 = 1.0;
  p.gamma31 = 1.0;
  p.omega_r = omega0;
  p.omega_l = omega0;
  p.phi = std::numbers::pi;
  p.kc = 1.0;

  DegenerateOscillation run;
  run.trajectory = evolve(p, ground_state(), t_end, dt, stride);
  const std::size_t n = run.trajectory.size();
  run.dressed.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const DressedMatrix d = to_dressed(from_bloch(run.trajectory.states[k]));
    run.dressed.push_back(d);
    run.max_rho_phiphi = std::max(run.max_rho_phiphi, std::abs(d(2, 2)));
  }

  // rho11 crosses 1/2 twice per oscillation; linear interpolation between
  // samples localizes the crossings well below the sample spacing.
  std::vector<double> crossings;
  const auto& ts = run.trajectory.times;
  const auto& pops = run.trajectory.populations_abc;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double a = pops[k][0] - 0.5;
    const double b = pops[k + 1][0] - 0.5;
    if ((a <= 0.0 && b > 0.0) || (a >= 0.0 && b < 0.0)) {
      crossings.push_back(ts[k] + (ts[k + 1] - ts[k]) * (-a) / (b - a));
    }
  }
  if (crossings.size() >= 3) {
    double sum = 0.0, lo = 1e300, hi = 0.0;
    for (std::size_t k = 0; k + 1 < crossings.size(); ++k) {
      const double gap = crossings[k + 1] - crossings[k];
      sum += gap;
      lo = std::min(lo, gap);
      hi = std::max(hi, gap);
    }
    const double mean = sum / static_cast<double>(crossings.size() - 1);
    run.angular_frequency = std::numbers::pi / mean;
    run.frequency_spread = (hi - lo) / mean;
  }
  // Peak-to-peak of rho11 over each full cycle (crossing k to k+2).
  for (std::size_t k = 0; k + 2 < crossings.size(); k += 2) {
    double lo = 1e300, hi = -1e300;
    for (std::size_t j = 0; j < n; ++j) {
      if (ts[j] < crossings[k] || ts[j] > crossings[k + 2]) continue;
      lo = std::min(lo, pops[j][0]);
      hi = std::max(hi, pops[j][0]);
    }
    if (hi > lo) run.cycle_amplitudes.push_back(hi - lo);
  }
  return run;
}

}  // namespace vsgc
