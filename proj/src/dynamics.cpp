#include "vsgc/dynamics.hpp"

#include <cmath>
#include <string>

namespace vsgc {

namespace detail {

BlochVector rhs_with_sgc_sign(const SystemParams& p, const BlochVector& v, double sgc_sign) {
  using C = std::complex<double>;
  const C i(0.0, 1.0);
  const double c = p.kc * std::sqrt(p.gamma21 * p.gamma31);
  const C eip(std::cos(p.phi), std::sin(p.phi));  // e^{+i phi}
  const C eim = std::conj(eip);

  const double p22 = v[kP22];
  const double p33 = v[kP33];
  const double p11 = 1.0 - (p22 + p33);
  const C r12(v[kRe12], v[kIm12]);
  const C r13(v[kRe13], v[kIm13]);
  const C r32(v[kRe32], v[kIm32]);
  const C r21 = std::conj(r12);
  const C r31 = std::conj(r13);
  const C r23 = std::conj(r32);

  // Interference source shared by both population lines. With kc = 0 every
  // phi-dependent factor multiplies an exact zero, which keeps trajectories
  // bit-identical across phi.
  const C sgc_pop = c * (r23 * eim + r32 * eip);

  // d rho22 = -2 g21 rho22 + i (Wr rho12 - Wr rho21) - Kc sqrt(g21 g31) (rho23 e^-if + rho32 e^if)
  const C d22 = -2.0 * p.gamma21 * p22 + i * (p.omega_r * r12 - p.omega_r * r21) -
                sgc_sign * sgc_pop;
  // d rho33: same interference source, left field
  const C d33 = -2.0 * p.gamma31 * p33 + i * (p.omega_l * r13 - p.omega_l * r31) - sgc_pop;
  // d rho12 = -(g21 + i Dr) rho12 + i Wr (rho22 - rho11) + i Wl rho32 - c rho13 e^-if
  const C d12 = -C(p.gamma21, p.delta_r) * r12 + i * p.omega_r * (p22 - p11) +
                i * p.omega_l * r32 - c * r13 * eim;
  // d rho13 = -(g31 - i (ds - Dl)) rho13 + i Wl (rho33 - rho11) + i Wr rho23 - c rho12 e^+if
  const C d13 = -C(p.gamma31, -(p.delta_small - p.delta_l)) * r13 +
                i * p.omega_l * (p33 - p11) + i * p.omega_r * r23 - c * r12 * eip;
  // d rho32 = -(g21 + g31 + i (Dr - Dl + ds)) rho32 + i Wl rho12 - i Wr rho31
  //           - c (rho22 + rho33) e^-if
  const C d32 = -C(p.gamma21 + p.gamma31, p.delta_r - p.delta_l + p.delta_small) * r32 +
                i * p.omega_l * r12 - i * p.omega_r * r31 - c * (p22 + p33) * eim;

  BlochVector dv;
  dv[kP22] = d22.real();
  dv[kP33] = d33.real();
  dv[kRe12] = d12.real();
  dv[kIm12] = d12.imag();
  dv[kRe13] = d13.real();
  dv[kIm13] = d13.imag();
  dv[kRe32] = d32.real();
  dv[kIm32] = d32.imag();
  return dv;
}

}  // namespace detail

BlochVector rhs(const SystemParams& p, const BlochVector& v) {
  return detail::rhs_with_sgc_sign(p, v, 1.0);
}

BlochVector ground_state() { return BlochVector::Zero(); }

DensityMatrix derivative_matrix(const BlochVector& dv) {
  DensityMatrix m = from_bloch(dv);
  m(0, 0) = std::complex<double>(-(dv[kP22] + dv[kP33]), 0.0);
  return m;
}

namespace {

BlochVector rk4_step(const SystemParams& p, const BlochVector& v, double dt) {
  const BlochVector k1 = rhs(p, v);
  const BlochVector k2 = rhs(p, BlochVector(v + (0.5 * dt) * k1));
  const BlochVector k3 = rhs(p, BlochVector(v + (0.5 * dt) * k2));
  const BlochVector k4 = rhs(p, BlochVector(v + dt * k3));
  return v + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

void check_step(const BlochVector& v, double t) {
  const double p22 = v[kP22];
  const double p33 = v[kP33];
  const double p11 = 1.0 - (p22 + p33);
  const bool ok = p22 >= -0.01 && p22 <= 1.01 && p33 >= -0.01 && p33 <= 1.01 && p11 >= -0.01 &&
                  p11 <= 1.01;
  if (!ok) {
    throw StepTooLarge("population left [-0.01, 1.01] at t = " + std::to_string(t) +
                       "; decrease dt");
  }
}

long step_count(double t_end, double dt) {
  if (!(t_end > 0.0) || !(dt > 0.0) || dt > t_end)
    throw Error("integration requires 0 < dt <= t_end");
  return std::lround(t_end / dt);
}

}  // namespace

Trajectory evolve(const SystemParams& p0, const BlochVector& v0, double t_end, double dt,
                  int stride) {
  const SystemParams p = validated(p0);
  if (stride < 1) throw Error("stride must be >= 1");
  const long n = step_count(t_end, dt);

  Trajectory traj;
  const std::size_t approx = static_cast<std::size_t>(n / stride + 2);
  traj.times.reserve(approx);
  traj.states.reserve(approx);
  traj.entropies.reserve(approx);
  traj.populations_abc.reserve(approx);

  auto record = [&traj](double t, const BlochVector& v) {
    const DensityMatrix rho = from_bloch(v);
    traj.times.push_back(t);
    traj.states.push_back(v);
    traj.entropies.push_back(von_neumann_entropy(rho));
    traj.populations_abc.push_back(populations(rho));
  };

  BlochVector v = v0;
  record(0.0, v);
  for (long k = 1; k <= n; ++k) {
    v = rk4_step(p, v, dt);
    const double t = static_cast<double>(k) * dt;
    check_step(v, t);
    if (k % stride == 0 || k == n) record(t, v);
  }
  return traj;
}

BlochVector integrate_to(const SystemParams& p0, const BlochVector& v0, double t_end, double dt) {
  const SystemParams p = validated(p0);
  const long n = step_count(t_end, dt);
  BlochVector v = v0;
  for (long k = 1; k <= n; ++k) {
    v = rk4_step(p, v, dt);
    check_step(v, static_cast<double>(k) * dt);
  }
  return v;
}

ConvergenceReport measure_convergence_order(const SystemParams& p, const BlochVector& v0,
                                            double t_end, double dt) {
  const BlochVector coarse = integrate_to(p, v0, t_end, dt);
  const BlochVector mid = integrate_to(p, v0, t_end, dt / 2.0);
  const BlochVector fine = integrate_to(p, v0, t_end, dt / 4.0);

  ConvergenceReport rep;
  rep.err_coarse = (coarse - mid).cwiseAbs().maxCoeff();
  rep.err_fine = (mid - fine).cwiseAbs().maxCoeff();
  if (rep.err_coarse < 1e-13 || rep.err_fine < 1e-15) {
    rep.exact = true;
    return rep;
  }
  rep.order = std::log2(rep.err_coarse / rep.err_fine);
  return rep;
}

}  // namespace vsgc
