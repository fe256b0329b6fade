#include "vsgc/steadystate.hpp"

#include <Eigen/SVD>

#include <cmath>

namespace vsgc {

Liouvillian build_liouvillian(const SystemParams& p0) {
  const SystemParams p = validated(p0);
  const double g21 = p.gamma21, g31 = p.gamma31;
  const double wr = p.omega_r, wl = p.omega_l;
  const double c = p.kc * std::sqrt(g21 * g31);
  const double al = p.delta_small - p.delta_l;           // rho13 rotation
  const double be = p.delta_r - p.delta_l + p.delta_small;  // rho32 rotation
  const double gs = g21 + g31;

  Liouvillian lv;
  Matrix8<double>& A = lv.A;
  A.setZero();
  lv.b.setZero();

  A(kP22, kP22) = -2.0 * g21;
  A(kP22, kIm12) = -2.0 * wr;
  A(kP33, kP33) = -2.0 * g31;
  A(kP33, kIm13) = -2.0 * wl;

  A(kRe12, kRe12) = -g21;
  A(kRe12, kIm12) = p.delta_r;
  A(kRe12, kIm32) = -wl;
  A(kIm12, kIm12) = -g21;
  A(kIm12, kRe12) = -p.delta_r;
  A(kIm12, kP22) = 2.0 * wr;
  A(kIm12, kP33) = wr;
  A(kIm12, kRe32) = wl;
  lv.b[kIm12] = -wr;

  A(kRe13, kRe13) = -g31;
  A(kRe13, kIm13) = -al;
  A(kRe13, kIm32) = wr;
  A(kIm13, kIm13) = -g31;
  A(kIm13, kRe13) = al;
  A(kIm13, kP22) = wl;
  A(kIm13, kP33) = 2.0 * wl;
  A(kIm13, kRe32) = wr;
  lv.b[kIm13] = -wl;

  A(kRe32, kRe32) = -gs;
  A(kRe32, kIm32) = be;
  A(kRe32, kIm12) = -wl;
  A(kRe32, kIm13) = -wr;
  A(kIm32, kIm32) = -gs;
  A(kIm32, kRe32) = -be;
  A(kIm32, kRe12) = wl;
  A(kIm32, kRe13) = -wr;

  // Interference block. Skipped entirely at kc = 0 so A is bit-identical
  // across phi there (cos/sin never enter).
  if (c != 0.0) {
    const double ccf = c * std::cos(p.phi);
    const double csf = c * std::sin(p.phi);
    A(kP22, kRe32) = -2.0 * ccf;
    A(kP22, kIm32) = 2.0 * csf;
    A(kP33, kRe32) = -2.0 * ccf;
    A(kP33, kIm32) = 2.0 * csf;
    A(kRe12, kRe13) = -ccf;
    A(kRe12, kIm13) = -csf;
    A(kIm12, kRe13) = csf;
    A(kIm12, kIm13) = -ccf;
    A(kRe13, kRe12) = -ccf;
    A(kRe13, kIm12) = csf;
    A(kIm13, kRe12) = -csf;
    A(kIm13, kIm12) = -ccf;
    A(kRe32, kP22) = -ccf;
    A(kRe32, kP33) = -ccf;
    A(kIm32, kP22) = csf;
    A(kIm32, kP33) = csf;
  }
  return lv;
}

SteadyStateReport solve_steady(const SystemParams& p0) {
  const SystemParams p = validated(p0);
  const Liouvillian lv = build_liouvillian(p);

  Eigen::JacobiSVD<Matrix8<double>> svd(lv.A, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();  // descending

  SteadyStateReport rep;
  rep.smallest_singular_values = {sv[7], sv[6]};
  if (sv[7] < kDegenerateSvRatio * sv[0]) {
    rep.degenerate = true;
    return rep;
  }
  const BlochVector v = svd.solve(Vector8<double>(-lv.b));
  rep.state = v;
  rep.residual = (lv.A * v + lv.b).cwiseAbs().maxCoeff();
  return rep;
}

BlochVector require_steady(const SystemParams& p) {
  const SteadyStateReport rep = solve_steady(p);
  if (rep.degenerate) {
    throw DegenerateLiouvillian(rep.smallest_singular_values[0],
                                rep.smallest_singular_values[1]);
  }
  return *rep.state;
}

DensityMatrix analytic_weak_field_steady(double omega0, double phi, double kc) {
  using C = std::complex<double>;
  if (!(omega0 >= 0.0) || !std::isfinite(omega0)) throw Error("omega0 must be finite and >= 0");
  if (!(kc >= 0.0 && kc <= 1.0)) throw Error("kc must lie in [0, 1]");

  const C i(0.0, 1.0);
  const double w2 = omega0 * omega0;
  const double cf = std::cos(phi);
  const C eip(std::cos(phi), std::sin(phi));
  const C eim = std::conj(eip);

  const double denom = kc * w2 * (7.0 + 4.0 * w2 + kc * kc) * cf -
                       kc * kc * (kc * kc - 2.0 + 3.0 * w2) - w2 -
                       (1.0 + 2.0 * w2) * (1.0 + 2.0 * w2);
  if (std::abs(denom) < 1e-12) {
    throw DegenerateDenominator("shared steady-state denominator vanished (|D| = " +
                                std::to_string(std::abs(denom)) + ")");
  }

  const double r22 = w2 * (kc * (2.0 + w2) * cf - w2 - (1.0 + kc * kc)) / denom;
  const C r12 = -i * omega0 *
                (kc * (2.0 * w2 * kc * cf - (w2 + 2.0 * (kc * kc - 1.0))) * eim + kc * w2 * eip +
                 2.0 * ((kc * kc - 1.0) - w2)) /
                (2.0 * denom);
  const C r23 = w2 * (w2 * kc * cf - kc * eip * (kc * eip - 2.0) - (1.0 + w2)) / denom;

  DensityMatrix rho;
  rho(0, 0) = C(1.0 - 2.0 * r22, 0.0);
  rho(1, 1) = C(r22, 0.0);
  rho(2, 2) = C(r22, 0.0);
  rho(0, 1) = r12;
  rho(0, 2) = r12;  // the formula identifies rho13 with rho12
  rho(1, 0) = std::conj(r12);
  rho(2, 0) = std::conj(r12);
  rho(1, 2) = r23;
  rho(2, 1) = std::conj(r23);
  return rho;
}

}  // namespace vsgc
