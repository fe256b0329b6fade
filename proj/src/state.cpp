#include "vsgc/state.hpp"

namespace vsgc {

DensityMatrix from_bloch(const BlochVector& v) {
  using C = std::complex<double>;
  const double p22 = v[kP22];
  const double p33 = v[kP33];
  // 1 - t followed by + t reproduces exactly 1, so the trace is conserved
  // bit-for-bit however the populations drift.
  const double p11 = 1.0 - (p22 + p33);

  DensityMatrix rho;
  rho(0, 0) = C(p11, 0.0);
  rho(1, 1) = C(p22, 0.0);
  rho(2, 2) = C(p33, 0.0);
  rho(0, 1) = C(v[kRe12], v[kIm12]);
  rho(0, 2) = C(v[kRe13], v[kIm13]);
  rho(2, 1) = C(v[kRe32], v[kIm32]);
  rho(1, 0) = std::conj(rho(0, 1));
  rho(2, 0) = std::conj(rho(0, 2));
  rho(1, 2) = std::conj(rho(2, 1));
  return rho;
}

BlochVector to_bloch(const DensityMatrix& rho) {
  BlochVector v;
  v[kP22] = rho(1, 1).real();
  v[kP33] = rho(2, 2).real();
  v[kRe12] = rho(0, 1).real();
  v[kIm12] = rho(0, 1).imag();
  v[kRe13] = rho(0, 2).real();
  v[kIm13] = rho(0, 2).imag();
  v[kRe32] = rho(2, 1).real();
  v[kIm32] = rho(2, 1).imag();
  return v;
}

Eigen::Vector3d populations(const DensityMatrix& rho) {
  return {rho(0, 0).real(), rho(1, 1).real(), rho(2, 2).real()};
}

}  // namespace vsgc
