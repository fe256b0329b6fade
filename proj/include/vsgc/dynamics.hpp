#pragma once

#include "vsgc/params.hpp"
#include "vsgc/state.hpp"
#include "vsgc/types.hpp"

#include <cstddef>
#include <vector>

namespace vsgc {

namespace detail {
// sgc_sign scales the interference source term of the rho22 line only.
// The public rhs uses +1; the selftest negative control flips it to -1 to
// prove the analytic-agreement check actually bites.
BlochVector rhs_with_sgc_sign(const SystemParams& p, const BlochVector& v, double sgc_sign);
}  // namespace detail

// Time derivative of the 8 independent components. Affine in v; the implied
// rho11 derivative is -(d rho22 + d rho33). For kc = 0 the result is
// bit-exactly independent of phi.
BlochVector rhs(const SystemParams& p, const BlochVector& v);

// |1><1|, the default initial condition.
BlochVector ground_state();

// Hermitian matrix form of a derivative vector. The implied d rho11 here is
// -(d rho22 + d rho33); from_bloch's closure relation applies to states only.
DensityMatrix derivative_matrix(const BlochVector& dv);

struct Trajectory {
  std::vector<double> times;  // units of 1/gamma, strictly increasing
  std::vector<BlochVector> states;
  std::vector<double> entropies;                 // nats, per sample
  std::vector<Eigen::Vector3d> populations_abc;  // (rho11, rho22, rho33) per sample

  std::size_t size() const { return times.size(); }
};

// Classical fixed-step RK4 from t = 0 to t_end. A sample (state, entropy,
// populations) is recorded at t = 0, every `stride` steps, and at the final
// step. Throws StepTooLarge if a population leaves [-0.01, 1.01] and
// propagates PositivityViolation from the per-sample entropy.
Trajectory evolve(const SystemParams& p, const BlochVector& v0, double t_end, double dt = 1e-3,
                  int stride = 1);

// Same integration without sampling; returns only the final state.
BlochVector integrate_to(const SystemParams& p, const BlochVector& v0, double t_end, double dt);

struct ConvergenceReport {
  double order = 0.0;  // Richardson estimate from runs at dt, dt/2, dt/4
  bool exact = false;  // step-halving differences at roundoff; order is moot
  double err_coarse = 0.0;
  double err_fine = 0.0;
};

// Measures the integrator's effective convergence order; ~4 for smooth
// regimes, `exact` for dynamics the scheme integrates to roundoff.
ConvergenceReport measure_convergence_order(const SystemParams& p, const BlochVector& v0,
                                            double t_end = 2.0, double dt = 0.02);

}  // namespace vsgc
