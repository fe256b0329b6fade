// Acceptance suite: one criterion per section, one PASS/FAIL line each, with
// itemized notes where a criterion documents known deviations. Exit status is
// the number of failed criteria.

#include "vsgc/csv.hpp"
#include "vsgc/dressed.hpp"
#include "vsgc/dynamics.hpp"
#include "vsgc/state.hpp"
#include "vsgc/steadystate.hpp"
#include "vsgc/sweep.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace vsgc;

constexpr double kPi = std::numbers::pi;

struct Notes {
  std::vector<std::string> lines;
  void add(const std::string& line) { lines.push_back(line); }
  void addf(const char* fmt, ...) {
    char buf[256];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof(buf), fmt, args);
    va_end(args);
    lines.emplace_back(buf);
  }
};

int g_failures = 0;

void criterion(const char* id, const char* title, const std::function<bool(Notes&)>& body) {
  Notes notes;
  bool ok = false;
  const auto start = std::chrono::steady_clock::now();
  try {
    ok = body(notes);
  } catch (const std::exception& e) {
    notes.add(std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("[%s] %s %s (%.2f s)\n", ok ? "PASS" : "FAIL", id, title, secs);
  for (const std::string& line : notes.lines) std::printf("       %s\n", line.c_str());
  if (!ok) ++g_failures;
}

SystemParams resonant_equal_fields(double omega0, double phi, double kc) {
  SystemParams p;
  p.omega_r = omega0;
  p.omega_l = omega0;
  p.phi = phi;
  p.kc = kc;
  return p;
}

bool c1_closed_form_equivalence(Notes& notes) {
  bool ok = true;
  int matches = 0, deviations = 0;
  for (double omega0 : {0.05, 0.1, 0.2}) {
    for (double kc : {0.0, 0.3, 0.5, 0.9}) {
      for (double phi : {0.0, kPi / 6.0, kPi / 2.0, kPi, 4.0 * kPi / 3.0}) {
        const SteadyStateReport rep = solve_steady(resonant_equal_fields(omega0, phi, kc));
        if (rep.degenerate) {
          notes.addf("unexpected degenerate point omega0=%g kc=%g phi=%g", omega0, kc, phi);
          ok = false;
          continue;
        }
        const DensityMatrix numeric = from_bloch(*rep.state);
        const DensityMatrix analytic = analytic_weak_field_steady(omega0, phi, kc);
        DensityMatrix diff = numeric - analytic;
        const double rho13_gap = std::abs(diff(0, 2));
        diff(0, 2) = diff(2, 0) = 0.0;
        if (diff.cwiseAbs().maxCoeff() > 1e-6) {
          notes.addf("element outside rho13 mismatched at omega0=%g kc=%g phi=%g (%.3e)",
                     omega0, kc, phi, diff.cwiseAbs().maxCoeff());
          ok = false;
        }
        if (rho13_gap <= 1e-6) {
          ++matches;
          continue;
        }
        // Documented closed-form asymmetry: its rho13 equals its rho12, the
        // numeric rho13 is the closed-form rho12 at reflected phase.
        ++deviations;
        const bool expected_here = kc > 0.0 && std::abs(std::sin(phi)) > 1e-12;
        const DensityMatrix reflected = analytic_weak_field_steady(omega0, -phi, kc);
        const double reflected_gap = std::abs(numeric(0, 2) - reflected(0, 1));
        notes.addf("rho13 deviation omega0=%.2f kc=%.1f phi=%.4f |d|=%.3e "
                   "(reflected-phase residual %.1e)",
                   omega0, kc, phi, rho13_gap, reflected_gap);
        if (!expected_here || reflected_gap > 1e-6) ok = false;
      }
    }
  }
  notes.addf("%d/60 grid points match entrywise; %d rho13 deviations itemized "
             "(see KNOWN_DEVIATIONS.md)",
             matches, deviations);
  return ok;
}

bool c2_disentanglement_point(Notes& notes) {
  bool ok = true;
  const SteadyStateReport rep = solve_steady(resonant_equal_fields(0.1, 0.0, 0.99));
  if (rep.degenerate) return false;
  const DensityMatrix rho = from_bloch(*rep.state);
  const double s = von_neumann_entropy(rho);
  const double rho11 = rho(0, 0).real();
  notes.addf("numeric steady state at kc=0.99, phi=0: entropy=%.6e nats, rho11=%.6f", s, rho11);
  ok = ok && s < 0.02 && rho11 > 0.99;

  // Closed-form limit kc -> 1 at phi = 0: entropy decreases toward its
  // (near-pure) limit. At exactly kc = 1 numerator and denominator both
  // vanish, so the faithful evaluation refuses (KNOWN_DEVIATIONS.md).
  double prev = 1e300;
  double last = 0.0;
  for (double kc : {0.9, 0.99, 0.999, 0.9999}) {
    last = von_neumann_entropy(analytic_weak_field_steady(0.1, 0.0, kc));
    notes.addf("closed-form entropy at kc=%.4f: %.6e nats", kc, last);
    if (last >= prev) {
      notes.add("entropy failed to decrease along kc -> 1");
      ok = false;
    }
    prev = last;
  }
  ok = ok && last < 5e-4;
  try {
    analytic_weak_field_steady(0.1, 0.0, 1.0);
    notes.add("expected DegenerateDenominator at kc=1, phi=0");
    ok = false;
  } catch (const DegenerateDenominator&) {
    notes.add("kc=1, phi=0 is 0/0 in the closed form: DegenerateDenominator raised as documented");
  }
  return ok;
}

bool c3_phase_independence(Notes& notes) {
  SweepSpec spec;
  spec.base.kc = 0.0;
  spec.axes = {Axis::linspace("phi", 0.0, 2.0 * kPi, 64)};
  const SweepResult result = run_sweep(spec);
  double lo = 1e300, hi = -1e300;
  for (const GridPoint& gp : result.points) {
    if (!gp.steady) return false;
    lo = std::min(lo, gp.steady->entropy);
    hi = std::max(hi, gp.steady->entropy);
  }
  notes.addf("steady entropy spread over 64 phases at kc=0: %.3e", hi - lo);
  bool ok = (hi - lo) < 1e-10;

  SystemParams a;
  a.kc = 0.0;
  SystemParams b = a, c = a;
  b.phi = kPi / 3.0;
  c.phi = 4.0 * kPi / 3.0;
  const Trajectory ta = evolve(a, ground_state(), 50.0, 1e-3, 5);
  const Trajectory tb = evolve(b, ground_state(), 50.0, 1e-3, 5);
  const Trajectory tc = evolve(c, ground_state(), 50.0, 1e-3, 5);
  bool bitwise = ta.size() == tb.size() && ta.size() == tc.size();
  for (std::size_t k = 0; bitwise && k < ta.size(); ++k) {
    bitwise = std::memcmp(ta.states[k].data(), tb.states[k].data(), 64) == 0 &&
              std::memcmp(ta.states[k].data(), tc.states[k].data(), 64) == 0;
  }
  notes.addf("transient trajectories bit-identical across phi: %s", bitwise ? "yes" : "NO");
  return ok && bitwise;
}

bool c4_resonance_maximum(Notes& notes) {
  bool ok = true;
  for (double kc : {0.0, 0.5, 0.99}) {
    for (double phi : {kPi / 6.0, 4.0 * kPi / 3.0}) {
      SweepSpec spec;
      spec.base.kc = kc;
      spec.base.phi = phi;
      spec.axes = {Axis::linspace("delta", -10.0, 10.0, 201)};
      const SweepResult result = run_sweep(spec, 4);
      std::size_t argmax = 0;
      for (std::size_t k = 0; k < result.points.size(); ++k) {
        if (!result.points[k].steady) return false;
        if (result.points[k].steady->entropy > result.points[argmax].steady->entropy) argmax = k;
      }
      const double s0 = result.points[100].steady->entropy;
      const double sp2 = result.points[120].steady->entropy;
      const double sm2 = result.points[80].steady->entropy;
      const bool here = argmax == 100 && sp2 < s0 && sm2 < s0;
      notes.addf("kc=%.2f phi=%.4f: argmax at delta=%+.2f, S(0)=%.4e, S(+2)=%.4e, S(-2)=%.4e %s",
                 kc, phi, result.points[argmax].coords[0], s0, sp2, sm2, here ? "" : "<-- FAIL");
      ok = ok && here;
    }
  }
  return ok;
}

bool c5_nonstationary_regime(Notes& notes) {
  bool ok = true;
  const double omega0 = 0.1;
  const SteadyStateReport rep = solve_steady(resonant_equal_fields(omega0, kPi, 1.0));
  notes.addf("solve_steady at kc=1, phi=pi: degenerate=%d, smallest sv %.2e / %.2e",
             rep.degenerate ? 1 : 0, rep.smallest_singular_values[0],
             rep.smallest_singular_values[1]);
  ok = ok && rep.degenerate;

  const DegenerateOscillation run = run_degenerate_oscillation(omega0, 200.0, 1e-3, 10);
  notes.addf("max dressed rho_phiphi along the run: %.2e (bound 1e-8)", run.max_rho_phiphi);
  ok = ok && run.max_rho_phiphi <= 1e-8;

  if (run.cycle_amplitudes.size() < 2) return false;
  const double first = run.cycle_amplitudes.front();
  const double last = run.cycle_amplitudes.back();
  notes.addf("rho11 peak-to-peak: first cycle %.6f, last cycle %.6f (%zu cycles)", first, last,
             run.cycle_amplitudes.size());
  ok = ok && first > 0.9 && last >= 0.99 * first;

  // Frequency tabulation -- recorded, not asserted.
  const double printed = 4.0 * omega0 / std::sqrt(2.0);
  const double alternative = std::pow(2.0, 1.75) * omega0;
  notes.addf("measured angular frequency %.12f (spread %.1e)", run.angular_frequency,
             run.frequency_spread);
  notes.addf("printed closed form 4*omega0/sqrt2 = %.12f -> ratio %.9f %s", printed,
             run.angular_frequency / printed,
             std::abs(run.angular_frequency / printed - 1.0) < 1e-4 ? "[matches]"
                                                                    : "[does not match]");
  notes.addf("asymmetric-pair alternative 2^(7/4)*omega0 = %.12f -> ratio %.9f %s", alternative,
             run.angular_frequency / alternative,
             std::abs(run.angular_frequency / alternative - 1.0) < 1e-4 ? "[matches]"
                                                                        : "[does not match]");
  return ok;
}

bool c6_closed_form_fidelity(Notes& notes) {
  bool ok = true;
  const double omega0 = 0.1;
  const auto at0 = closed_form_oscillation_eigenvalues(omega0, 0.0);
  ok = ok && std::abs(at0[0] - 1.0) <= 1e-12 && std::abs(at0[1]) <= 1e-12;

  const double quarter = kPi / 2.0 / (4.0 * omega0 / std::sqrt(2.0));
  const auto atq = closed_form_oscillation_eigenvalues(omega0, quarter);
  const double root = std::sqrt(std::sqrt(2.0));
  ok = ok && std::abs(atq[0] - 0.5 * (1.0 + root)) <= 1e-12 &&
       std::abs(atq[1] - 0.5 * (1.0 - root)) <= 1e-12;
  notes.addf("quarter-period pair (%.12f, %.12f) vs ((1+2^0.25)/2, (1-2^0.25)/2)", atq[0],
             atq[1]);
  if (atq[1] < 0.0) {
    notes.add("expected-known flag: lambda- < 0 (verbatim form violates positivity; "
              "see KNOWN_DEVIATIONS.md)");
  } else {
    notes.add("lambda- unexpectedly non-negative");
    ok = false;
  }
  return ok;
}

bool c7_physicality_suite(Notes& notes) {
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> uom(0.0, 1.0), udet(-5.0, 5.0), uphi(0.0, 2.0 * kPi),
      ukc(0.0, 1.0);
  double min_eig = 0.0, max_entropy = 0.0;
  for (int draw = 0; draw < 100; ++draw) {
    SystemParams p;
    p.omega_r = uom(rng);
    p.omega_l = uom(rng);
    p.delta_r = udet(rng);
    p.delta_l = udet(rng);
    p.phi = uphi(rng);
    p.kc = ukc(rng);
    const Trajectory traj = evolve(p, ground_state(), 50.0, 1e-3, 100);
    for (std::size_t k = 0; k < traj.size(); ++k) {
      const BlochVector& v = traj.states[k];
      const DensityMatrix rho = from_bloch(v);
      const double popsum = v[kP22] + v[kP33];
      const double defect = std::abs(rho(0, 0).real() + popsum - 1.0);
      if (popsum >= 0.0 ? defect != 0.0 : defect > 1.2e-16) {
        notes.add("trace defect detected");
        return false;
      }
      if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() != 0.0) {
        notes.add("Hermiticity defect detected");
        return false;
      }
      min_eig = std::min(min_eig, double(hermitian_eigenvalues(rho).minCoeff()));
      max_entropy = std::max(max_entropy, traj.entropies[k]);
      if (traj.entropies[k] < 0.0) return false;
    }
  }
  notes.addf("100 random draws to t=50: trace closes exactly (one reconstruction ulp "
             "when the population sum dips below zero), Hermitian by construction, "
             "min eigenvalue %.2e, max entropy %.6f (ln 3 = %.6f)",
             min_eig, max_entropy, std::log(3.0));
  return min_eig >= -1e-6 && max_entropy <= std::log(3.0) + 1e-12;
}

bool c8_numerics_suite(Notes& notes) {
  bool ok = true;

  SystemParams generic;
  generic.omega_r = 0.5;
  generic.omega_l = 0.3;
  generic.delta_r = 1.0;
  generic.kc = 0.6;
  generic.phi = 1.0;
  const ConvergenceReport conv = measure_convergence_order(generic, ground_state());
  notes.addf("RK4 measured order: %.3f", conv.order);
  ok = ok && !conv.exact && conv.order >= 3.7 && conv.order <= 4.3;

  std::mt19937_64 rng(888);
  double worst_eig = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const Matrix3c<double> m = testing::random_hermitian01(rng);
    worst_eig = std::max(
        worst_eig,
        (hermitian_eigenvalues(m) - testing::charpoly_eigenvalues(m)).cwiseAbs().maxCoeff());
  }
  notes.addf("eigen solver vs characteristic-polynomial oracle over 1000 matrices: %.2e",
             worst_eig);
  ok = ok && worst_eig <= 1e-9;

  std::uniform_real_distribution<double> uom(0.0, 1.0), udet(-5.0, 5.0), uphi(0.0, 2.0 * kPi),
      ukc(0.0, 1.0), uv(-0.3, 0.3);
  double worst_liouv = 0.0;
  for (int k = 0; k < 100; ++k) {
    SystemParams p;
    p.omega_r = uom(rng);
    p.omega_l = uom(rng);
    p.delta_r = udet(rng);
    p.delta_l = udet(rng);
    p.phi = uphi(rng);
    p.kc = ukc(rng);
    BlochVector v;
    for (int j = 0; j < 8; ++j) v[j] = uv(rng);
    const Liouvillian lv = build_liouvillian(p);
    worst_liouv =
        std::max(worst_liouv, ((lv.A * v + lv.b) - rhs(validated(p), v)).cwiseAbs().maxCoeff());
  }
  notes.addf("Liouvillian vs rhs consistency over 100 probes: %.2e", worst_liouv);
  ok = ok && worst_liouv <= 1e-13;

  // Dressed conjugation: (psi,phi) must agree; the documented elements may
  // deviate (itemized), nothing else may.
  const std::set<std::pair<int, int>> documented = {
      {0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 0}, {0, 2}, {2, 0}};
  Eigen::Matrix3d dev = Eigen::Matrix3d::Zero();
  for (double kc : {0.0, 0.5, 1.0}) {
    for (double phi : {0.0, kPi / 2.0, kPi}) {
      SystemParams p;
      p.omega_r = 0.3;
      p.omega_l = 0.1;
      p.delta_r = 2.0;
      p.delta_l = -1.0;
      p.phi = phi;
      p.kc = kc;
      for (int k = 0; k < 20; ++k) {
        BlochVector v;
        for (int j = 0; j < 8; ++j) v[j] = uv(rng);
        const DressedMatrix truth = to_dressed(derivative_matrix(rhs(p, v)));
        const DressedMatrix printed = dressed_rhs_closed_form(p, to_dressed(from_bloch(v)));
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            dev(i, j) = std::max(dev(i, j), std::abs(truth(i, j) - printed(i, j)));
      }
    }
  }
  const char* names[3] = {"1", "psi", "phi"};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (documented.count({i, j})) {
        if (i <= j)
          notes.addf("printed dressed form deviation at (%s,%s): max %.3e [documented]",
                     names[i], names[j], dev(i, j));
      } else if (dev(i, j) > 1e-12) {
        notes.addf("unexpected deviation at (%s,%s): %.3e", names[i], names[j], dev(i, j));
        ok = false;
      }
    }
  }
  notes.addf("(psi,phi) element agrees to %.2e", std::max(dev(1, 2), dev(2, 1)));
  return ok;
}

bool c9_determinism(Notes& notes) {
  bool ok = true;
  std::size_t total_bytes = 0;
  for (const std::string& name : preset_names()) {
    for (const PresetPart& part : figure_preset(name)) {
      auto body = [&part](unsigned workers) {
        std::ostringstream os;
        emit_csv(os, run_sweep(part.spec, workers), Provenance{});
        const std::string text = os.str();
        return text.substr(text.find('\n') + 1);
      };
      const std::string first = body(1);
      const std::string again = body(1);
      const std::string wide = body(8);
      total_bytes += first.size();
      if (first != again || first != wide) {
        notes.addf("preset %s%s%s not byte-stable", name.c_str(),
                   part.label.empty() ? "" : " part ", part.label.c_str());
        ok = false;
      }
    }
  }
  notes.addf("all presets byte-identical across two runs and worker counts {1, 8} "
             "(%zu body bytes compared per run)",
             total_bytes);
  return ok;
}

}  // namespace

int main() {
  std::printf("vee-sgc acceptance suite\n");
  criterion("C1", "closed-form vs numeric steady state on the 60-point grid",
            c1_closed_form_equivalence);
  criterion("C2", "disentanglement at kc=0.99, phi=0 and the kc->1 closed-form limit",
            c2_disentanglement_point);
  criterion("C3", "phase independence without interference (kc=0)", c3_phase_independence);
  criterion("C4", "steady entropy peaks at one-photon resonance", c4_resonance_maximum);
  criterion("C5", "non-stationary regime at kc=1, phi=pi", c5_nonstationary_regime);
  criterion("C6", "verbatim closed-form oscillation eigenvalues", c6_closed_form_fidelity);
  criterion("C7", "physicality over 100 randomized trajectories", c7_physicality_suite);
  criterion("C8", "numerics: integrator order, eigen oracle, vectorization, dressed form",
            c8_numerics_suite);
  criterion("C9", "preset CSV determinism across runs and worker counts", c9_determinism);

  if (g_failures == 0) {
    std::printf("all criteria passed\n");
  } else {
    std::printf("%d criteria FAILED\n", g_failures);
  }
  return g_failures;
}
