#include "vsgc/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>
#include <utility>

namespace vsgc {

Axis Axis::linspace(std::string name, double lo, double hi, int n) {
  if (n < 1) throw Error("axis '" + name + "': point count must be >= 1");
  if (n == 1 && lo != hi) throw Error("axis '" + name + "': single-point axis needs lo == hi");
  Axis ax;
  ax.name = std::move(name);
  ax.linear = true;
  ax.lo = lo;
  ax.hi = hi;
  ax.n = n;
  ax.points.reserve(static_cast<std::size_t>(n));
  if (n == 1) {
    ax.points.push_back(lo);
  } else {
    const double step = (hi - lo) / static_cast<double>(n - 1);
    for (int k = 0; k < n; ++k) ax.points.push_back(lo + static_cast<double>(k) * step);
    ax.points.back() = hi;  // land on the endpoint exactly
  }
  return ax;
}

Axis Axis::values(std::string name, std::vector<double> pts) {
  if (pts.empty()) throw Error("axis '" + name + "': empty point list");
  Axis ax;
  ax.name = std::move(name);
  ax.points = std::move(pts);
  return ax;
}

const std::vector<std::string>& axis_names() {
  static const std::vector<std::string> names = {
      "gamma21", "gamma31", "omega_r", "omega_l", "delta_r", "delta_l",
      "delta_small", "phi", "kc", "omega_ratio", "delta"};
  return names;
}

bool is_axis_name(const std::string& name) {
  const auto& ns = axis_names();
  return std::find(ns.begin(), ns.end(), name) != ns.end();
}

SystemParams apply_axis_value(SystemParams base, const std::string& axis, double value) {
  if (axis == "gamma21") base.gamma21 = value;
  else if (axis == "gamma31") base.gamma31 = value;
  else if (axis == "omega_r") base.omega_r = value;
  else if (axis == "omega_l") base.omega_l = value;
  else if (axis == "delta_r") base.delta_r = value;
  else if (axis == "delta_l") base.delta_l = value;
  else if (axis == "delta_small") base.delta_small = value;
  else if (axis == "phi") base.phi = value;
  else if (axis == "kc") base.kc = value;
  else if (axis == "omega_ratio") base.omega_r = value * base.omega_l;  // omega_l is the anchor
  else if (axis == "delta") { base.delta_r = value; base.delta_l = value; }
  else throw UnknownKey("unknown axis '" + axis + "'");
  return base;
}

std::string observable_name(Observable o) {
  switch (o) {
    case Observable::Entropy: return "entropy";
    case Observable::Populations: return "populations";
    case Observable::Coherences: return "coherences";
  }
  return "?";
}

Observable parse_observable(const std::string& name) {
  if (name == "entropy") return Observable::Entropy;
  if (name == "populations") return Observable::Populations;
  if (name == "coherences") return Observable::Coherences;
  throw UnknownKey("unknown observable '" + name + "'");
}

namespace {

GridPoint evaluate_point(const SweepSpec& spec, std::size_t idx) {
  const std::size_t n1 = spec.axes.size() == 2 ? spec.axes[1].points.size() : 1;
  const std::size_t i0 = idx / n1;
  const std::size_t i1 = idx % n1;

  GridPoint gp;
  gp.coords[0] = spec.axes[0].points[i0];
  if (spec.axes.size() == 2) gp.coords[1] = spec.axes[1].points[i1];

  try {
    SystemParams p = apply_axis_value(spec.base, spec.axes[0].name, gp.coords[0]);
    if (spec.axes.size() == 2) p = apply_axis_value(p, spec.axes[1].name, gp.coords[1]);
    p = validated(p);

    if (spec.transient) {
      gp.transient = evolve(p, ground_state(), spec.transient->t_end, spec.transient->dt,
                            spec.transient->stride);
    } else {
      const SteadyStateReport rep = solve_steady(p);
      if (rep.degenerate) {
        gp.degenerate = true;
        return gp;
      }
      const DensityMatrix rho = from_bloch(*rep.state);
      SteadyObservables obs;
      obs.entropy = von_neumann_entropy(rho);
      obs.populations = populations(rho);
      obs.coherence_magnitudes = {std::abs(rho(0, 1)), std::abs(rho(0, 2)), std::abs(rho(1, 2))};
      obs.residual = rep.residual;
      gp.steady = obs;
    }
  } catch (const Error& e) {
    gp.error = e.what();
  }
  return gp;
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec, unsigned workers) {
  if (spec.axes.empty() || spec.axes.size() > 2) throw Error("sweep needs 1 or 2 axes");
  for (const Axis& ax : spec.axes) {
    if (!is_axis_name(ax.name)) throw UnknownKey("unknown axis '" + ax.name + "'");
    if (ax.points.empty()) throw Error("axis '" + ax.name + "' has no points");
  }
  if (workers < 1) workers = 1;

  const std::size_t n =
      spec.axes[0].points.size() * (spec.axes.size() == 2 ? spec.axes[1].points.size() : 1);

  SweepResult result;
  result.spec = spec;
  result.points.resize(n);

  if (workers == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) result.points[i] = evaluate_point(spec, i);
    return result;
  }

  // Each worker pulls the next index and fills only its own slot; output is
  // independent of scheduling.
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
      result.points[i] = evaluate_point(spec, i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  return result;
}

namespace {

constexpr double kPi = std::numbers::pi;

SystemParams caption_base(double kc, double delta) {
  SystemParams p;  // gamma21 = gamma31 = 1, omega_r = omega_l = 0.1 defaults
  p.kc = kc;
  p.delta_r = delta;
  p.delta_l = delta;
  return p;
}

// Entropy vs time at fixed kc and detuning, one trajectory per listed phase.
SweepSpec transient_phase_curves(double kc, double delta) {
  SweepSpec spec;
  spec.base = caption_base(kc, delta);
  spec.axes = {Axis::values("phi", {0.0, kPi / 6.0, 4.0 * kPi / 3.0})};
  spec.observables = {Observable::Entropy, Observable::Populations};
  spec.transient = TransientOpts{50.0, 1e-3, 50};
  return spec;
}

}  // namespace

std::vector<PresetPart> figure_preset(const std::string& name) {
  const std::vector<double> kc_panels = {0.0, 0.5, 0.99};
  const std::vector<double> delta_curves = {0.0, 2.0, 4.0, 6.0};

  if (name == "fig2a") return {{"", transient_phase_curves(0.0, 0.0)}};
  if (name == "fig2b") return {{"", transient_phase_curves(0.5, 0.0)}};
  if (name == "fig2c") return {{"", transient_phase_curves(0.99, 0.0)}};
  if (name == "fig2d") return {{"", transient_phase_curves(0.0, 2.0)}};
  if (name == "fig2e") return {{"", transient_phase_curves(0.5, 2.0)}};
  if (name == "fig2f") return {{"", transient_phase_curves(0.99, 2.0)}};

  if (name == "fig3") {
    // Steady entropy vs detuning; one part per interference panel, one curve
    // per listed phase.
    std::vector<PresetPart> parts;
    const char* labels[] = {"a", "b", "c"};
    for (std::size_t k = 0; k < kc_panels.size(); ++k) {
      SweepSpec spec;
      spec.base = caption_base(kc_panels[k], 0.0);
      spec.axes = {Axis::values("phi", {0.0, kPi / 6.0, 4.0 * kPi / 3.0}),
                   Axis::linspace("delta", -10.0, 10.0, 201)};
      spec.observables = {Observable::Entropy};
      parts.push_back({labels[k], std::move(spec)});
    }
    return parts;
  }

  if (name == "fig4a" || name == "fig4b") {
    SweepSpec spec;
    spec.base = caption_base(0.0, name == "fig4a" ? 0.0 : 2.0);
    spec.axes = {Axis::values("kc", {0.99, 0.5, 0.0}), Axis::linspace("phi", 0.0, 2.0 * kPi, 201)};
    spec.observables = {Observable::Entropy};
    return {{"", std::move(spec)}};
  }

  if (name == "fig5") {
    SweepSpec spec;
    spec.base = caption_base(0.99, 0.0);  // omega_l = 0.1 anchors the ratio
    spec.axes = {Axis::values("delta", delta_curves), Axis::linspace("omega_ratio", 0.0, 4.0, 201)};
    spec.observables = {Observable::Entropy};
    return {{"", std::move(spec)}};
  }

  if (name == "fig6") {
    SweepSpec phase;
    phase.base = caption_base(0.99, 0.0);
    phase.axes = {Axis::values("delta", delta_curves), Axis::linspace("phi", 0.0, 2.0 * kPi, 201)};
    phase.observables = {Observable::Populations};
    SweepSpec rabi = phase;
    rabi.axes[1] = Axis::linspace("omega_ratio", 0.0, 4.0, 201);
    return {{"phase", std::move(phase)}, {"rabi", std::move(rabi)}};
  }

  if (name == "fig7") {
    SweepSpec spec;
    spec.base = caption_base(0.99, 0.0);
    spec.axes = {Axis::linspace("phi", 0.0, 2.0 * kPi, 61),
                 Axis::linspace("omega_ratio", 0.0, 4.0, 61)};
    spec.observables = {Observable::Entropy};
    return {{"", std::move(spec)}};
  }

  throw UnknownPreset("unknown preset '" + name + "'");
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"fig2a", "fig2b", "fig2c", "fig2d", "fig2e",
                                                 "fig2f", "fig3",  "fig4a", "fig4b", "fig5",
                                                 "fig6",  "fig7"};
  return names;
}

}  // namespace vsgc
