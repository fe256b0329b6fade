// Command-line front end: evolve | steady | sweep | preset <name> | selftest.
// Emits column-oriented CSV with a provenance header for external plotting;
// no rendering happens here.

#include "vsgc/config.hpp"
#include "vsgc/csv.hpp"
#include "vsgc/dynamics.hpp"
#include "vsgc/selftest.hpp"
#include "vsgc/steadystate.hpp"
#include "vsgc/sweep.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace vsgc;

constexpr int kExitOk = 0;
constexpr int kExitPhysics = 1;  // degenerate steady state, integration failure
constexpr int kExitUsage = 2;   // flags, config, IO

void emit(const RunConfig& cfg, const std::string& path,
          const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    body(std::cout);
  } else {
    write_file(path, body);
    std::cerr << "wrote " << path << "\n";
  }
  (void)cfg;
}

std::string part_path(const std::string& base, const std::string& label) {
  if (label.empty() || base.empty()) return base;
  const std::size_t dot = base.rfind('.');
  if (dot == std::string::npos || base.find('/', dot) != std::string::npos)
    return base + "_" + label;
  return base.substr(0, dot) + "_" + label + base.substr(dot);
}

RunConfig config_for_spec(RunConfig cfg, const SweepSpec& spec) {
  cfg.params = spec.base;
  cfg.axes = spec.axes;
  cfg.observables = spec.observables;
  cfg.transient_sweep = spec.transient.has_value();
  if (spec.transient) {
    cfg.numerics.dt = spec.transient->dt;
    cfg.numerics.t_end = spec.transient->t_end;
    cfg.numerics.stride = spec.transient->stride;
  }
  return cfg;
}

int run_evolve(const RunConfig& cfg) {
  const Trajectory traj = evolve(validated(cfg.params), ground_state(), cfg.numerics.t_end,
                                 cfg.numerics.dt, cfg.numerics.stride);
  emit(cfg, cfg.out_path, [&](std::ostream& os) { emit_csv(os, traj, provenance(cfg)); });
  return kExitOk;
}

int run_steady(const RunConfig& cfg) {
  const SteadyStateReport rep = solve_steady(cfg.params);
  emit(cfg, cfg.out_path, [&](std::ostream& os) { emit_csv(os, rep, provenance(cfg)); });
  if (rep.degenerate) {
    std::cerr << "no unique steady state at these parameters (degenerate; "
                 "two smallest singular values "
              << format_double(rep.smallest_singular_values[0]) << ", "
              << format_double(rep.smallest_singular_values[1]) << ")\n";
    return kExitPhysics;
  }
  return kExitOk;
}

int run_sweep_command(const RunConfig& cfg) {
  if (cfg.axes.empty()) {
    std::cerr << "sweep needs at least one --axis\n";
    return kExitUsage;
  }
  SweepSpec spec;
  spec.base = cfg.params;
  spec.axes = cfg.axes;
  spec.observables = cfg.observables;
  if (cfg.transient_sweep)
    spec.transient = TransientOpts{cfg.numerics.t_end, cfg.numerics.dt, cfg.numerics.stride};
  const SweepResult result = run_sweep(spec, cfg.workers);
  emit(cfg, cfg.out_path, [&](std::ostream& os) { emit_csv(os, result, provenance(cfg)); });
  return kExitOk;
}

int run_preset(const RunConfig& cfg) {
  const std::vector<PresetPart> parts = figure_preset(cfg.preset);
  for (const PresetPart& part : parts) {
    const SweepResult result = run_sweep(part.spec, cfg.workers);
    RunConfig pc = config_for_spec(cfg, part.spec);
    pc.command = "preset";
    const std::string path = part_path(cfg.out_path, parts.size() > 1 ? part.label : "");
    emit(pc, path, [&](std::ostream& os) { emit_csv(os, result, provenance(pc)); });
  }
  return kExitOk;
}

int run_selftest_command(const RunConfig& cfg, bool perturb) {
  SelftestOptions opts;
  opts.suite = cfg.suite;
  opts.perturb_rhs = perturb;
  const auto results = run_selftest(opts);
  print_report(std::cout, results);
  if (!all_passed(results)) {
    std::cerr << "selftest FAILED\n";
    return kExitPhysics;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vee-sgc: driven V-type three-level atom with vacuum-induced coherence.\n"
               "Computes trajectories, steady states and entanglement-entropy sweeps."};
  app.get_formatter()->column_width(28);

  std::string command, name_arg, config_path;
  std::optional<double> gamma21, gamma31, omega_r, omega_l, delta_r, delta_l, delta_small, phi, kc,
      dt, t_end;
  std::optional<int> stride, workers;
  std::optional<std::string> out, format, observables, mode, suite;
  std::vector<std::string> axis_specs;
  bool perturb = false;

  app.add_option("command", command, "evolve | steady | sweep | preset | selftest")->required();
  app.add_option("name", name_arg, "preset name (with the preset command)");
  app.add_option("--config", config_path, "key=value config file; flags override its values");

  app.add_option("--gamma21", gamma21, "decay rate of |2>, units of gamma [1]");
  app.add_option("--gamma31", gamma31, "decay rate of |3>, units of gamma [1]");
  app.add_option("--omega-r", omega_r, "Rabi frequency on |1>-|2> [0.1]");
  app.add_option("--omega-l", omega_l, "Rabi frequency on |1>-|3> [0.1]");
  app.add_option("--delta-r", delta_r, "right-field detuning [0]");
  app.add_option("--delta-l", delta_l, "left-field detuning [0]");
  app.add_option("--delta-small", delta_small, "relative frequency of the fields [0]");
  app.add_option("--phi", phi, "relative phase in radians [0]");
  app.add_option("--kc", kc, "interference strength in [0,1] [0]");

  app.add_option("--dt", dt, "integration step, units of 1/gamma [1e-3]");
  app.add_option("--t-end", t_end, "integration end time [50]");
  app.add_option("--stride", stride, "record every N steps [50]");
  app.add_option("--workers", workers, "sweep worker threads [1]");
  app.add_option("--axis", axis_specs, "sweep axis, name:lo:hi:n or name:v1,v2,... (repeat for 2)")
      ->expected(0, 2);
  app.add_option("--observables", observables, "comma list of entropy,populations,coherences");
  app.add_option("--mode", mode, "sweep mode: steady | transient");
  app.add_option("--out", out, "output file (default stdout)");
  app.add_option("--format", format, "output format (csv)");
  app.add_option("--suite", suite, "selftest suite filter");
  app.add_flag("--perturb-rhs", perturb)->group("");  // selftest negative control

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    RunConfig cfg;
    if (!config_path.empty()) cfg = parse_config_file(config_path);

    if (gamma21) cfg.params.gamma21 = *gamma21;
    if (gamma31) cfg.params.gamma31 = *gamma31;
    if (omega_r) cfg.params.omega_r = *omega_r;
    if (omega_l) cfg.params.omega_l = *omega_l;
    if (delta_r) cfg.params.delta_r = *delta_r;
    if (delta_l) cfg.params.delta_l = *delta_l;
    if (delta_small) cfg.params.delta_small = *delta_small;
    if (phi) cfg.params.phi = *phi;
    if (kc) cfg.params.kc = *kc;
    if (dt) cfg.numerics.dt = *dt;
    if (t_end) cfg.numerics.t_end = *t_end;
    if (stride) cfg.numerics.stride = *stride;
    if (workers) set_config_key(cfg, "workers", std::to_string(*workers));
    if (out) cfg.out_path = *out;
    if (format) set_config_key(cfg, "format", *format);
    if (observables) set_config_key(cfg, "observables", *observables);
    if (mode) set_config_key(cfg, "mode", *mode);
    if (suite) cfg.suite = *suite;
    for (std::size_t k = 0; k < axis_specs.size(); ++k)
      set_config_key(cfg, k == 0 ? "axis1" : "axis2", axis_specs[k]);

    set_config_key(cfg, "command", command);
    if (!name_arg.empty()) cfg.preset = name_arg;

    cfg.params = validated(cfg.params);

    if (cfg.command == "evolve") return run_evolve(cfg);
    if (cfg.command == "steady") return run_steady(cfg);
    if (cfg.command == "sweep") return run_sweep_command(cfg);
    if (cfg.command == "preset") {
      if (cfg.preset.empty()) {
        std::cerr << "preset needs a name; known presets:";
        for (const auto& n : preset_names()) std::cerr << " " << n;
        std::cerr << "\n";
        return kExitUsage;
      }
      return run_preset(cfg);
    }
    if (cfg.command == "selftest") return run_selftest_command(cfg, perturb);
    std::cerr << "unknown command '" << cfg.command << "'\n";
    return kExitUsage;
  } catch (const StepTooLarge& e) {
    std::cerr << e.what() << "\n";
    return kExitPhysics;
  } catch (const PositivityViolation& e) {
    std::cerr << e.what() << "\n";
    return kExitPhysics;
  } catch (const DegenerateLiouvillian& e) {
    std::cerr << e.what() << "\n";
    return kExitPhysics;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
}
