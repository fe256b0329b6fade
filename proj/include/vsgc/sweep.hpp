#pragma once

#include "vsgc/dynamics.hpp"
#include "vsgc/params.hpp"
#include "vsgc/steadystate.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace vsgc {

// A named sequence of parameter values. User-facing sweeps are linear grids;
// figure presets hard-code their published point lists.
struct Axis {
  std::string name;
  std::vector<double> points;

  // Linear axes remember their construction so provenance stays compact and
  // regenerates the identical grid.
  bool linear = false;
  double lo = 0.0;
  double hi = 0.0;
  int n = 0;

  static Axis linspace(std::string name, double lo, double hi, int n);
  static Axis values(std::string name, std::vector<double> pts);
};

// Axis names are the SystemParams fields plus two derived axes:
//   omega_ratio - sets omega_r = value * omega_l at fixed omega_l
//   delta       - sets delta_r = delta_l = value
const std::vector<std::string>& axis_names();
bool is_axis_name(const std::string& name);
SystemParams apply_axis_value(SystemParams base, const std::string& axis, double value);

enum class Observable { Entropy, Populations, Coherences };

std::string observable_name(Observable o);
Observable parse_observable(const std::string& name);

struct TransientOpts {
  double t_end = 50.0;
  double dt = 1e-3;
  int stride = 50;
};

struct SweepSpec {
  SystemParams base;
  std::vector<Axis> axes;  // 1 or 2; grid order is row-major (axis 0 outer)
  std::vector<Observable> observables = {Observable::Entropy, Observable::Populations,
                                         Observable::Coherences};
  std::optional<TransientOpts> transient;  // nullopt = steady-state sweep
};

struct SteadyObservables {
  double entropy = 0.0;
  Eigen::Vector3d populations = Eigen::Vector3d::Zero();
  Eigen::Vector3d coherence_magnitudes = Eigen::Vector3d::Zero();  // |rho12|, |rho13|, |rho23|
  double residual = 0.0;
};

// One grid point. Exactly one of {steady, transient, degenerate flag, error}
// describes its outcome; degenerate and failed points stay in the result so
// the record count always equals the grid size.
struct GridPoint {
  std::array<double, 2> coords{};
  bool degenerate = false;
  std::string error;  // empty on success
  std::optional<SteadyObservables> steady;
  std::optional<Trajectory> transient;
};

struct SweepResult {
  SweepSpec spec;
  std::vector<GridPoint> points;  // row-major over axes
};

// Evaluates every grid point. Points are independent; `workers` threads pull
// from a shared index counter and each point writes only its own slot, so the
// result is identical for any worker count. Per-point failures are recorded,
// never fatal.
SweepResult run_sweep(const SweepSpec& spec, unsigned workers = 1);

struct PresetPart {
  std::string label;  // filename suffix when a preset expands to several sweeps
  SweepSpec spec;
};

// Hard-coded parameter sets reproducing the published figures; see README
// for the catalogue. Throws UnknownPreset.
std::vector<PresetPart> figure_preset(const std::string& name);
const std::vector<std::string>& preset_names();

}  // namespace vsgc
