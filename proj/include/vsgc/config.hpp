#pragma once

#include "vsgc/csv.hpp"
#include "vsgc/params.hpp"
#include "vsgc/sweep.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace vsgc {

struct NumericsConfig {
  double dt = 1e-3;
  double t_end = 50.0;
  int stride = 50;
};

// Everything a run needs; populated from defaults, then a config file, then
// command-line flags (later sources win key by key).
struct RunConfig {
  std::string command;  // evolve | steady | sweep | preset | selftest
  SystemParams params;
  NumericsConfig numerics;
  std::string out_path;  // empty = stdout
  std::string format = "csv";
  unsigned workers = 1;
  std::vector<Axis> axes;       // sweep only
  std::vector<Observable> observables = {Observable::Entropy, Observable::Populations,
                                         Observable::Coherences};
  bool transient_sweep = false;  // sweep mode: steady (default) or transient
  std::string preset;            // preset name
  std::string suite;             // selftest suite filter
};

// Applies one key=value pair. Throws UnknownKey, NonFiniteValue or ParseError.
void set_config_key(RunConfig& cfg, const std::string& key, const std::string& value);

// Flat key=value text; '#' starts a comment, blank lines are skipped. Errors
// carry the source name and line number.
void merge_config_stream(RunConfig& cfg, std::istream& in, const std::string& source_name);
RunConfig parse_config_file(const std::string& path);

// Axis specs: "name:lo:hi:n" (linear) or "name:v1,v2,..." (explicit list).
Axis parse_axis_spec(const std::string& spec);
std::string axis_spec_string(const Axis& axis);

// Full provenance block for cfg; parse_provenance inverts it (round-trip:
// parsing the emitted block reproduces the config's physics content).
Provenance provenance(const RunConfig& cfg);
RunConfig parse_provenance(std::istream& in);

bool same_physics(const RunConfig& a, const RunConfig& b);

}  // namespace vsgc
