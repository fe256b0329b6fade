#pragma once

#include "vsgc/dressed.hpp"
#include "vsgc/params.hpp"
#include "vsgc/steadystate.hpp"
#include "vsgc/sweep.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace vsgc {

inline constexpr const char* kToolName = "vee-sgc";
inline constexpr const char* kToolVersion = "0.1.0";

// Shortest text that round-trips the double exactly (17 significant digits).
std::string format_double(double x);

std::string iso8601_utc_now();

// The `# key=value` block emitted after the version line. Keys mirror the
// configuration keys so the block parses back into a RunConfig.
struct Provenance {
  std::vector<std::pair<std::string, std::string>> entries;
};

// First line `# vee-sgc v<version> <timestamp>`, then one `# key=value` line
// per provenance entry. Everything after the first line is deterministic.
void write_csv_preamble(std::ostream& os, const Provenance& prov,
                        const std::string& timestamp = iso8601_utc_now());

// Column layouts are fixed per result kind; numeric cells use format_double,
// empty cells mark observables that do not exist (degenerate/error rows).
void emit_csv(std::ostream& os, const Trajectory& traj, const Provenance& prov);
void emit_csv(std::ostream& os, const SweepResult& result, const Provenance& prov);
void emit_csv(std::ostream& os, const SteadyStateReport& report, const Provenance& prov);

// Side-by-side table of the degenerate-oscillation run: `mode` column is
// "numeric" (evolved) or "closed_form" (printed formulas); the two are never
// merged into one row.
void emit_csv(std::ostream& os, const DegenerateOscillation& run, double omega0,
              const Provenance& prov);

// Writes through a closure so all emitters share path-context error handling.
void write_file(const std::string& path, const std::function<void(std::ostream&)>& body);

}  // namespace vsgc
