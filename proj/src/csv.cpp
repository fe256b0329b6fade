#include "vsgc/csv.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <functional>
#include <ostream>

namespace vsgc {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string iso8601_utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_csv_preamble(std::ostream& os, const Provenance& prov, const std::string& timestamp) {
  os << "# " << kToolName << " v" << kToolVersion << " " << timestamp << "\n";
  for (const auto& [key, value] : prov.entries) os << "# " << key << "=" << value << "\n";
}

namespace {

// Coherence components of the upper triangle; rho23 = conj(rho32).
void append_coherence_cells(std::ostream& os, const BlochVector& v) {
  os << "," << format_double(v[kRe12]) << "," << format_double(v[kIm12]) << ","
     << format_double(v[kRe13]) << "," << format_double(v[kIm13]) << ","
     << format_double(v[kRe32]) << "," << format_double(-v[kIm32]);
}

void append_sample_row(std::ostream& os, const Trajectory& traj, std::size_t k) {
  const auto& pops = traj.populations_abc[k];
  os << format_double(traj.times[k]) << "," << format_double(traj.entropies[k]) << ","
     << format_double(pops[0]) << "," << format_double(pops[1]) << "," << format_double(pops[2]);
  append_coherence_cells(os, traj.states[k]);
}

bool has_observable(const SweepSpec& spec, Observable o) {
  for (Observable x : spec.observables)
    if (x == o) return true;
  return false;
}

}  // namespace

void emit_csv(std::ostream& os, const Trajectory& traj, const Provenance& prov) {
  write_csv_preamble(os, prov);
  os << "t_gamma,entropy_nats,rho11,rho22,rho33,re_rho12,im_rho12,re_rho13,im_rho13,"
        "re_rho23,im_rho23\n";
  for (std::size_t k = 0; k < traj.size(); ++k) {
    append_sample_row(os, traj, k);
    os << "\n";
  }
}

void emit_csv(std::ostream& os, const SweepResult& result, const Provenance& prov) {
  write_csv_preamble(os, prov);

  const SweepSpec& spec = result.spec;
  const bool transient = spec.transient.has_value();
  const bool with_entropy = has_observable(spec, Observable::Entropy);
  const bool with_pops = has_observable(spec, Observable::Populations);
  const bool with_coh = has_observable(spec, Observable::Coherences);
  const int n_obs_cells =
      (with_entropy ? 1 : 0) + (with_pops ? 3 : 0) + (with_coh ? 3 : 0);

  os << spec.axes[0].name;
  if (spec.axes.size() == 2) os << "," << spec.axes[1].name;
  if (transient) os << ",t_gamma";
  if (with_entropy) os << ",entropy_nats";
  if (with_pops) os << ",rho11,rho22,rho33";
  if (with_coh) os << ",abs_rho12,abs_rho13,abs_rho23";
  os << ",degenerate,error\n";

  auto coords_cells = [&](const GridPoint& gp) {
    std::string cells = format_double(gp.coords[0]);
    if (spec.axes.size() == 2) cells += "," + format_double(gp.coords[1]);
    return cells;
  };
  auto empty_observables = [&](std::ostream& o) {
    for (int k = 0; k < n_obs_cells + (transient ? 1 : 0); ++k) o << ",";
  };

  for (const GridPoint& gp : result.points) {
    if (gp.degenerate || !gp.error.empty()) {
      os << coords_cells(gp);
      empty_observables(os);
      os << "," << (gp.degenerate ? 1 : 0) << "," << gp.error << "\n";
      continue;
    }
    if (transient) {
      const Trajectory& traj = *gp.transient;
      for (std::size_t k = 0; k < traj.size(); ++k) {
        os << coords_cells(gp) << "," << format_double(traj.times[k]);
        if (with_entropy) os << "," << format_double(traj.entropies[k]);
        if (with_pops) {
          const auto& pops = traj.populations_abc[k];
          os << "," << format_double(pops[0]) << "," << format_double(pops[1]) << ","
             << format_double(pops[2]);
        }
        if (with_coh) {
          const BlochVector& v = traj.states[k];
          os << "," << format_double(std::hypot(v[kRe12], v[kIm12])) << ","
             << format_double(std::hypot(v[kRe13], v[kIm13])) << ","
             << format_double(std::hypot(v[kRe32], v[kIm32]));
        }
        os << ",0,\n";
      }
    } else {
      const SteadyObservables& obs = *gp.steady;
      os << coords_cells(gp);
      if (with_entropy) os << "," << format_double(obs.entropy);
      if (with_pops)
        os << "," << format_double(obs.populations[0]) << "," << format_double(obs.populations[1])
           << "," << format_double(obs.populations[2]);
      if (with_coh)
        os << "," << format_double(obs.coherence_magnitudes[0]) << ","
           << format_double(obs.coherence_magnitudes[1]) << ","
           << format_double(obs.coherence_magnitudes[2]);
      os << ",0,\n";
    }
  }
}

void emit_csv(std::ostream& os, const SteadyStateReport& report, const Provenance& prov) {
  write_csv_preamble(os, prov);
  os << "entropy_nats,rho11,rho22,rho33,re_rho12,im_rho12,re_rho13,im_rho13,re_rho23,im_rho23,"
        "residual,sv_smallest,sv_second_smallest,degenerate\n";
  if (report.degenerate) {
    os << ",,,,,,,,,,," << format_double(report.smallest_singular_values[0]) << ","
       << format_double(report.smallest_singular_values[1]) << ",1\n";
    return;
  }
  const BlochVector& v = *report.state;
  const DensityMatrix rho = from_bloch(v);
  const Eigen::Vector3d pops = populations(rho);
  os << format_double(von_neumann_entropy(rho)) << "," << format_double(pops[0]) << ","
     << format_double(pops[1]) << "," << format_double(pops[2]);
  append_coherence_cells(os, v);
  os << "," << format_double(report.residual) << ","
     << format_double(report.smallest_singular_values[0]) << ","
     << format_double(report.smallest_singular_values[1]) << ",0\n";
}

void emit_csv(std::ostream& os, const DegenerateOscillation& run, double omega0,
              const Provenance& prov) {
  write_csv_preamble(os, prov);
  os << "mode,t_gamma,rho11,rho_psipsi,rho_phiphi,abs_rho_1psi,lambda_plus,lambda_minus,"
        "entropy_nats\n";
  const Trajectory& traj = run.trajectory;
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const DressedMatrix& d = run.dressed[k];
    const auto lambda = hermitian_eigenvalues(d);
    os << "numeric," << format_double(traj.times[k]) << "," << format_double(d(0, 0).real())
       << "," << format_double(d(1, 1).real()) << "," << format_double(d(2, 2).real()) << ","
       << format_double(std::abs(d(0, 1))) << "," << format_double(lambda[0]) << ","
       << format_double(lambda[2]) << "," << format_double(traj.entropies[k]) << "\n";
  }
  // Printed closed form at the same times. lambda- dips below zero, so no
  // entropy is defined for these rows.
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const double t = traj.times[k];
    const DressedMatrix m = closed_form_oscillation_state(omega0, t);
    const auto lambda = closed_form_oscillation_eigenvalues(omega0, t);
    os << "closed_form," << format_double(t) << "," << format_double(m(0, 0).real()) << ","
       << format_double(m(1, 1).real()) << "," << format_double(0.0) << ","
       << format_double(std::abs(m(0, 1))) << "," << format_double(lambda[0]) << ","
       << format_double(lambda[1]) << ",\n";
  }
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot open '" + path + "' for writing");
  body(os);
  os.flush();
  if (!os) throw Error("write to '" + path + "' failed");
}

}  // namespace vsgc
