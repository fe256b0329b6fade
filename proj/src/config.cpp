#include "vsgc/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>

namespace vsgc {

namespace {

double parse_double(const std::string& key, const std::string& value) {
  if (value.empty()) throw ParseError("key '" + key + "': empty value");
  char* end = nullptr;
  const double x = std::strtod(value.c_str(), &end);
  if (end != value.c_str() + value.size())
    throw ParseError("key '" + key + "': cannot parse '" + value + "' as a number");
  if (!std::isfinite(x)) throw NonFiniteValue("key '" + key + "': value must be finite");
  return x;
}

int parse_int(const std::string& key, const std::string& value) {
  const double x = parse_double(key, value);
  const int n = static_cast<int>(x);
  if (static_cast<double>(n) != x)
    throw ParseError("key '" + key + "': expected an integer, got '" + value + "'");
  return n;
}

std::string canonical_axis_name(std::string name) {
  std::replace(name.begin(), name.end(), '-', '_');
  return name;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

void set_axis(RunConfig& cfg, std::size_t index, const std::string& spec) {
  if (cfg.axes.size() <= index) cfg.axes.resize(index + 1);
  cfg.axes[index] = parse_axis_spec(spec);
}

const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> cmds = {"evolve", "steady", "sweep", "preset", "selftest"};
  return cmds;
}

}  // namespace

Axis parse_axis_spec(const std::string& spec) {
  const std::vector<std::string> parts = split(spec, ':');
  if (parts.size() != 2 && parts.size() != 4)
    throw ParseError("axis spec '" + spec + "': expected name:lo:hi:n or name:v1,v2,...");
  const std::string name = canonical_axis_name(parts[0]);
  if (!is_axis_name(name)) throw UnknownKey("unknown axis '" + parts[0] + "'");
  if (parts.size() == 4) {
    return Axis::linspace(name, parse_double("axis lo", parts[1]), parse_double("axis hi", parts[2]),
                          parse_int("axis n", parts[3]));
  }
  std::vector<double> pts;
  for (const std::string& cell : split(parts[1], ',')) pts.push_back(parse_double("axis value", cell));
  return Axis::values(name, std::move(pts));
}

std::string axis_spec_string(const Axis& axis) {
  if (axis.linear) {
    return axis.name + ":" + format_double(axis.lo) + ":" + format_double(axis.hi) + ":" +
           std::to_string(axis.n);
  }
  std::string out = axis.name + ":";
  for (std::size_t k = 0; k < axis.points.size(); ++k) {
    if (k) out += ",";
    out += format_double(axis.points[k]);
  }
  return out;
}

void set_config_key(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "command") {
    const auto& cmds = known_commands();
    if (std::find(cmds.begin(), cmds.end(), value) == cmds.end())
      throw ParseError("unknown command '" + value + "'");
    cfg.command = value;
  } else if (key == "preset") {
    cfg.preset = value;
  } else if (key == "suite") {
    cfg.suite = value;
  } else if (key == "gamma21") {
    cfg.params.gamma21 = parse_double(key, value);
  } else if (key == "gamma31") {
    cfg.params.gamma31 = parse_double(key, value);
  } else if (key == "omega-r") {
    cfg.params.omega_r = parse_double(key, value);
  } else if (key == "omega-l") {
    cfg.params.omega_l = parse_double(key, value);
  } else if (key == "delta-r") {
    cfg.params.delta_r = parse_double(key, value);
  } else if (key == "delta-l") {
    cfg.params.delta_l = parse_double(key, value);
  } else if (key == "delta-small") {
    cfg.params.delta_small = parse_double(key, value);
  } else if (key == "phi") {
    cfg.params.phi = parse_double(key, value);
  } else if (key == "kc") {
    cfg.params.kc = parse_double(key, value);
  } else if (key == "dt") {
    cfg.numerics.dt = parse_double(key, value);
  } else if (key == "t-end") {
    cfg.numerics.t_end = parse_double(key, value);
  } else if (key == "stride") {
    cfg.numerics.stride = parse_int(key, value);
  } else if (key == "out") {
    cfg.out_path = value;
  } else if (key == "format") {
    if (value != "csv") throw ParseError("unsupported format '" + value + "'");
    cfg.format = value;
  } else if (key == "workers") {
    const int n = parse_int(key, value);
    if (n < 1) throw ParseError("workers must be >= 1");
    cfg.workers = static_cast<unsigned>(n);
  } else if (key == "axis1") {
    set_axis(cfg, 0, value);
  } else if (key == "axis2") {
    set_axis(cfg, 1, value);
  } else if (key == "observables") {
    std::vector<Observable> obs;
    for (const std::string& cell : split(value, ',')) obs.push_back(parse_observable(trim(cell)));
    cfg.observables = std::move(obs);
  } else if (key == "mode") {
    if (value == "steady") cfg.transient_sweep = false;
    else if (value == "transient") cfg.transient_sweep = true;
    else throw ParseError("mode must be 'steady' or 'transient', got '" + value + "'");
  } else {
    throw UnknownKey("unknown key '" + key + "'");
  }
}

void merge_config_stream(RunConfig& cfg, std::istream& in, const std::string& source_name) {
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    const std::size_t eq = text.find('=');
    const std::string where = source_name + ":" + std::to_string(line_no) + ": ";
    if (eq == std::string::npos) throw ParseError(where + "expected key=value, got '" + text + "'");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    try {
      set_config_key(cfg, key, value);
    } catch (const UnknownKey& e) {
      throw UnknownKey(where + e.what());
    } catch (const NonFiniteValue& e) {
      throw NonFiniteValue(where + e.what());
    } catch (const ParseError& e) {
      throw ParseError(where + e.what());
    }
  }
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file '" + path + "'");
  RunConfig cfg;
  merge_config_stream(cfg, in, path);
  return cfg;
}

Provenance provenance(const RunConfig& cfg) {
  Provenance prov;
  auto add = [&prov](const std::string& key, const std::string& value) {
    prov.entries.emplace_back(key, value);
  };
  add("command", cfg.command.empty() ? "steady" : cfg.command);
  if (!cfg.preset.empty()) add("preset", cfg.preset);
  if (!cfg.suite.empty()) add("suite", cfg.suite);

  const SystemParams& p = cfg.params;
  add("gamma21", format_double(p.gamma21));
  add("gamma31", format_double(p.gamma31));
  add("omega-r", format_double(p.omega_r));
  add("omega-l", format_double(p.omega_l));
  add("delta-r", format_double(p.delta_r));
  add("delta-l", format_double(p.delta_l));
  add("delta-small", format_double(p.delta_small));
  add("phi", format_double(p.phi));
  add("kc", format_double(p.kc));

  const bool sweepish = cfg.command == "sweep" || cfg.command == "preset";
  const bool timed = cfg.command == "evolve" || (sweepish && cfg.transient_sweep);
  if (timed) {
    add("dt", format_double(cfg.numerics.dt));
    add("t-end", format_double(cfg.numerics.t_end));
    add("stride", std::to_string(cfg.numerics.stride));
  }
  if (sweepish) {
    add("mode", cfg.transient_sweep ? "transient" : "steady");
    if (!cfg.axes.empty()) add("axis1", axis_spec_string(cfg.axes[0]));
    if (cfg.axes.size() > 1) add("axis2", axis_spec_string(cfg.axes[1]));
    std::string obs;
    for (std::size_t k = 0; k < cfg.observables.size(); ++k) {
      if (k) obs += ",";
      obs += observable_name(cfg.observables[k]);
    }
    add("observables", obs);
  }
  add("format", cfg.format);
  return prov;
}

RunConfig parse_provenance(std::istream& in) {
  RunConfig cfg;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string text = trim(line);
    if (text.empty()) continue;
    if (text[0] != '#') break;  // provenance block ended (header row follows)
    text = trim(text.substr(1));
    if (text.rfind(std::string(kToolName) + " v", 0) == 0) continue;  // version line
    const std::size_t eq = text.find('=');
    if (eq == std::string::npos) continue;
    set_config_key(cfg, trim(text.substr(0, eq)), trim(text.substr(eq + 1)));
  }
  return cfg;
}

bool same_physics(const RunConfig& a, const RunConfig& b) {
  const SystemParams &pa = a.params, &pb = b.params;
  if (pa.gamma21 != pb.gamma21 || pa.gamma31 != pb.gamma31 || pa.omega_r != pb.omega_r ||
      pa.omega_l != pb.omega_l || pa.delta_r != pb.delta_r || pa.delta_l != pb.delta_l ||
      pa.delta_small != pb.delta_small || pa.phi != pb.phi || pa.kc != pb.kc)
    return false;
  if (a.command != b.command || a.preset != b.preset || a.transient_sweep != b.transient_sweep)
    return false;
  const bool timed = a.command == "evolve" || (a.command == "sweep" && a.transient_sweep);
  if (timed && (a.numerics.dt != b.numerics.dt || a.numerics.t_end != b.numerics.t_end ||
                a.numerics.stride != b.numerics.stride))
    return false;
  if (a.command == "sweep") {
    if (a.axes.size() != b.axes.size() || a.observables != b.observables) return false;
    for (std::size_t k = 0; k < a.axes.size(); ++k) {
      if (a.axes[k].name != b.axes[k].name || a.axes[k].points != b.axes[k].points) return false;
    }
  }
  return true;
}

}  // namespace vsgc
