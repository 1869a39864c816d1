#include "core/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "core/textio.hpp"

namespace dsp {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string unquote(const std::string& s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
  return s;
}

double parse_double(const std::string& value, const std::string& key) {
  const std::string v = trim(value);
  char* end = nullptr;
  const double d = std::strtod(v.c_str(), &end);
  if (v.empty() || end != v.c_str() + v.size())
    throw std::invalid_argument("key " + key + ": cannot parse number '" + value + "'");
  return d;
}

std::size_t parse_size(const std::string& value, const std::string& key) {
  const std::string v = trim(value);
  char* end = nullptr;
  const unsigned long long u = std::strtoull(v.c_str(), &end, 10);
  if (v.empty() || end != v.c_str() + v.size())
    throw std::invalid_argument("key " + key + ": cannot parse integer '" + value + "'");
  return static_cast<std::size_t>(u);
}

using Setter = std::function<void(Scenario&, const std::string& value)>;

// One shared table drives the parser, sweep overrides, and the echo check.
const std::map<std::string, Setter>& setter_table() {
  static const std::map<std::string, Setter> table = [] {
    std::map<std::string, Setter> t;
    t["medium.g"] = [](Scenario& s, const std::string& v) { s.medium.g = parse_double(v, "medium.g"); };
    t["medium.atoms_n"] = [](Scenario& s, const std::string& v) { s.medium.atoms_n = parse_double(v, "medium.atoms_n"); };
    t["medium.gamma_ab"] = [](Scenario& s, const std::string& v) { s.medium.gamma_ab = parse_double(v, "medium.gamma_ab"); };
    t["medium.gamma_cb"] = [](Scenario& s, const std::string& v) { s.medium.gamma_cb = parse_double(v, "medium.gamma_cb"); };
    t["medium.gamma_ca"] = [](Scenario& s, const std::string& v) { s.medium.gamma_ca = parse_double(v, "medium.gamma_ca"); };
    t["medium.omega0"] = [](Scenario& s, const std::string& v) { s.medium.omega0 = parse_double(v, "medium.omega0"); };
    t["medium.light_speed"] = [](Scenario& s, const std::string& v) { s.medium.light_speed = parse_double(v, "medium.light_speed"); };
    t["probe.detuning"] = [](Scenario& s, const std::string& v) { s.probe.detuning = parse_double(v, "probe.detuning"); };
    t["probe.a0cos0"] = [](Scenario& s, const std::string& v) { s.probe.a0cos0 = parse_double(v, "probe.a0cos0"); };
    t["probe.k_c"] = [](Scenario& s, const std::string& v) {
      if (trim(v) == "auto") s.probe.k_c.reset();
      else s.probe.k_c = parse_double(v, "probe.k_c");
    };
    t["control.kind"] = [](Scenario& s, const std::string& v) { s.control.kind = schedule_kind_from_name(trim(unquote(v))); };
    t["control.omega_start"] = [](Scenario& s, const std::string& v) { s.control.omega_start = parse_double(v, "control.omega_start"); };
    t["control.omega_end"] = [](Scenario& s, const std::string& v) { s.control.omega_end = parse_double(v, "control.omega_end"); };
    t["control.t_center"] = [](Scenario& s, const std::string& v) { s.control.t_center = parse_double(v, "control.t_center"); };
    t["control.t_ramp"] = [](Scenario& s, const std::string& v) { s.control.t_ramp = parse_double(v, "control.t_ramp"); };
    t["grid.points"] = [](Scenario& s, const std::string& v) { s.grid.points = parse_size(v, "grid.points"); };
    t["grid.length"] = [](Scenario& s, const std::string& v) { s.grid.length = parse_double(v, "grid.length"); };
    t["init.profile"] = [](Scenario& s, const std::string& v) {
      const std::string name = trim(unquote(v));
      if (name == "bright") s.init.kind = InitKind::Bright;
      else if (name == "dark") s.init.kind = InitKind::Dark;
      else if (name == "printed") s.init.kind = InitKind::PrintedForm;
      else if (name == "gaussian") s.init.kind = InitKind::Gaussian;
      else if (name == "zero") s.init.kind = InitKind::Zero;
      else if (name == "file") s.init.kind = InitKind::File;
      else throw std::invalid_argument(
          "key init.profile: expected bright, dark, printed, gaussian, zero or file (got '" +
          name + "')");
    };
    t["init.amplitude"] = [](Scenario& s, const std::string& v) { s.init.amplitude = parse_double(v, "init.amplitude"); };
    t["init.width"] = [](Scenario& s, const std::string& v) { s.init.width = parse_double(v, "init.width"); };
    t["init.center"] = [](Scenario& s, const std::string& v) { s.init.center = parse_double(v, "init.center"); };
    t["init.path"] = [](Scenario& s, const std::string& v) { s.init.path = trim(unquote(v)); };
    t["run.t_final"] = [](Scenario& s, const std::string& v) { s.run.t_final = parse_double(v, "run.t_final"); };
    t["run.dt"] = [](Scenario& s, const std::string& v) { s.run.dt = parse_double(v, "run.dt"); };
    t["run.snapshot_every"] = [](Scenario& s, const std::string& v) { s.run.snapshot_every = parse_size(v, "run.snapshot_every"); };
    t["run.mode"] = [](Scenario& s, const std::string& v) {
      const std::string name = trim(unquote(v));
      if (name == "physical") s.run.mode = PropagationMode::Physical;
      else if (name == "normalized") s.run.mode = PropagationMode::Normalized;
      else throw std::invalid_argument("key run.mode: expected physical or normalized (got '" + name + "')");
    };
    t["run.perturbation"] = [](Scenario& s, const std::string& v) {
      const std::string name = trim(unquote(v));
      if (name == "tan_theta") s.run.perturbation = PerturbationModel::TanTheta;
      else if (name == "exact") s.run.perturbation = PerturbationModel::ExactLogCn;
      else throw std::invalid_argument("key run.perturbation: expected tan_theta or exact (got '" + name + "')");
    };
    return t;
  }();
  return table;
}

const char* kSections[] = {"medium", "probe", "control", "grid", "init", "run"};

bool known_section(const std::string& s) {
  return std::find_if(std::begin(kSections), std::end(kSections),
                      [&](const char* k) { return s == k; }) != std::end(kSections);
}

void apply_preset(Scenario& s, const std::string& name) {
  if (!is_known_preset(name))
    throw std::invalid_argument("unknown preset '" + name + "' (known: paper-ultraslow)");
  const Preset p = make_paper_ultraslow();
  s.medium = p.medium;
  s.probe = p.probe;
  s.control = p.control;
}

}  // namespace

std::string init_kind_name(InitKind kind) {
  switch (kind) {
    case InitKind::Bright: return "bright";
    case InitKind::Dark: return "dark";
    case InitKind::PrintedForm: return "printed";
    case InitKind::Gaussian: return "gaussian";
    case InitKind::Zero: return "zero";
    case InitKind::File: return "file";
  }
  return "?";
}

void Scenario::validate() const {
  medium.validate();
  probe.validate();
  control.validate();
  Grid1D::make(grid.points, grid.length);  // throws with the grid invariants
  switch (init.kind) {
    case InitKind::Gaussian:
      if (!(init.amplitude > 0)) throw std::invalid_argument("key init.amplitude: gaussian profile needs amplitude > 0");
      if (!(init.width > 0)) throw std::invalid_argument("key init.width: gaussian profile needs width > 0");
      break;
    case InitKind::File:
      if (init.path.empty()) throw std::invalid_argument("key init.path: file profile needs a path");
      break;
    default:
      if (init.amplitude < 0) throw std::invalid_argument("key init.amplitude: must be >= 0 (0 selects the amplitude law)");
      break;
  }
  if (!(run.t_final > 0)) throw std::invalid_argument("key run.t_final: must be > 0");
  if (!(run.dt > 0)) throw std::invalid_argument("key run.dt: must be > 0");
  if (run.t_final < run.dt) throw std::invalid_argument("key run.t_final: shorter than one run.dt step");
}

Scenario parse_scenario(const std::string& text) {
  Scenario s;
  bool have_preset = false;
  std::map<std::string, int> seen;  // key path -> line
  std::string section;
  int line_no = 0;
  bool any_section = false;

  std::istringstream in(text);
  std::string raw;
  struct Pending {
    std::string path, value;
    int line;
  };
  std::vector<Pending> pending;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']')
        throw std::invalid_argument("parse error line " + std::to_string(line_no) +
                                    ": malformed section header '" + raw + "'");
      section = trim(line.substr(1, line.size() - 2));
      if (!known_section(section))
        throw std::invalid_argument("parse error line " + std::to_string(line_no) +
                                    ": unknown section [" + section + "]");
      any_section = true;
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("parse error line " + std::to_string(line_no) +
                                  ": expected 'key = value', got '" + raw + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (section.empty()) {
      if (key == "preset") {
        if (any_section)
          throw std::invalid_argument("parse error line " + std::to_string(line_no) +
                                      ": preset must precede the first section");
        apply_preset(s, unquote(value));
        have_preset = true;
        continue;
      }
      throw std::invalid_argument("parse error line " + std::to_string(line_no) + ": unknown key '" +
                                  key + "' outside any section");
    }

    const std::string path = section + "." + key;
    if (setter_table().find(path) == setter_table().end())
      throw std::invalid_argument("parse error line " + std::to_string(line_no) + ": unknown key '" +
                                  key + "' in section [" + section + "]");
    if (seen.count(path))
      throw std::invalid_argument("parse error line " + std::to_string(line_no) + ": duplicate key '" +
                                  path + "' (first at line " + std::to_string(seen[path]) + ")");
    seen[path] = line_no;
    pending.push_back({path, value, line_no});
  }

  // Required inputs unless a preset filled them in.
  if (!have_preset) {
    const char* required[] = {"medium.g", "medium.atoms_n", "medium.omega0",
                              "probe.a0cos0", "control.omega_start"};
    for (const char* req : required) {
      if (!seen.count(req))
        throw std::invalid_argument(
            std::string("parse error: missing required key ") + req +
            "; provide sections [medium], [probe], [control] or a top-level preset");
    }
  }

  for (const auto& p : pending) {
    try {
      setter_table().at(p.path)(s, p.value);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("parse error line " + std::to_string(p.line) + ": " + e.what());
    }
  }

  if (s.control.kind == ScheduleKind::Constant && !seen.count("control.omega_end"))
    s.control.omega_end = s.control.omega_start;

  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    // attach the source line when the failing key was given explicitly
    const std::string msg = e.what();
    for (const auto& [path, ln] : seen) {
      if (msg.find(path) != std::string::npos)
        throw std::invalid_argument("parse error line " + std::to_string(ln) + ": " + msg);
    }
    throw std::invalid_argument("parse error: " + msg);
  }
  return s;
}

Scenario load_scenario_file(const std::string& path) {
  return parse_scenario(read_text_file(path));
}

std::string echo_scenario(const Scenario& s) {
  std::ostringstream out;
  auto kv = [&](const char* key, const std::string& v) { out << key << " = " << v << "\n"; };
  auto kd = [&](const char* key, double v) { kv(key, format_g17(v)); };

  out << "[medium]\n";
  kd("g", s.medium.g);
  kd("atoms_n", s.medium.atoms_n);
  kd("gamma_ab", s.medium.gamma_ab);
  kd("gamma_cb", s.medium.gamma_cb);
  kd("gamma_ca", s.medium.gamma_ca);
  kd("omega0", s.medium.omega0);
  kd("light_speed", s.medium.light_speed);
  out << "[probe]\n";
  kd("detuning", s.probe.detuning);
  kd("a0cos0", s.probe.a0cos0);
  kv("k_c", s.probe.k_c ? format_g17(*s.probe.k_c) : "auto");
  out << "[control]\n";
  kv("kind", schedule_kind_name(s.control.kind));
  kd("omega_start", s.control.omega_start);
  kd("omega_end", s.control.omega_end);
  kd("t_center", s.control.t_center);
  kd("t_ramp", s.control.t_ramp);
  out << "[grid]\n";
  kv("points", std::to_string(s.grid.points));
  kd("length", s.grid.length);
  out << "[init]\n";
  kv("profile", init_kind_name(s.init.kind));
  kd("amplitude", s.init.amplitude);
  kd("width", s.init.width);
  kd("center", s.init.center);
  if (s.init.kind == InitKind::File) kv("path", "\"" + s.init.path + "\"");
  out << "[run]\n";
  kd("t_final", s.run.t_final);
  kd("dt", s.run.dt);
  kv("snapshot_every", std::to_string(s.run.snapshot_every));
  kv("mode", s.run.mode == PropagationMode::Physical ? "physical" : "normalized");
  kv("perturbation",
     s.run.perturbation == PerturbationModel::TanTheta ? "tan_theta" : "exact");
  return out.str();
}

std::uint64_t scenario_hash(const Scenario& s) { return fnv1a64(echo_scenario(s)); }

void apply_override(Scenario& s, const std::string& path, const std::string& value) {
  const auto it = setter_table().find(path);
  if (it == setter_table().end())
    throw std::invalid_argument("unknown parameter path '" + path + "'");
  it->second(s, value);
  s.validate();
}

}  // namespace dsp
