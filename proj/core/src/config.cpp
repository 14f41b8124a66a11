#include "molcav/config.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "molcav/error.hpp"
#include "molcav/presets.hpp"

namespace molcav {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorKind::ConfigError, msg); }

double number(const json& j, const std::string& key) {
  if (!j.is_number()) fail("'" + key + "' must be a number");
  return j.get<double>();
}

void read_drive(SystemParams& p, const json& d) {
  if (!d.is_object()) fail("'base.drive' must be an object");
  if (d.contains("mode")) {
    const std::string mode = d.at("mode").get<std::string>();
    if (mode == "direct") {
      if (!p.is_direct()) p.drive = DirectDrive{};
    } else if (mode == "physical") {
      if (p.is_direct()) p.drive = PhysicalDrive{};
    } else {
      fail("drive mode must be 'direct' or 'physical'");
    }
  }
  for (const auto& [key, value] : d.items()) {
    if (key == "mode") continue;
    if (key != "G_1" && key != "G_2" && key != "delta_tilde" && key != "E_amplitude") {
      fail("unknown drive key '" + key + "'");
    }
    apply_parameter(p, key, number(value, "drive." + key));
  }
}

void read_base(SystemParams& p, const json& b) {
  if (!b.is_object()) fail("'base' must be an object");
  if (b.contains("drive")) read_drive(p, b.at("drive"));
  // omega_m_rad_s first so a temperature converts with the right frequency.
  if (b.contains("omega_m_rad_s")) p.omega_m_rad_s = number(b.at("omega_m_rad_s"), "omega_m_rad_s");
  if (b.contains("n_th") && b.contains("T")) fail("give either base.n_th or base.T, not both");
  for (const auto& [key, value] : b.items()) {
    if (key == "drive" || key == "omega_m_rad_s" || key == "T") continue;
    if (key == "G_1" || key == "G_2" || key == "G_j" || key == "delta_tilde" || key == "E_amplitude") {
      fail("'" + key + "' belongs under base.drive");
    }
    apply_parameter(p, key, number(value, "base." + key));
  }
  if (b.contains("T")) apply_parameter(p, "T", number(b.at("T"), "base.T"));
}

SweepAxis read_axis(const json& a) {
  if (!a.is_object()) fail("each axis must be an object");
  SweepAxis ax;
  for (const auto& [key, value] : a.items()) {
    if (key == "name") ax.name = value.get<std::string>();
    else if (key == "min") ax.min = number(value, "axis.min");
    else if (key == "max") ax.max = number(value, "axis.max");
    else if (key == "count") {
      if (!value.is_number_integer()) fail("axis.count must be an integer");
      ax.count = value.get<int>();
    } else if (key == "scale") {
      const auto s = value.get<std::string>();
      if (s == "linear") ax.scale = AxisScale::linear;
      else if (s == "log") ax.scale = AxisScale::log;
      else fail("axis.scale must be 'linear' or 'log'");
    } else {
      fail("unknown axis key '" + key + "'");
    }
  }
  if (ax.name.empty()) fail("axis without a name");
  return ax;
}

}  // namespace

SweepSpec parse_config(std::string_view json_text, std::optional<SweepSpec> start) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) fail("config root must be an object");

  SweepSpec spec;
  if (start) {
    spec = std::move(*start);
  } else if (j.contains("preset")) {
    if (!j.at("preset").is_string()) fail("'preset' must be a string");
    spec = figure_preset(j.at("preset").get<std::string>());
  }

  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "preset") continue;
      if (key == "name") spec.preset = value.get<std::string>();
      else if (key == "citation") spec.citation = value.get<std::string>();
      else if (key == "notes") {
        if (!value.is_object()) fail("'notes' must be an object");
        spec.notes.clear();
        for (const auto& [k, v] : value.items()) spec.notes.emplace_back(k, v.get<std::string>());
      } else if (key == "base") {
        read_base(spec.base, value);
      } else if (key == "axes") {
        if (!value.is_array()) fail("'axes' must be an array");
        spec.axes.clear();
        for (const auto& a : value) spec.axes.push_back(read_axis(a));
      } else if (key == "outputs") {
        if (!value.is_array()) fail("'outputs' must be an array");
        spec.outputs.clear();
        for (const auto& q : value) {
          const auto name = q.get<std::string>();
          const auto parsed = parse_quantity(name);
          if (!parsed) fail("unknown output quantity '" + name + "'");
          spec.outputs.push_back(*parsed);
        }
      } else if (key == "output_path") {
        spec.output_path = value.get<std::string>();
      } else if (key == "threads") {
        if (!value.is_number_integer()) fail("'threads' must be an integer");
        spec.threads = value.get<int>();
      } else if (key == "m_follows_half_n") {
        spec.m_follows_half_n = value.get<bool>();
      } else {
        fail("unknown config key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    fail(std::string("config type error: ") + e.what());
  }
  validate(spec);
  return spec;
}

SweepSpec load_config_file(const std::filesystem::path& path, std::optional<SweepSpec> start) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot read config '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), std::move(start));
}

std::string spec_to_config(const SweepSpec& spec) {
  const SystemParams& b = spec.base;
  json base = {
      {"omega_m_rad_s", b.omega_m_rad_s}, {"omega_1", b.omega_1}, {"omega_2", b.omega_2},
      {"delta_a", b.delta_a},             {"kappa", b.kappa},     {"gamma_1", b.gamma_1},
      {"gamma_2", b.gamma_2},             {"g_m", b.g_m},         {"J_m", b.J_m},
      {"theta", b.theta},                 {"N_total", b.N_total}, {"M_split", b.M_split},
      {"n_th", b.n_th},
  };
  if (const auto* d = std::get_if<DirectDrive>(&b.drive)) {
    base["drive"] = {{"mode", "direct"}, {"G_1", d->G_1}, {"G_2", d->G_2}, {"delta_tilde", d->delta_tilde}};
  } else {
    base["drive"] = {{"mode", "physical"}, {"E_amplitude", std::get<PhysicalDrive>(b.drive).E_amplitude}};
  }

  json axes = json::array();
  for (const auto& ax : spec.axes) {
    axes.push_back({{"name", ax.name},
                    {"min", ax.min},
                    {"max", ax.max},
                    {"count", ax.count},
                    {"scale", std::string(to_string(ax.scale))}});
  }
  json outputs = json::array();
  for (Quantity q : spec.outputs) outputs.push_back(std::string(to_string(q)));
  json notes = json::object();
  for (const auto& [k, v] : spec.notes) notes[k] = v;

  json j = {
      {"name", spec.preset},         {"citation", spec.citation},
      {"notes", notes},              {"base", base},
      {"axes", axes},                {"outputs", outputs},
      {"output_path", spec.output_path}, {"threads", spec.threads},
      {"m_follows_half_n", spec.m_follows_half_n},
  };
  return j.dump(2);
}

void apply_override(SweepSpec& spec, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos || eq == 0) fail("override must look like key=value");
  const std::string key(assignment.substr(0, eq));
  const std::string value(assignment.substr(eq + 1));
  if (key == "output_path") {
    spec.output_path = value;
    return;
  }
  double v = 0.0;
  try {
    std::size_t used = 0;
    v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    fail("override '" + key + "' needs a numeric value, got '" + value + "'");
  }
  if (key == "threads") {
    spec.threads = static_cast<int>(v);
    return;
  }
  apply_parameter(spec.base, key, v);
}

}  // namespace molcav
