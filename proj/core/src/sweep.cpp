#include "molcav/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <ostream>
#include <thread>

#include "molcav/darkmode.hpp"
#include "molcav/error.hpp"
#include "molcav/thermal.hpp"

#ifndef MOLCAV_VERSION
#define MOLCAV_VERSION "unknown"
#endif

namespace molcav {

std::string library_version() { return MOLCAV_VERSION; }

std::vector<double> SweepAxis::values() const {
  std::vector<double> out(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) {
    const double t = count > 1 ? static_cast<double>(i) / (count - 1) : 0.0;
    if (scale == AxisScale::linear) {
      out[i] = min + t * (max - min);
    } else {
      out[i] = std::exp(std::log(min) + t * (std::log(max) - std::log(min)));
    }
  }
  if (count > 1) {
    out.front() = min;
    out.back() = max;
  }
  return out;
}

namespace {

constexpr std::pair<Quantity, std::string_view> kQuantityNames[] = {
    {Quantity::E_aB1, "E_aB1"},       {Quantity::E_aB2, "E_aB2"},
    {Quantity::E_B1B2, "E_B1B2"},     {Quantity::R_min, "R_min"},
    {Quantity::stability, "stability"}, {Quantity::G_minus, "G_minus"},
    {Quantity::Gt_plus, "Gt_plus"},   {Quantity::Gt_minus, "Gt_minus"},
    {Quantity::symplectic_min, "symplectic_min"},
};

[[noreturn]] void config_error(const std::string& msg) { throw Error(ErrorKind::ConfigError, msg); }

DirectDrive& direct(SystemParams& p, std::string_view name) {
  auto* d = std::get_if<DirectDrive>(&p.drive);
  if (d == nullptr) config_error(std::string(name) + " is only defined for a direct drive");
  return *d;
}

const DirectDrive& direct(const SystemParams& p, std::string_view name) {
  const auto* d = std::get_if<DirectDrive>(&p.drive);
  if (d == nullptr) config_error(std::string(name) + " is only defined for a direct drive");
  return *d;
}

std::int64_t as_count(std::string_view name, double v) {
  if (!std::isfinite(v)) config_error(std::string(name) + " must be finite");
  if (std::abs(v - std::round(v)) > 1e-9) config_error(std::string(name) + " must be an integer");
  return static_cast<std::int64_t>(std::llround(v));
}

bool needs_pipeline(const std::vector<Quantity>& qs) {
  return std::any_of(qs.begin(), qs.end(), [](Quantity q) {
    return q != Quantity::G_minus && q != Quantity::Gt_plus && q != Quantity::Gt_minus;
  });
}

void normalize_populations(SystemParams& p) {
  if (auto* d = std::get_if<DirectDrive>(&p.drive)) {
    if (p.M_split == 0) d->G_1 = 0.0;
    if (p.M_split == p.N_total) d->G_2 = 0.0;
  }
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  std::replace(s.begin(), s.end(), '\r', ' ');
  return s;
}

}  // namespace

std::string_view to_string(Quantity q) noexcept {
  for (const auto& [k, v] : kQuantityNames) {
    if (k == q) return v;
  }
  return "?";
}

std::optional<Quantity> parse_quantity(std::string_view name) {
  for (const auto& [k, v] : kQuantityNames) {
    if (v == name) return k;
  }
  return std::nullopt;
}

std::string_view to_string(AxisScale s) noexcept { return s == AxisScale::linear ? "linear" : "log"; }

const std::vector<std::string>& sweepable_parameters() {
  static const std::vector<std::string> names = {
      "omega_m_rad_s", "omega_1", "omega_2", "delta_a", "kappa",      "gamma_1", "gamma_2",
      "gamma_m",       "g_m",     "J_m",     "theta",   "N_total",    "M_split", "n_th",
      "T",             "delta_tilde", "G_1", "G_2",     "G_j",        "E_amplitude",
  };
  return names;
}

void apply_parameter(SystemParams& p, std::string_view name, double v) {
  if (name == "omega_m_rad_s") p.omega_m_rad_s = v;
  else if (name == "omega_1") p.omega_1 = v;
  else if (name == "omega_2") p.omega_2 = v;
  else if (name == "delta_a") p.delta_a = v;
  else if (name == "kappa") p.kappa = v;
  else if (name == "gamma_1") p.gamma_1 = v;
  else if (name == "gamma_2") p.gamma_2 = v;
  else if (name == "gamma_m") p.gamma_1 = p.gamma_2 = v;
  else if (name == "g_m") p.g_m = v;
  else if (name == "J_m") p.J_m = v;
  else if (name == "theta") p.theta = v;
  else if (name == "N_total") p.N_total = as_count(name, v);
  else if (name == "M_split") p.M_split = as_count(name, v);
  else if (name == "n_th") p.n_th = v;
  else if (name == "T") p.n_th = temperature_to_nth(v, p.omega_m_rad_s);
  else if (name == "delta_tilde") direct(p, name).delta_tilde = v;
  else if (name == "G_1") direct(p, name).G_1 = v;
  else if (name == "G_2") direct(p, name).G_2 = v;
  else if (name == "G_j") {
    auto& d = direct(p, name);
    d.G_1 = d.G_2 = v;
  } else if (name == "E_amplitude") {
    auto* e = std::get_if<PhysicalDrive>(&p.drive);
    if (e == nullptr) config_error("E_amplitude is only defined for a physical drive");
    e->E_amplitude = v;
  } else {
    config_error("unknown parameter '" + std::string(name) + "'");
  }
}

double read_parameter(const SystemParams& p, std::string_view name) {
  if (name == "omega_m_rad_s") return p.omega_m_rad_s;
  if (name == "omega_1") return p.omega_1;
  if (name == "omega_2") return p.omega_2;
  if (name == "delta_a") return p.delta_a;
  if (name == "kappa") return p.kappa;
  if (name == "gamma_1" || name == "gamma_m") return p.gamma_1;
  if (name == "gamma_2") return p.gamma_2;
  if (name == "g_m") return p.g_m;
  if (name == "J_m") return p.J_m;
  if (name == "theta") return p.theta;
  if (name == "N_total") return static_cast<double>(p.N_total);
  if (name == "M_split") return static_cast<double>(p.M_split);
  if (name == "n_th") return p.n_th;
  if (name == "T") return nth_to_temperature(p.n_th, p.omega_m_rad_s);
  if (name == "delta_tilde") return direct(p, name).delta_tilde;
  if (name == "G_1" || name == "G_j") return direct(p, name).G_1;
  if (name == "G_2") return direct(p, name).G_2;
  if (name == "E_amplitude") {
    const auto* e = std::get_if<PhysicalDrive>(&p.drive);
    if (e == nullptr) config_error("E_amplitude is only defined for a physical drive");
    return e->E_amplitude;
  }
  config_error("unknown parameter '" + std::string(name) + "'");
}

void validate(const SweepSpec& spec) {
  if (spec.axes.empty() || spec.axes.size() > 2) config_error("a sweep needs one or two axes");
  if (spec.outputs.empty()) config_error("no output quantities requested");
  if (spec.threads < 0) config_error("threads must be >= 0");
  const auto& names = sweepable_parameters();
  for (const auto& ax : spec.axes) {
    if (std::find(names.begin(), names.end(), ax.name) == names.end()) {
      config_error("axis '" + ax.name + "' is not a SystemParams field");
    }
    if (ax.count < 2) config_error("axis '" + ax.name + "' needs count >= 2");
    if (!(std::isfinite(ax.min) && std::isfinite(ax.max) && ax.min < ax.max)) {
      config_error("axis '" + ax.name + "' needs finite min < max");
    }
    if (ax.scale == AxisScale::log && !(ax.min > 0.0)) {
      config_error("log axis '" + ax.name + "' needs min > 0");
    }
    SystemParams probe = spec.base;
    apply_parameter(probe, ax.name, ax.min);  // throws on drive-mode mismatch
  }
  if (spec.axes.size() == 2 && spec.axes[0].name == spec.axes[1].name) {
    config_error("both axes sweep '" + spec.axes[0].name + "'");
  }
  try {
    molcav::validate(spec.base);
  } catch (const Error& e) {
    config_error(std::string("base parameters: ") + e.what());
  }
}

std::size_t SweepResult::flagged() const {
  return static_cast<std::size_t>(std::count_if(
      rows.begin(), rows.end(), [](const SweepRow& r) { return r.status != PointStatus::ok; }));
}

SystemParams point_params(const SweepSpec& spec, const std::vector<double>& coords) {
  SystemParams p = spec.base;
  for (std::size_t i = 0; i < spec.axes.size(); ++i) {
    const std::string& name = spec.axes[i].name;
    // Population axes are sampled on a real grid; snap to whole molecules.
    const bool count = name == "N_total" || name == "M_split";
    apply_parameter(p, name, count ? std::round(coords.at(i)) : coords.at(i));
    if (spec.m_follows_half_n && name == "N_total") p.M_split = p.N_total / 2;
  }
  normalize_populations(p);
  return p;
}

namespace {

SweepRow evaluate_row(const SweepSpec& spec, std::vector<double> coords) {
  SweepRow row;
  row.coords = std::move(coords);
  row.values.assign(spec.outputs.size(), std::nan(""));

  SystemParams p;
  try {
    p = point_params(spec, row.coords);
    validate(p);
  } catch (const Error& e) {
    row.status = PointStatus::invalid;
    row.message = e.what();
    return row;
  }

  PointResult res;
  if (needs_pipeline(spec.outputs)) {
    res = evaluate_point(p);
  } else {
    try {
      res.mean_fields = mean_fields_for(p);
      res.status = PointStatus::ok;
    } catch (const Error& e) {
      res.status = e.kind() == ErrorKind::NonConvergence ? PointStatus::nonconverged : PointStatus::invalid;
      res.message = e.what();
    }
  }
  row.status = res.status;
  row.message = res.message;

  std::optional<HybridModeData> hybrid;
  if (res.mean_fields) {
    const auto [G1, G2] = effective_couplings(p, *res.mean_fields);
    hybrid = hybrid_couplings(p, G1, G2);
  }

  for (std::size_t q = 0; q < spec.outputs.size(); ++q) {
    double& v = row.values[q];
    const auto& rep = res.report;
    switch (spec.outputs[q]) {
      case Quantity::E_aB1: if (rep) v = rep->E_aB1; break;
      case Quantity::E_aB2: if (rep) v = rep->E_aB2; break;
      case Quantity::E_B1B2: if (rep) v = rep->E_B1B2; break;
      case Quantity::R_min: if (rep) v = rep->R_min; break;
      case Quantity::stability: if (res.stability) v = res.stability->spectral_abscissa; break;
      case Quantity::symplectic_min: if (res.covariance) v = res.symplectic_min; break;
      case Quantity::G_minus: if (hybrid) v = hybrid->bright_dark.G_minus; break;
      case Quantity::Gt_plus: if (hybrid) v = std::abs(hybrid->Gt_plus); break;
      case Quantity::Gt_minus: if (hybrid) v = std::abs(hybrid->Gt_minus); break;
    }
  }
  return row;
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec) {
  validate(spec);
  const auto t0 = std::chrono::steady_clock::now();

  std::vector<std::vector<double>> grid_axes;
  for (const auto& ax : spec.axes) grid_axes.push_back(ax.values());

  std::size_t total = 1;
  for (const auto& g : grid_axes) total *= g.size();

  auto coords_of = [&](std::size_t index) {
    std::vector<double> c(grid_axes.size());
    for (std::size_t i = grid_axes.size(); i-- > 0;) {
      c[i] = grid_axes[i][index % grid_axes[i].size()];
      index /= grid_axes[i].size();
    }
    return c;
  };

  SweepResult result;
  result.spec = spec;
  result.rows.resize(total);

  int threads = spec.threads == 0 ? static_cast<int>(std::thread::hardware_concurrency()) : spec.threads;
  threads = std::clamp(threads, 1, static_cast<int>(std::max<std::size_t>(total, 1)));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      result.rows[i] = evaluate_row(spec, coords_of(i));
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  result.run.version = library_version();
  result.run.timestamp_utc = utc_now();
  result.run.threads_used = threads;
  result.run.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(const SweepResult& result, std::ostream& os) {
  const SweepSpec& spec = result.spec;
  const SystemParams& b = spec.base;
  auto meta = [&os](std::string_view key, const std::string& value) {
    os << "# meta: " << key << '=' << one_line(value) << '\n';
  };

  meta("format", "molcav-sweep-csv/1");
  meta("version", result.run.version);
  meta("preset", spec.preset);
  meta("citation", spec.citation);
  meta("drive", b.is_direct() ? "direct" : "physical");
  for (const char* name : {"omega_m_rad_s", "omega_1", "omega_2", "delta_a", "kappa", "gamma_1",
                           "gamma_2", "g_m", "J_m", "theta", "N_total", "M_split", "n_th"}) {
    meta(std::string("base.") + name, format_double(read_parameter(b, name)));
  }
  if (b.is_direct()) {
    for (const char* name : {"G_1", "G_2", "delta_tilde"}) {
      meta(std::string("base.") + name, format_double(read_parameter(b, name)));
    }
  } else {
    meta("base.E_amplitude", format_double(read_parameter(b, "E_amplitude")));
  }
  for (std::size_t i = 0; i < spec.axes.size(); ++i) {
    const auto& ax = spec.axes[i];
    meta("axis" + std::to_string(i + 1), ax.name + ":" + std::string(to_string(ax.scale)) + ":" +
                                             format_double(ax.min) + ":" + format_double(ax.max) +
                                             ":" + std::to_string(ax.count));
  }
  meta("m_follows_half_n", spec.m_follows_half_n ? "true" : "false");
  for (const auto& [k, v] : spec.notes) meta("note." + k, v);

  for (const auto& ax : spec.axes) os << ax.name << ',';
  for (Quantity q : spec.outputs) os << to_string(q) << ',';
  os << "status\n";

  for (const auto& row : result.rows) {
    for (double c : row.coords) os << format_double(c) << ',';
    for (double v : row.values) os << format_double(v) << ',';
    os << to_string(row.status) << '\n';
  }
}

}  // namespace molcav
