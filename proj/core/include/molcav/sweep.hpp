#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "molcav/params.hpp"
#include "molcav/pipeline.hpp"

namespace molcav {

enum class AxisScale { linear, log };

struct SweepAxis {
  std::string name;
  double min = 0.0;
  double max = 1.0;
  int count = 2;
  AxisScale scale = AxisScale::linear;

  /// Grid values, endpoints included.
  std::vector<double> values() const;
};

enum class Quantity {
  E_aB1,
  E_aB2,
  E_B1B2,
  R_min,
  stability,
  G_minus,
  Gt_plus,
  Gt_minus,
  symplectic_min,
};

std::string_view to_string(Quantity q) noexcept;
std::optional<Quantity> parse_quantity(std::string_view name);
std::string_view to_string(AxisScale s) noexcept;

struct SweepSpec {
  SystemParams base;
  std::vector<SweepAxis> axes;
  std::vector<Quantity> outputs;
  std::string output_path;
  /// 0 = hardware concurrency. Never affects the output bytes.
  int threads = 1;
  /// N_total axis values also set M_split = N_total / 2.
  bool m_follows_half_n = false;
  std::string preset;
  std::string citation;
  std::vector<std::pair<std::string, std::string>> notes;
};

/// Names accepted as sweep axes (and as --set keys).
const std::vector<std::string>& sweepable_parameters();

/// Sets one named parameter. Unknown names or a mode mismatch (e.g.
/// delta_tilde under a physical drive) throw ConfigError.
void apply_parameter(SystemParams& params, std::string_view name, double value);

/// Reads a named parameter back (same names as apply_parameter; "T" gives the
/// bath temperature implied by n_th).
double read_parameter(const SystemParams& params, std::string_view name);

/// Throws ConfigError describing the first problem.
void validate(const SweepSpec& spec);

struct SweepRow {
  std::vector<double> coords;
  std::vector<double> values;
  PointStatus status = PointStatus::invalid;
  std::string message;
};

struct RunInfo {
  std::string version;
  std::string timestamp_utc;
  double wall_seconds = 0.0;
  int threads_used = 1;
};

struct SweepResult {
  SweepSpec spec;
  std::vector<SweepRow> rows;  // row-major over the axes
  RunInfo run;

  std::size_t flagged() const;
};

/// Parameters at one grid point, in row-major order over the axes.
SystemParams point_params(const SweepSpec& spec, const std::vector<double>& coords);

/// Evaluates every grid point; per-point failures land in the row status.
SweepResult run_sweep(const SweepSpec& spec);

/// CSV with `# meta: key=value` lines, then `axis...,quantity...,status`.
/// Floats use 17 significant digits. Run-dependent data (timestamp, wall time,
/// thread count) is not written, so equal specs give equal bytes.
void write_csv(const SweepResult& result, std::ostream& os);

/// Formats a double with 17 significant digits ("nan"/"inf" for non-finite).
std::string format_double(double v);

std::string library_version();

}  // namespace molcav
