#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "molcav/sweep.hpp"

namespace molcav {

/// Parses a JSON sweep configuration whose keys mirror SweepSpec:
///
///   { "preset": "fig4a",               // optional starting point
///     "name": "...", "citation": "...", "notes": {"key": "value"},
///     "base": { "kappa": 0.2, ..., "T": 210,
///               "drive": {"mode": "direct", "G_1": 0.2, "G_2": 0.2, "delta_tilde": 1.5} },
///     "axes": [ {"name": "G_j", "min": 0, "max": 0.3, "count": 101, "scale": "linear"} ],
///     "outputs": ["E_B1B2", "R_min"],
///     "output_path": "out.csv", "threads": 4, "m_follows_half_n": false }
///
/// Keys present override `start` (or the preset named in the file when no
/// start is given). Unknown keys and an invalid resulting spec are a
/// ConfigError; an unknown preset name is UnknownPreset.
SweepSpec parse_config(std::string_view json_text, std::optional<SweepSpec> start = std::nullopt);

/// Reads and parses a config file; IoError when unreadable.
SweepSpec load_config_file(const std::filesystem::path& path, std::optional<SweepSpec> start = std::nullopt);

/// Full spec as config JSON; parse_config(spec_to_config(s)) reproduces s.
std::string spec_to_config(const SweepSpec& spec);

/// Applies a `key=value` override; keys are the sweepable parameter names,
/// plus output_path and threads.
void apply_override(SweepSpec& spec, std::string_view assignment);

}  // namespace molcav
