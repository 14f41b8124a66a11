// molcav: parameter sweeps of the molecular cavity entanglement model.
//
//   molcav sweep --config <file> [--preset <name>] [--out <path>] [--threads <n>] [--format csv]
//   molcav presets list
//   molcav presets show <name>
//   molcav check [--samples <n>] [--seed <s>]
//
// Exit codes: 0 success, 2 if any grid point (or self-check) was flagged,
// 1 on configuration or I/O errors. MOLCAV_OUTPUT_DIR, when set, is the
// directory relative output paths are written under.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "molcav/config.hpp"
#include "molcav/error.hpp"
#include "molcav/presets.hpp"
#include "molcav/selfcheck.hpp"
#include "molcav/sweep.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitFlagged = 2;

fs::path resolve_output(const std::string& path) {
  fs::path out(path);
  if (const char* dir = std::getenv("MOLCAV_OUTPUT_DIR"); dir != nullptr && *dir != '\0' && out.is_relative()) {
    out = fs::path(dir) / out;
  }
  return out;
}

void write_run_sidecar(const fs::path& csv, const molcav::SweepResult& r) {
  std::ofstream os(csv.string() + ".run.json");
  if (!os) return;
  os << "{\n"
     << "  \"version\": \"" << r.run.version << "\",\n"
     << "  \"timestamp_utc\": \"" << r.run.timestamp_utc << "\",\n"
     << "  \"wall_seconds\": " << molcav::format_double(r.run.wall_seconds) << ",\n"
     << "  \"threads\": " << r.run.threads_used << ",\n"
     << "  \"points\": " << r.rows.size() << ",\n"
     << "  \"flagged\": " << r.flagged() << "\n"
     << "}\n";
}

struct SweepArgs {
  std::string config;
  std::string preset;
  std::string out;
  std::optional<int> threads;
  std::string format = "csv";
  std::vector<std::string> overrides;
  bool quiet = false;
};

int run_sweep_command(const SweepArgs& args) {
  std::optional<molcav::SweepSpec> start;
  if (!args.preset.empty()) start = molcav::figure_preset(args.preset);

  molcav::SweepSpec spec;
  if (!args.config.empty()) {
    spec = molcav::load_config_file(args.config, std::move(start));
  } else if (start) {
    spec = std::move(*start);
  } else {
    std::cerr << "sweep: need --config or --preset\n";
    return kExitError;
  }
  for (const auto& o : args.overrides) molcav::apply_override(spec, o);
  if (!args.out.empty()) spec.output_path = args.out;
  if (args.threads) spec.threads = *args.threads;
  if (spec.output_path.empty()) spec.output_path = "sweep.csv";

  const molcav::SweepResult result = molcav::run_sweep(spec);

  const fs::path out = resolve_output(spec.output_path);
  if (out.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(out.parent_path(), ec);
  }
  std::ofstream os(out, std::ios::binary);
  if (!os) throw molcav::Error(molcav::ErrorKind::IoError, "cannot write '" + out.string() + "'");
  molcav::write_csv(result, os);
  os.close();
  if (!os) throw molcav::Error(molcav::ErrorKind::IoError, "write failed for '" + out.string() + "'");
  write_run_sidecar(out, result);

  const std::size_t flagged = result.flagged();
  if (!args.quiet) {
    std::cerr << "wrote " << out.string() << ": " << result.rows.size() << " points, " << flagged
              << " flagged, " << result.run.wall_seconds << " s on " << result.run.threads_used
              << " thread(s)\n";
  }
  return flagged == 0 ? kExitOk : kExitFlagged;
}

int run_check_command(int samples, std::uint64_t seed) {
  bool all = true;
  for (const auto& c : molcav::run_self_check(samples, seed)) {
    std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << '\n';
    all = all && c.passed;
  }
  return all ? kExitOk : kExitFlagged;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Molecular cavity optomechanics: steady-state entanglement sweeps"};
  app.require_subcommand(1);

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep and write CSV");
  sweep->add_option("--config", sweep_args.config, "JSON sweep configuration")->check(CLI::ExistingFile);
  sweep->add_option("--preset", sweep_args.preset, "Start from a figure preset (see `presets list`)");
  sweep->add_option("--out", sweep_args.out, "Output CSV path");
  sweep->add_option("--threads", sweep_args.threads, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  sweep->add_option("--format", sweep_args.format, "Output format")->check(CLI::IsMember({"csv"}));
  sweep->add_option("--set", sweep_args.overrides, "Override a base parameter, key=value (repeatable)");
  sweep->add_flag("--quiet", sweep_args.quiet, "No summary on stderr");

  auto* presets = app.add_subcommand("presets", "Figure presets");
  presets->require_subcommand(1);
  auto* list = presets->add_subcommand("list", "List preset names");
  std::string show_name;
  auto* show = presets->add_subcommand("show", "Print a preset as a config file");
  show->add_option("name", show_name, "Preset name")->required();

  int samples = 200;
  std::uint64_t seed = 20260101;
  auto* check = app.add_subcommand("check", "Run the invariant self-test on random parameters");
  check->add_option("--samples", samples, "Number of stable random systems")->check(CLI::PositiveNumber);
  check->add_option("--seed", seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and friends exit 0; any usage error counts as a config error.
    return app.exit(e) == 0 ? kExitOk : kExitError;
  }

  try {
    if (*sweep) return run_sweep_command(sweep_args);
    if (*list) {
      for (const auto& p : molcav::list_presets()) std::cout << p.name << "\t" << p.summary << '\n';
      return kExitOk;
    }
    if (*show) {
      std::cout << molcav::spec_to_config(molcav::figure_preset(show_name)) << '\n';
      return kExitOk;
    }
    if (*check) return run_check_command(samples, seed);
  } catch (const molcav::Error& e) {
    std::cerr << "molcav: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "molcav: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
