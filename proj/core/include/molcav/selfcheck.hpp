#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "molcav/params.hpp"

namespace molcav {

/// Draws direct-drive parameters from the ranges the figure presets cover:
/// delta_tilde in [0, 3], G_j in [0, 0.3], kappa in [0.1, 1], gamma_k in
/// [0.05, 0.5], J_m in [0, 0.03], N in [2, 200], n_th in [0, 1].
SystemParams random_direct_params(std::mt19937_64& rng);

struct CheckOutcome {
  std::string name;
  bool passed = true;
  int evaluated = 0;
  int failures = 0;
  std::string detail;
};

/// Runs the library invariants over `samples` random stable parameter sets.
std::vector<CheckOutcome> run_self_check(int samples, std::uint64_t seed);

}  // namespace molcav
