#pragma once

#include <complex>

#include "molcav/params.hpp"

namespace molcav {

using cplx = std::complex<double>;

struct MeanFields {
  cplx alpha{};
  cplx beta_1{};
  cplx beta_2{};
  double delta_tilde = 0.0;
  bool converged = false;
  int iterations = 0;
};

struct SteadyStateOptions {
  double damping = 0.5;
  double tolerance = 1e-12;
  int max_iterations = 10000;
};

/// Fixed point of the mean-value equations for a physically driven cavity.
/// Damped iteration on the effective detuning: for a trial detuning the
/// cavity amplitude is closed-form and the two vibrational amplitudes solve a
/// 2x2 linear system at fixed |alpha|^2.
///
/// Throws NonConvergence when the iteration cap is hit (typically a sign of
/// optical bistability) and InvalidParams in direct-drive mode.
MeanFields solve_steady_state(const SystemParams& params, const SteadyStateOptions& options = {});

/// Right-hand sides of the three mean-value equations at the given amplitudes,
/// with the effective detuning recomputed from beta. Zero at a fixed point.
struct MeanFieldRates {
  cplx d_alpha;
  cplx d_beta_1;
  cplx d_beta_2;
};
MeanFieldRates mean_field_rates(const SystemParams& params, cplx alpha, cplx beta_1, cplx beta_2);

/// Physical mode: solve_steady_state. Direct mode: mean fields synthesized
/// from the given couplings with a real-positive cavity amplitude.
MeanFields mean_fields_for(const SystemParams& params);

}  // namespace molcav
