#include "molcav/mean_field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "molcav/error.hpp"

namespace molcav {
namespace {

constexpr cplx kI{0.0, 1.0};

struct Amplitudes {
  cplx alpha;
  cplx beta_1;
  cplx beta_2;
};

// alpha from the closed form at the trial detuning, then beta from
//   (i w1 + g1) b1 + i lam e^{i th} b2 = -i g_1 |alpha|^2
//   i lam e^{-i th} b1 + (i w2 + g2) b2 = -i g_2 |alpha|^2
Amplitudes amplitudes_at(const SystemParams& p, double delta_tilde) {
  const double E = std::get<PhysicalDrive>(p.drive).E_amplitude;
  Amplitudes out;
  out.alpha = -kI * E / (kI * delta_tilde + p.kappa);
  const double n = std::norm(out.alpha);

  const double lam = p.lambda();
  const cplx a11 = kI * p.omega_1 + p.gamma_1;
  const cplx a12 = kI * lam * std::polar(1.0, p.theta);
  const cplx a21 = kI * lam * std::polar(1.0, -p.theta);
  const cplx a22 = kI * p.omega_2 + p.gamma_2;
  const cplx r1 = -kI * p.g_1() * n;
  const cplx r2 = -kI * p.g_2() * n;
  const cplx det = a11 * a22 - a12 * a21;
  out.beta_1 = (r1 * a22 - a12 * r2) / det;
  out.beta_2 = (a11 * r2 - a21 * r1) / det;
  return out;
}

double detuning_from(const SystemParams& p, cplx beta_1, cplx beta_2) {
  return p.delta_a + 2.0 * (p.g_1() * beta_1.real() + p.g_2() * beta_2.real());
}

}  // namespace

MeanFields solve_steady_state(const SystemParams& params, const SteadyStateOptions& options) {
  validate(params);
  if (params.is_direct()) {
    throw Error(ErrorKind::InvalidParams, "solve_steady_state requires a physical drive");
  }
  if (!(options.damping > 0.0 && options.damping <= 1.0) || options.max_iterations < 1) {
    throw Error(ErrorKind::InvalidParams, "bad steady-state solver options");
  }

  double delta = params.delta_a;
  for (int it = 1; it <= options.max_iterations; ++it) {
    const Amplitudes amp = amplitudes_at(params, delta);
    const double target = detuning_from(params, amp.beta_1, amp.beta_2);
    const double next = (1.0 - options.damping) * delta + options.damping * target;
    const double step = std::abs(next - delta);
    delta = next;
    if (step <= options.tolerance * std::max(1.0, std::abs(delta))) {
      MeanFields mf;
      const Amplitudes fin = amplitudes_at(params, delta);
      mf.alpha = fin.alpha;
      mf.beta_1 = fin.beta_1;
      mf.beta_2 = fin.beta_2;
      mf.delta_tilde = detuning_from(params, fin.beta_1, fin.beta_2);
      mf.converged = true;
      mf.iterations = it;
      return mf;
    }
    if (!std::isfinite(delta)) break;
  }
  throw Error(ErrorKind::NonConvergence,
              "mean-field iteration did not settle within " +
                  std::to_string(options.max_iterations) +
                  " iterations (possible bistability)");
}

MeanFieldRates mean_field_rates(const SystemParams& p, cplx alpha, cplx beta_1, cplx beta_2) {
  const double E = p.is_direct() ? 0.0 : std::get<PhysicalDrive>(p.drive).E_amplitude;
  const double delta = detuning_from(p, beta_1, beta_2);
  const double n = std::norm(alpha);
  const double lam = p.lambda();
  MeanFieldRates r;
  r.d_alpha = -(kI * delta + p.kappa) * alpha - kI * E;
  r.d_beta_1 = -(kI * p.omega_1 + p.gamma_1) * beta_1 - kI * p.g_1() * n -
               kI * lam * std::polar(1.0, p.theta) * beta_2;
  r.d_beta_2 = -(kI * p.omega_2 + p.gamma_2) * beta_2 - kI * p.g_2() * n -
               kI * lam * std::polar(1.0, -p.theta) * beta_1;
  return r;
}

MeanFields mean_fields_for(const SystemParams& params) {
  if (!params.is_direct()) return solve_steady_state(params);
  validate(params);
  const auto& d = std::get<DirectDrive>(params.drive);
  MeanFields mf;
  mf.delta_tilde = d.delta_tilde;
  if (params.g_1() > 0.0) {
    mf.alpha = d.G_1 / params.g_1();
  } else if (params.g_2() > 0.0) {
    mf.alpha = d.G_2 / params.g_2();
  }
  mf.converged = true;
  return mf;
}

}  // namespace molcav
