#pragma once

#include <cstdint>
#include <variant>

namespace molcav {

/// Effective couplings and detuning given directly; the mean-field solve is
/// skipped. Couplings are real (cavity amplitude taken real-positive).
struct DirectDrive {
  double G_1 = 0.0;
  double G_2 = 0.0;
  double delta_tilde = 0.0;
};

/// Coherent pump of amplitude E on the cavity; couplings and effective
/// detuning follow from the steady-state mean fields.
struct PhysicalDrive {
  double E_amplitude = 0.0;
};

using Drive = std::variant<DirectDrive, PhysicalDrive>;

/// Physical parameters of the two-collective-mode model. All rates and
/// frequencies are in units of omega_m, except omega_m_rad_s itself which is
/// only used to convert bath temperature into a thermal occupancy.
struct SystemParams {
  double omega_m_rad_s = 2.0 * 3.14159265358979323846 * 30e12;
  double omega_1 = 1.0;
  double omega_2 = 1.0;
  double delta_a = 0.0;
  double kappa = 1.0;
  double gamma_1 = 1.0;
  double gamma_2 = 1.0;
  double g_m = 0.0;
  double J_m = 0.0;
  double theta = 0.0;
  std::int64_t N_total = 2;
  std::int64_t M_split = 1;
  double n_th = 0.0;
  Drive drive = DirectDrive{};

  /// Intermode hopping lambda = J_m * sqrt(M (N - M)).
  double lambda() const;
  /// Collective optomechanical couplings g_1 = g_m sqrt(M), g_2 = g_m sqrt(N - M).
  double g_1() const;
  double g_2() const;

  bool is_direct() const { return std::holds_alternative<DirectDrive>(drive); }
};

/// Throws Error{InvalidParams} describing the first violated constraint.
void validate(const SystemParams& params);

}  // namespace molcav
