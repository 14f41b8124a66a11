#include "molcav/params.hpp"

#include <cmath>
#include <string>

#include "molcav/error.hpp"

namespace molcav {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::EigenFailure: return "EigenFailure";
    case ErrorKind::UnstableSystem: return "UnstableSystem";
    case ErrorKind::SolverFailure: return "SolverFailure";
    case ErrorKind::StepSizeTooLarge: return "StepSizeTooLarge";
    case ErrorKind::NonPhysicalCM: return "NonPhysicalCM";
    case ErrorKind::DegenerateCouplings: return "DegenerateCouplings";
    case ErrorKind::UnknownPreset: return "UnknownPreset";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

double SystemParams::lambda() const {
  const auto m = static_cast<double>(M_split);
  const auto rest = static_cast<double>(N_total - M_split);
  return J_m * std::sqrt(m * rest);
}

double SystemParams::g_1() const { return g_m * std::sqrt(static_cast<double>(M_split)); }

double SystemParams::g_2() const {
  return g_m * std::sqrt(static_cast<double>(N_total - M_split));
}

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw Error(ErrorKind::InvalidParams, msg);
}

void require_rate(double v, const char* name) {
  require(std::isfinite(v) && v >= 0.0, std::string(name) + " must be finite and non-negative");
}

}  // namespace

void validate(const SystemParams& p) {
  require(std::isfinite(p.omega_m_rad_s) && p.omega_m_rad_s > 0.0, "omega_m_rad_s must be positive");
  require_rate(p.omega_1, "omega_1");
  require_rate(p.omega_2, "omega_2");
  require_rate(p.g_m, "g_m");
  require_rate(p.J_m, "J_m");
  require_rate(p.n_th, "n_th");
  require(std::isfinite(p.delta_a), "delta_a must be finite");
  require(std::isfinite(p.theta), "theta must be finite");
  require(std::isfinite(p.kappa) && p.kappa > 0.0, "kappa must be positive");
  require(std::isfinite(p.gamma_1) && p.gamma_1 > 0.0, "gamma_1 must be positive");
  require(std::isfinite(p.gamma_2) && p.gamma_2 > 0.0, "gamma_2 must be positive");
  require(p.N_total > 0, "N_total must be a positive integer");
  require(p.M_split >= 0 && p.M_split <= p.N_total, "M_split must lie in [0, N_total]");

  if (const auto* d = std::get_if<DirectDrive>(&p.drive)) {
    require(std::isfinite(d->G_1) && d->G_1 >= 0.0, "direct drive G_1 must be real and non-negative");
    require(std::isfinite(d->G_2) && d->G_2 >= 0.0, "direct drive G_2 must be real and non-negative");
    require(std::isfinite(d->delta_tilde), "direct drive delta_tilde must be finite");
    // An empty ensemble has no collective coupling (G_1 ~ sqrt(M), G_2 ~ sqrt(N - M)).
    require(p.M_split > 0 || d->G_1 == 0.0, "G_1 must be 0 when M_split = 0");
    require(p.M_split < p.N_total || d->G_2 == 0.0, "G_2 must be 0 when M_split = N_total");
  } else {
    const auto& e = std::get<PhysicalDrive>(p.drive);
    require(std::isfinite(e.E_amplitude), "E_amplitude must be finite");
  }
}

}  // namespace molcav
