#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "molcav/darkmode.hpp"
#include "molcav/entanglement.hpp"
#include "molcav/linearized.hpp"
#include "molcav/lyapunov.hpp"
#include "molcav/mean_field.hpp"
#include "molcav/stability.hpp"

namespace molcav {

enum class PointStatus {
  ok,
  unstable,
  nonconverged,
  monogamy_violation,
  nonphysical,
  solver_failure,
  invalid,
};

std::string_view to_string(PointStatus s) noexcept;

/// One grid point taken through steady state -> linearization -> stability ->
/// Lyapunov -> entanglement measures. Later stages are empty when an earlier
/// one fails; the status says which.
struct PointResult {
  PointStatus status = PointStatus::invalid;
  std::string message;
  std::optional<MeanFields> mean_fields;
  std::optional<LinearizedSystem> system;
  std::optional<StabilityVerdict> stability;
  std::optional<CovarianceMatrix> covariance;
  std::optional<EntanglementReport> report;
  double symplectic_min = 0.0;
};

PointResult evaluate_point(const SystemParams& params);

/// Effective couplings seen by the hybrid-mode analysis: the direct inputs,
/// or |G_j| from the mean fields in physical mode.
std::pair<double, double> effective_couplings(const SystemParams& params, const MeanFields& mf);

}  // namespace molcav
