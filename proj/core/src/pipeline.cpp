#include "molcav/pipeline.hpp"

#include "molcav/error.hpp"

namespace molcav {

std::string_view to_string(PointStatus s) noexcept {
  switch (s) {
    case PointStatus::ok: return "ok";
    case PointStatus::unstable: return "unstable";
    case PointStatus::nonconverged: return "nonconverged";
    case PointStatus::monogamy_violation: return "monogamy_violation";
    case PointStatus::nonphysical: return "nonphysical";
    case PointStatus::solver_failure: return "solver_failure";
    case PointStatus::invalid: return "invalid";
  }
  return "invalid";
}

std::pair<double, double> effective_couplings(const SystemParams& params, const MeanFields& mf) {
  if (const auto* d = std::get_if<DirectDrive>(&params.drive)) return {d->G_1, d->G_2};
  return {std::abs(params.g_1() * mf.alpha), std::abs(params.g_2() * mf.alpha)};
}

namespace {

PointStatus status_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonConvergence: return PointStatus::nonconverged;
    case ErrorKind::UnstableSystem: return PointStatus::unstable;
    case ErrorKind::NonPhysicalCM: return PointStatus::nonphysical;
    case ErrorKind::SolverFailure:
    case ErrorKind::EigenFailure: return PointStatus::solver_failure;
    default: return PointStatus::invalid;
  }
}

}  // namespace

PointResult evaluate_point(const SystemParams& params) {
  PointResult out;
  try {
    out.mean_fields = mean_fields_for(params);
    out.system = build_linearized_system(params, *out.mean_fields);
    out.stability = check_stability(*out.system);
    if (!out.stability->stable) {
      out.status = PointStatus::unstable;
      out.message = "spectral abscissa " + std::to_string(out.stability->spectral_abscissa);
      return out;
    }
    out.covariance = solve_lyapunov(*out.system);
    out.symplectic_min = min_symplectic_eigenvalue(out.covariance->matrix());
    out.report = residual_contangle(*out.covariance);
    if (out.report->monogamy_ok) {
      out.status = PointStatus::ok;
    } else {
      out.status = PointStatus::monogamy_violation;
      out.message = "residual contangle below -" + std::to_string(kMonogamySlack);
    }
  } catch (const Error& e) {
    out.status = status_for(e.kind());
    out.message = e.what();
  }
  return out;
}

}  // namespace molcav
