#include "molcav/darkmode.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "molcav/error.hpp"

namespace molcav {

std::string_view to_string(DarkModeRegime r) noexcept {
  return r == DarkModeRegime::unbroken ? "DMU" : "DMB";
}

BrightDark bright_dark_couplings(double G_1, double G_2, double omega_1, double omega_2) {
  if (!(std::isfinite(G_1) && std::isfinite(G_2) && std::isfinite(omega_1) && std::isfinite(omega_2))) {
    throw Error(ErrorKind::InvalidParams, "bright/dark inputs must be finite");
  }
  const double G2sum = G_1 * G_1 + G_2 * G_2;
  if (!(G2sum > 0.0)) throw Error(ErrorKind::DegenerateCouplings, "G_1 = G_2 = 0");
  const double G = std::sqrt(G2sum);
  BrightDark bd;
  bd.G_plus = G;
  bd.G_minus = G_1 * G_2 * (omega_1 - omega_2) / G;
  bd.omega_plus = (omega_1 * G_1 * G_1 + omega_2 * G_2 * G_2) / G2sum;
  bd.omega_minus = (omega_1 * G_2 * G_2 + omega_2 * G_1 * G_1) / G2sum;
  return bd;
}

HybridModeData hybrid_couplings(const HybridInputs& in) {
  if (!(std::isfinite(in.G_1) && std::isfinite(in.G_2) && std::isfinite(in.lambda) &&
        std::isfinite(in.theta) && std::isfinite(in.omega_1) && std::isfinite(in.omega_2))) {
    throw Error(ErrorKind::InvalidParams, "hybrid-mode inputs must be finite");
  }
  HybridModeData out;
  const double w1 = in.omega_1, w2 = in.omega_2, lam = in.lambda;
  const double root = std::sqrt((w1 - w2) * (w1 - w2) + 4.0 * lam * lam);
  out.omega_tilde_plus = 0.5 * (w1 + w2 + root);
  out.omega_tilde_minus = 0.5 * (w1 + w2 - root);

  if (lam != 0.0) {
    // gap = w~- - w1 <= 0, written without cancellation when w2 > w1.
    const double d = w2 - w1;
    const double gap = d > 0.0 ? -2.0 * lam * lam / (d + root) : 0.5 * (d - root);
    const double norm = std::hypot(gap, lam);
    out.f = -gap / norm;
    out.h = -lam / norm;
  } else if (w1 == w2) {
    out.f = std::numbers::sqrt2 / 2.0;
    out.h = -out.f;
  } else if (w1 < w2) {
    out.f = 0.0;
    out.h = -1.0;
  } else {
    out.f = 1.0;
    out.h = 0.0;
  }

  const std::complex<double> e_plus = std::polar(1.0, in.theta);
  const std::complex<double> e_minus = std::polar(1.0, -in.theta);
  out.Gt_plus = out.f * in.G_1 - e_minus * out.h * in.G_2;
  out.Gt_minus = out.f * in.G_2 + e_plus * out.h * in.G_1;

  const double G = std::hypot(in.G_1, in.G_2);
  if (G > 0.0) {
    out.bright_dark = bright_dark_couplings(in.G_1, in.G_2, w1, w2);
  }

  if (G == 0.0) {
    out.regime = DarkModeRegime::unbroken;
  } else if (lam == 0.0) {
    out.regime = std::abs(out.bright_dark.G_minus) < kDarkModeThreshold * G ? DarkModeRegime::unbroken
                                                                            : DarkModeRegime::broken;
  } else {
    const double a = std::abs(out.Gt_plus), b = std::abs(out.Gt_minus);
    out.regime = std::min(a, b) < kDarkModeThreshold * std::max(a, b) ? DarkModeRegime::unbroken
                                                                      : DarkModeRegime::broken;
  }
  return out;
}

HybridModeData hybrid_couplings(const SystemParams& params, double G_1, double G_2) {
  validate(params);
  HybridInputs in;
  in.G_1 = G_1;
  in.G_2 = G_2;
  in.omega_1 = params.omega_1;
  in.omega_2 = params.omega_2;
  in.lambda = params.lambda();
  in.theta = params.theta;
  return hybrid_couplings(in);
}

std::vector<PolarRow> polar_coupling_profile(const SystemParams& params, int n_theta) {
  if (n_theta < 8) throw Error(ErrorKind::InvalidParams, "polar profile needs n_theta >= 8");
  const auto* d = std::get_if<DirectDrive>(&params.drive);
  if (d == nullptr) throw Error(ErrorKind::InvalidParams, "polar profile needs direct-drive couplings");

  std::vector<PolarRow> rows;
  rows.reserve(static_cast<std::size_t>(n_theta));
  for (int k = 0; k < n_theta; ++k) {
    SystemParams p = params;
    p.theta = 2.0 * std::numbers::pi * k / n_theta;
    const HybridModeData h = hybrid_couplings(p, d->G_1, d->G_2);
    rows.push_back({p.theta, std::abs(h.Gt_plus), std::abs(h.Gt_minus)});
  }
  return rows;
}

}  // namespace molcav
