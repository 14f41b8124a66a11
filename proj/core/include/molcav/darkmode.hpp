#pragma once

#include <complex>
#include <string_view>
#include <vector>

#include "molcav/params.hpp"

namespace molcav {

/// Relative weight below which a hybrid (or dark) coupling counts as decoupled.
inline constexpr double kDarkModeThreshold = 1e-3;

enum class DarkModeRegime { unbroken, broken };

std::string_view to_string(DarkModeRegime r) noexcept;

struct BrightDark {
  double G_plus = 0.0;   // bright-mode coupling, G = sqrt(G1^2 + G2^2)
  double G_minus = 0.0;  // bright-dark exchange G1 G2 (w1 - w2) / G
  double omega_plus = 0.0;
  double omega_minus = 0.0;
};

/// Bright/dark decomposition for vanishing intermode hopping. Throws
/// DegenerateCouplings when G1 = G2 = 0.
BrightDark bright_dark_couplings(double G_1, double G_2, double omega_1, double omega_2);

struct HybridModeData {
  BrightDark bright_dark;
  std::complex<double> Gt_plus;
  std::complex<double> Gt_minus;
  double omega_tilde_plus = 0.0;
  double omega_tilde_minus = 0.0;
  double f = 0.0;
  double h = 0.0;
  DarkModeRegime regime = DarkModeRegime::unbroken;
};

struct HybridInputs {
  double G_1 = 0.0;
  double G_2 = 0.0;
  double omega_1 = 1.0;
  double omega_2 = 1.0;
  double lambda = 0.0;
  double theta = 0.0;
};

/// Phase-dependent hybrid modes of the two coupled vibrations:
///   w~+- = (w1 + w2 +- sqrt((w1 - w2)^2 + 4 lam^2)) / 2
///   f = |w~- - w1| / sqrt((w~- - w1)^2 + lam^2),  h = f lam / (w~- - w1)
///   G~+ = f G1 - e^{-i th} h G2,  G~- = f G2 + e^{i th} h G1
/// At lam = 0 the lam -> 0 limits of f and h are used, and the regime comes
/// from the bright/dark decomposition instead.
HybridModeData hybrid_couplings(const HybridInputs& in);

/// Convenience overload: frequencies, lambda and theta from params.
HybridModeData hybrid_couplings(const SystemParams& params, double G_1, double G_2);

struct PolarRow {
  double theta = 0.0;
  double abs_Gt_plus = 0.0;
  double abs_Gt_minus = 0.0;
};

/// |G~+-| on a uniform theta grid over [0, 2 pi); couplings from the direct
/// drive of params. Requires n_theta >= 8.
std::vector<PolarRow> polar_coupling_profile(const SystemParams& params, int n_theta);

}  // namespace molcav
