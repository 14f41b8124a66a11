#pragma once

#include <complex>

#include <Eigen/Core>

#include "molcav/mean_field.hpp"
#include "molcav/params.hpp"

namespace molcav {

using Mat6 = Eigen::Matrix<double, 6, 6>;
using Vec6 = Eigen::Matrix<double, 6, 1>;

/// The three bosonic modes, in quadrature order (x, y, Q1, P1, Q2, P2).
enum class Mode { cavity = 0, b1 = 1, b2 = 2 };

inline constexpr int quadrature_offset(Mode m) { return 2 * static_cast<int>(m); }

struct DriftInputs {
  double delta_tilde = 0.0;
  double kappa = 1.0;
  double gamma_1 = 1.0;
  double gamma_2 = 1.0;
  double omega_1 = 1.0;
  double omega_2 = 1.0;
  double lambda = 0.0;
  double theta = 0.0;
  cplx G_1{};
  cplx G_2{};
};

/// Fluctuation drift matrix in quadrature order (dx, dy, dQ1, dP1, dQ2, dP2).
Mat6 drift_matrix(const DriftInputs& in);

/// diag[kappa, kappa, gamma_1 (2n+1) x2, gamma_2 (2n+1) x2].
Mat6 diffusion_matrix(double kappa, double gamma_1, double gamma_2, double n_th);

struct LinearizedSystem {
  Mat6 A;
  Mat6 D;
  cplx G_1;
  cplx G_2;
  double delta_tilde = 0.0;
};

/// Physical mode: G_1 = sqrt(M) g_m alpha, G_2 = sqrt(N - M) g_m alpha.
/// Direct mode: the given real couplings.
LinearizedSystem build_linearized_system(const SystemParams& params, const MeanFields& mf);

}  // namespace molcav
