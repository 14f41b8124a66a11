#pragma once

#include <complex>
#include <vector>

#include <Eigen/Core>

#include "molcav/linearized.hpp"

namespace molcav {

/// Margin below zero the spectral abscissa must clear (units of omega_m).
inline constexpr double kStabilityMargin = 1e-9;

struct StabilityVerdict {
  bool stable = false;
  double spectral_abscissa = 0.0;
  std::vector<std::complex<double>> eigenvalues;
};

/// Stable iff every eigenvalue of the drift matrix has real part below
/// -kStabilityMargin. Throws EigenFailure if the eigen-solve does not converge.
StabilityVerdict check_stability(const Eigen::MatrixXd& A);
StabilityVerdict check_stability(const LinearizedSystem& sys);

}  // namespace molcav
