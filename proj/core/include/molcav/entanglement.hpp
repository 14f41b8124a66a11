#pragma once

#include <array>
#include <string_view>

#include <Eigen/Core>

#include "molcav/lyapunov.hpp"

namespace molcav {

/// Lowest symplectic eigenvalue any physical state may have (vacuum = 1/2).
inline constexpr double kSymplecticFloor = 0.5 - 1e-8;
/// Residuals in [-kMonogamySlack, 0) are float noise and clamp to zero.
inline constexpr double kMonogamySlack = 1e-9;

/// Symplectic spectrum of an n-mode covariance matrix (2n x 2n), ascending,
/// one value per mode. Throws EigenFailure.
Eigen::VectorXd symplectic_eigenvalues(const Eigen::MatrixXd& V);

double min_symplectic_eigenvalue(const Eigen::MatrixXd& V);

/// Throws NonPhysicalCM unless every symplectic eigenvalue is >= kSymplecticFloor.
void require_physical(const CovarianceMatrix& V);

enum class ModePair { a_B1, a_B2, B1_B2 };

std::string_view to_string(ModePair pair) noexcept;

/// Two-mode reduced covariance [[psi_1, psi_3], [psi_3^T, psi_2]].
struct BipartitionView {
  Eigen::Matrix2d psi_1;
  Eigen::Matrix2d psi_2;
  Eigen::Matrix2d psi_3;
  ModePair pair = ModePair::a_B1;

  static BipartitionView of(const CovarianceMatrix& V, ModePair pair);
  /// From an explicit 4x4 two-mode matrix. Throws NonPhysicalCM if the
  /// matrix is not symmetric or a local block is not positive definite.
  static BipartitionView from_matrix(const Eigen::Matrix4d& V_sub, ModePair pair = ModePair::a_B1);

  Eigen::Matrix4d matrix() const;
};

/// E_N = max[0, -ln 2 nu] with nu from the seralian
///   Sigma = det psi_1 + det psi_2 - 2 det psi_3,
///   2 nu^2 = Sigma - sqrt(Sigma^2 - 4 det V_sub).
double log_negativity_2mode(const BipartitionView& view);

/// Same quantity from the spectrum of i Omega (P V_sub P), P flipping the
/// second mode's momentum. Independent route used for cross-checks.
double log_negativity_2mode_spectral(const Eigen::Matrix4d& V_sub);

/// One mode against the other two: partial transpose of the focus mode,
/// then the smallest |eigenvalue| of i Omega_3 (P V P).
double log_negativity_one_vs_two(const CovarianceMatrix& V, Mode focus);

/// Partial-transposition matrix for the focus|rest bipartition.
Mat6 partial_transposition(Mode focus);

struct EntanglementReport {
  double E_aB1 = 0.0;
  double E_aB2 = 0.0;
  double E_B1B2 = 0.0;
  /// Indexed by focus mode: a|B1B2, B1|aB2, B2|aB1.
  std::array<double, 3> one_vs_two{};
  /// Squared one-vs-two log-negativities, same indexing.
  std::array<double, 3> contangle_one_vs_two{};
  /// C_{r|st} - C_{r|s} - C_{r|t} per focus mode, after noise clamping.
  std::array<double, 3> residuals{};
  double R_min = 0.0;
  bool monogamy_ok = true;

  double pair(Mode r, Mode s) const;
};

/// Pairwise and one-vs-two log-negativities plus the minimum residual
/// contangle. Residuals below -kMonogamySlack are left unclamped and flip
/// monogamy_ok; callers decide whether that aborts.
EntanglementReport residual_contangle(const CovarianceMatrix& V);

}  // namespace molcav
