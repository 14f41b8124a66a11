#pragma once

#include <vector>

#include <Eigen/Core>

#include "molcav/linearized.hpp"

namespace molcav {

inline constexpr double kLyapunovResidualTol = 1e-10;
inline constexpr double kSymmetryTol = 1e-10;

/// Steady-state quadrature covariance matrix, order (x, y, Q1, P1, Q2, P2).
/// Vacuum variance is 1/2. Symmetrized on construction.
class CovarianceMatrix {
 public:
  CovarianceMatrix() : v_(Mat6::Identity() * 0.5) {}
  explicit CovarianceMatrix(const Mat6& v) : v_(0.5 * (v + v.transpose())) {}

  const Mat6& matrix() const { return v_; }
  double operator()(int i, int j) const { return v_(i, j); }

  /// 2x2 block between the quadrature pairs of two modes.
  Eigen::Matrix2d block(Mode row, Mode col) const {
    return v_.block<2, 2>(quadrature_offset(row), quadrature_offset(col));
  }

  /// 4x4 covariance of the two given modes, first mode first.
  Eigen::Matrix4d pair(Mode first, Mode second) const;

 private:
  Mat6 v_;
};

/// max_ij |A V + V A^T + D|
double lyapunov_residual(const Eigen::MatrixXd& A, const Eigen::MatrixXd& V, const Eigen::MatrixXd& D);

/// Solves A V + V A^T = -D through the Kronecker form
///   (I (x) A + A (x) I) vec(V) = -vec(D)
/// with dense LU plus iterative refinement. No stability check: for an
/// unstable A the returned matrix is a formal solution, not a steady state.
/// Throws SolverFailure if the Kronecker operator is singular.
Eigen::MatrixXd solve_lyapunov_dense(const Eigen::MatrixXd& A, const Eigen::MatrixXd& D);

/// Steady-state covariance. Refuses unstable systems (UnstableSystem) and
/// throws SolverFailure if the residual cannot be brought under tolerance.
CovarianceMatrix solve_lyapunov(const LinearizedSystem& sys);

struct LyapunovTrajectory {
  Mat6 V;
  /// Residual |A V + V A^T + D|_max sampled along the trajectory (it equals
  /// |dV/dt|_max), first entry at t = 0.
  std::vector<double> residuals;
  int steps = 0;
};

/// Classical RK4 integration of dV/dt = A V + V A^T + D from V(0) = 0.
/// Requires a stable system and dt <= 0.01 / max|eig(A)| (StepSizeTooLarge).
LyapunovTrajectory integrate_lyapunov_ode(const LinearizedSystem& sys, double t_final, double dt);

/// Largest step integrate_lyapunov_ode accepts for this drift matrix.
double max_lyapunov_step(const Mat6& A);

}  // namespace molcav
