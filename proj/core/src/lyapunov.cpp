#include "molcav/lyapunov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/LU>

#include "molcav/error.hpp"
#include "molcav/stability.hpp"

namespace molcav {

Eigen::Matrix4d CovarianceMatrix::pair(Mode first, Mode second) const {
  Eigen::Matrix4d out;
  out.block<2, 2>(0, 0) = block(first, first);
  out.block<2, 2>(0, 2) = block(first, second);
  out.block<2, 2>(2, 0) = block(second, first);
  out.block<2, 2>(2, 2) = block(second, second);
  return out;
}

double lyapunov_residual(const Eigen::MatrixXd& A, const Eigen::MatrixXd& V, const Eigen::MatrixXd& D) {
  return (A * V + V * A.transpose() + D).cwiseAbs().maxCoeff();
}

Eigen::MatrixXd solve_lyapunov_dense(const Eigen::MatrixXd& A, const Eigen::MatrixXd& D) {
  const Eigen::Index n = A.rows();
  if (A.cols() != n || D.rows() != n || D.cols() != n || n == 0) {
    throw Error(ErrorKind::InvalidParams, "Lyapunov operands must be square and of equal size");
  }

  // Column-major vec: vec(A V) = (I (x) A) vec(V), vec(V A^T) = (A (x) I) vec(V).
  const Eigen::Index nn = n * n;
  Eigen::MatrixXd K = Eigen::MatrixXd::Zero(nn, nn);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const Eigen::Index row = j * n + i;
      for (Eigen::Index k = 0; k < n; ++k) {
        K(row, j * n + k) += A(i, k);
        K(row, k * n + i) += A(j, k);
      }
    }
  }
  const Eigen::VectorXd rhs = -Eigen::Map<const Eigen::VectorXd>(Eigen::MatrixXd(D).data(), nn);

  Eigen::PartialPivLU<Eigen::MatrixXd> lu(K);
  const double rcond = lu.rcond();
  if (!(rcond > 1e-15)) {
    throw Error(ErrorKind::SolverFailure,
                "Kronecker operator is numerically singular (rcond=" + std::to_string(rcond) + ")");
  }
  Eigen::VectorXd x = lu.solve(rhs);
  for (int pass = 0; pass < 2; ++pass) {
    const Eigen::VectorXd r = rhs - K * x;
    x += lu.solve(r);
  }

  Eigen::MatrixXd V = Eigen::Map<Eigen::MatrixXd>(x.data(), n, n);
  return 0.5 * (V + V.transpose());
}

CovarianceMatrix solve_lyapunov(const LinearizedSystem& sys) {
  const StabilityVerdict verdict = check_stability(sys);
  if (!verdict.stable) {
    throw Error(ErrorKind::UnstableSystem,
                "spectral abscissa " + std::to_string(verdict.spectral_abscissa) + " is not negative");
  }
  const Eigen::MatrixXd A = sys.A;
  const Eigen::MatrixXd D = sys.D;
  const Eigen::MatrixXd V = solve_lyapunov_dense(A, D);

  // Absolute floor for well-scaled solutions; grows with |A||V| near the
  // stability boundary where V itself diverges.
  const double scale = std::max(1.0, A.cwiseAbs().maxCoeff() * V.cwiseAbs().maxCoeff());
  const double res = lyapunov_residual(A, V, D);
  if (!(res < kLyapunovResidualTol * scale)) {
    throw Error(ErrorKind::SolverFailure, "Lyapunov residual " + std::to_string(res) + " above tolerance");
  }
  return CovarianceMatrix(Mat6(V));
}

double max_lyapunov_step(const Mat6& A) {
  const StabilityVerdict v = check_stability(Eigen::MatrixXd(A));
  double rho = 0.0;
  for (const auto& ev : v.eigenvalues) rho = std::max(rho, std::abs(ev));
  return rho > 0.0 ? 0.01 / rho : std::numeric_limits<double>::infinity();
}

LyapunovTrajectory integrate_lyapunov_ode(const LinearizedSystem& sys, double t_final, double dt) {
  if (!(t_final >= 0.0) || !(dt > 0.0)) {
    throw Error(ErrorKind::InvalidParams, "t_final must be >= 0 and dt > 0");
  }
  const StabilityVerdict verdict = check_stability(sys);
  if (!verdict.stable) throw Error(ErrorKind::UnstableSystem, "ODE oracle needs a stable drift matrix");
  const double dt_max = max_lyapunov_step(sys.A);
  if (dt > dt_max) {
    throw Error(ErrorKind::StepSizeTooLarge,
                "dt=" + std::to_string(dt) + " exceeds 0.01/max|eig(A)|=" + std::to_string(dt_max));
  }

  const Mat6& A = sys.A;
  const Mat6 At = A.transpose();
  const Mat6& D = sys.D;
  auto rhs = [&](const Mat6& V) -> Mat6 { return A * V + V * At + D; };

  LyapunovTrajectory out;
  out.V.setZero();
  const int steps = static_cast<int>(std::ceil(t_final / dt - 1e-12));
  const double h = steps > 0 ? t_final / steps : 0.0;
  const int log_every = std::max(1, steps / 64);
  out.residuals.push_back(rhs(out.V).cwiseAbs().maxCoeff());

  for (int s = 0; s < steps; ++s) {
    const Mat6 k1 = rhs(out.V);
    const Mat6 k2 = rhs(out.V + 0.5 * h * k1);
    const Mat6 k3 = rhs(out.V + 0.5 * h * k2);
    const Mat6 k4 = rhs(out.V + h * k3);
    out.V += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if ((s + 1) % log_every == 0 || s + 1 == steps) {
      out.residuals.push_back(rhs(out.V).cwiseAbs().maxCoeff());
    }
  }
  out.V = 0.5 * (out.V + out.V.transpose());
  out.steps = steps;
  return out;
}

}  // namespace molcav
