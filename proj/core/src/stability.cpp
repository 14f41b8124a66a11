#include "molcav/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "molcav/error.hpp"

namespace molcav {

StabilityVerdict check_stability(const Eigen::MatrixXd& A) {
  if (A.rows() != A.cols() || A.rows() == 0) {
    throw Error(ErrorKind::InvalidParams, "drift matrix must be square and non-empty");
  }
  if (!A.allFinite()) throw Error(ErrorKind::InvalidParams, "drift matrix has non-finite entries");

  Eigen::EigenSolver<Eigen::MatrixXd> es(A, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorKind::EigenFailure, "eigenvalue iteration did not converge");
  }
  StabilityVerdict v;
  v.spectral_abscissa = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const auto ev = es.eigenvalues()[i];
    v.eigenvalues.push_back(ev);
    v.spectral_abscissa = std::max(v.spectral_abscissa, ev.real());
  }
  v.stable = v.spectral_abscissa < -kStabilityMargin;
  return v;
}

StabilityVerdict check_stability(const LinearizedSystem& sys) {
  return check_stability(Eigen::MatrixXd(sys.A));
}

}  // namespace molcav
