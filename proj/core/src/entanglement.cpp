#include "molcav/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "molcav/error.hpp"

namespace molcav {
namespace {

Eigen::MatrixXd symplectic_form(Eigen::Index modes) {
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * modes, 2 * modes);
  for (Eigen::Index k = 0; k < modes; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  return omega;
}

// Eigenvalues of Omega V come in pairs +-i nu; |.| of each gives nu twice.
Eigen::VectorXd abs_spectrum(const Eigen::MatrixXd& V) {
  const Eigen::Index n = V.rows();
  if (n % 2 != 0 || V.cols() != n) {
    throw Error(ErrorKind::InvalidParams, "covariance matrix must be 2n x 2n");
  }
  const Eigen::MatrixXd M = symplectic_form(n / 2) * V;
  Eigen::EigenSolver<Eigen::MatrixXd> es(M, false);
  if (es.info() != Eigen::Success) throw Error(ErrorKind::EigenFailure, "symplectic spectrum");
  Eigen::VectorXd mags = es.eigenvalues().cwiseAbs();
  std::sort(mags.data(), mags.data() + mags.size());
  return mags;
}

double log_neg_from_nu(double nu) {
  if (!(nu > 0.0) || !std::isfinite(nu)) {
    throw Error(ErrorKind::NonPhysicalCM, "partially transposed symplectic eigenvalue " + std::to_string(nu));
  }
  return std::max(0.0, -std::log(2.0 * nu));
}

ModePair pair_of(Mode r, Mode s) {
  const int lo = std::min(static_cast<int>(r), static_cast<int>(s));
  const int hi = std::max(static_cast<int>(r), static_cast<int>(s));
  if (lo == 0 && hi == 1) return ModePair::a_B1;
  if (lo == 0 && hi == 2) return ModePair::a_B2;
  if (lo == 1 && hi == 2) return ModePair::B1_B2;
  throw Error(ErrorKind::InvalidParams, "mode pair needs two distinct modes");
}

std::pair<Mode, Mode> modes_of(ModePair p) {
  switch (p) {
    case ModePair::a_B1: return {Mode::cavity, Mode::b1};
    case ModePair::a_B2: return {Mode::cavity, Mode::b2};
    case ModePair::B1_B2: return {Mode::b1, Mode::b2};
  }
  return {Mode::cavity, Mode::b1};
}

}  // namespace

Eigen::VectorXd symplectic_eigenvalues(const Eigen::MatrixXd& V) {
  const Eigen::VectorXd mags = abs_spectrum(V);
  Eigen::VectorXd nu(mags.size() / 2);
  for (Eigen::Index k = 0; k < nu.size(); ++k) nu[k] = 0.5 * (mags[2 * k] + mags[2 * k + 1]);
  return nu;
}

double min_symplectic_eigenvalue(const Eigen::MatrixXd& V) { return abs_spectrum(V)[0]; }

void require_physical(const CovarianceMatrix& V) {
  const double nu = min_symplectic_eigenvalue(V.matrix());
  if (!(nu >= kSymplecticFloor)) {
    throw Error(ErrorKind::NonPhysicalCM,
                "minimum symplectic eigenvalue " + std::to_string(nu) + " below the vacuum floor");
  }
}

std::string_view to_string(ModePair pair) noexcept {
  switch (pair) {
    case ModePair::a_B1: return "a-B1";
    case ModePair::a_B2: return "a-B2";
    case ModePair::B1_B2: return "B1-B2";
  }
  return "?";
}

BipartitionView BipartitionView::of(const CovarianceMatrix& V, ModePair pair) {
  const auto [r, s] = modes_of(pair);
  return from_matrix(V.pair(r, s), pair);
}

BipartitionView BipartitionView::from_matrix(const Eigen::Matrix4d& V_sub, ModePair pair) {
  const double asym = (V_sub - V_sub.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymmetryTol * std::max(1.0, V_sub.cwiseAbs().maxCoeff())) {
    throw Error(ErrorKind::NonPhysicalCM, "two-mode covariance is not symmetric");
  }
  BipartitionView view;
  view.psi_1 = V_sub.block<2, 2>(0, 0);
  view.psi_2 = V_sub.block<2, 2>(2, 2);
  view.psi_3 = V_sub.block<2, 2>(0, 2);
  view.pair = pair;
  for (const auto* psi : {&view.psi_1, &view.psi_2}) {
    if (!((*psi)(0, 0) > 0.0 && psi->determinant() > 0.0)) {
      throw Error(ErrorKind::NonPhysicalCM, "local covariance block is not positive definite");
    }
  }
  return view;
}

Eigen::Matrix4d BipartitionView::matrix() const {
  Eigen::Matrix4d m;
  m << psi_1, psi_3, psi_3.transpose(), psi_2;
  return m;
}

double log_negativity_2mode(const BipartitionView& view) {
  const double sigma = view.psi_1.determinant() + view.psi_2.determinant() - 2.0 * view.psi_3.determinant();
  const double det = view.matrix().determinant();
  const double tol = 1e-12 * std::max(1.0, sigma * sigma);
  double disc = sigma * sigma - 4.0 * det;
  if (disc < -tol || !(det > 0.0)) {
    throw Error(ErrorKind::NonPhysicalCM, "two-mode seralian gives a complex symplectic eigenvalue");
  }
  disc = std::max(0.0, disc);
  // nu_-^2 nu_+^2 = det, nu_+^2 = (Sigma + sqrt(disc)) / 2.
  const double big = 0.5 * (sigma + std::sqrt(disc));
  if (!(big > 0.0)) throw Error(ErrorKind::NonPhysicalCM, "non-positive seralian");
  return log_neg_from_nu(std::sqrt(det / big));
}

double log_negativity_2mode_spectral(const Eigen::Matrix4d& V_sub) {
  Eigen::Matrix4d P = Eigen::Matrix4d::Identity();
  P(3, 3) = -1.0;
  const Eigen::MatrixXd pt = P * V_sub * P;
  return log_neg_from_nu(abs_spectrum(pt)[0]);
}

Mat6 partial_transposition(Mode focus) {
  Mat6 P = Mat6::Identity();
  const int q = quadrature_offset(focus) + 1;
  P(q, q) = -1.0;
  return P;
}

double log_negativity_one_vs_two(const CovarianceMatrix& V, Mode focus) {
  const Mat6 P = partial_transposition(focus);
  const Eigen::MatrixXd pt = P * V.matrix() * P;
  return log_neg_from_nu(abs_spectrum(pt)[0]);
}

double EntanglementReport::pair(Mode r, Mode s) const {
  switch (pair_of(r, s)) {
    case ModePair::a_B1: return E_aB1;
    case ModePair::a_B2: return E_aB2;
    case ModePair::B1_B2: return E_B1B2;
  }
  return 0.0;
}

EntanglementReport residual_contangle(const CovarianceMatrix& V) {
  require_physical(V);
  EntanglementReport rep;
  rep.E_aB1 = log_negativity_2mode(BipartitionView::of(V, ModePair::a_B1));
  rep.E_aB2 = log_negativity_2mode(BipartitionView::of(V, ModePair::a_B2));
  rep.E_B1B2 = log_negativity_2mode(BipartitionView::of(V, ModePair::B1_B2));

  constexpr std::array<Mode, 3> modes{Mode::cavity, Mode::b1, Mode::b2};
  for (int r = 0; r < 3; ++r) {
    const Mode focus = modes[r];
    const Mode s = modes[(r + 1) % 3];
    const Mode t = modes[(r + 2) % 3];
    rep.one_vs_two[r] = log_negativity_one_vs_two(V, focus);
    rep.contangle_one_vs_two[r] = rep.one_vs_two[r] * rep.one_vs_two[r];
    const double c_rs = rep.pair(focus, s);
    const double c_rt = rep.pair(focus, t);
    double res = rep.contangle_one_vs_two[r] - c_rs * c_rs - c_rt * c_rt;
    if (res < 0.0 && res >= -kMonogamySlack) res = 0.0;
    if (res < 0.0) rep.monogamy_ok = false;
    rep.residuals[r] = res;
  }
  rep.R_min = *std::min_element(rep.residuals.begin(), rep.residuals.end());
  return rep;
}

}  // namespace molcav
