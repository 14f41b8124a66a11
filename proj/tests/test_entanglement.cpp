#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "molcav/entanglement.hpp"
#include "molcav/error.hpp"
#include "molcav/pipeline.hpp"
#include "support/oracles.hpp"

using namespace molcav;

namespace {

Mat6 pad_with_vacuum(const Eigen::Matrix4d& two_mode) {
  Mat6 V = 0.5 * Mat6::Identity();
  V.topLeftCorner<4, 4>() = two_mode;
  return V;
}

// Reorders modes so that `new_order[k]` becomes mode k.
Mat6 permute_modes(const Mat6& V, std::array<int, 3> new_order) {
  Mat6 P = Mat6::Zero();
  for (int k = 0; k < 3; ++k) {
    P(2 * k, 2 * new_order[k]) = 1.0;
    P(2 * k + 1, 2 * new_order[k] + 1) = 1.0;
  }
  return P * V * P.transpose();
}

SystemParams fig7b_point(double J) {
  SystemParams p;
  p.kappa = 0.2;
  p.gamma_1 = p.gamma_2 = 0.3;
  p.N_total = 200;
  p.M_split = 100;
  p.theta = std::numbers::pi / 2;
  p.n_th = 0.001;
  p.J_m = J;
  p.drive = DirectDrive{0.2, 0.2, 1.5};
  return p;
}

}  // namespace

TEST(Entanglement, TwoModeVacuumIsSeparable) {
  const auto view = BipartitionView::from_matrix(0.5 * Eigen::Matrix4d::Identity());
  EXPECT_EQ(log_negativity_2mode(view), 0.0);
  EXPECT_EQ(log_negativity_2mode_spectral(0.5 * Eigen::Matrix4d::Identity()), 0.0);
}

TEST(Entanglement, SqueezedVacuumGivesTwiceTheSqueezing) {
  for (double r : {0.1, 0.5, 1.0, 2.0}) {
    const Eigen::Matrix4d V = oracle::tmsv(r);
    EXPECT_NEAR(log_negativity_2mode(BipartitionView::from_matrix(V)), 2.0 * r, 1e-9) << r;
    EXPECT_NEAR(log_negativity_2mode_spectral(V), 2.0 * r, 1e-9) << r;
  }
}

TEST(Entanglement, ProductVacuumHasNoEntanglement) {
  const CovarianceMatrix V;
  for (Mode m : {Mode::cavity, Mode::b1, Mode::b2}) EXPECT_EQ(log_negativity_one_vs_two(V, m), 0.0);
  const EntanglementReport rep = residual_contangle(V);
  EXPECT_EQ(rep.E_aB1, 0.0);
  EXPECT_EQ(rep.E_aB2, 0.0);
  EXPECT_EQ(rep.E_B1B2, 0.0);
  EXPECT_EQ(rep.R_min, 0.0);
  EXPECT_TRUE(rep.monogamy_ok);
}

TEST(Entanglement, IdleVacuumModeDoesNotChangeOneVsTwo) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    const Eigen::Matrix4d V2 = oracle::random_physical_cm(2, rng);
    const CovarianceMatrix V(pad_with_vacuum(V2));
    const double pair = log_negativity_2mode(BipartitionView::from_matrix(V2));
    EXPECT_NEAR(log_negativity_one_vs_two(V, Mode::cavity), pair, 1e-10);
    EXPECT_NEAR(log_negativity_one_vs_two(V, Mode::b1), pair, 1e-10);
    EXPECT_NEAR(log_negativity_one_vs_two(V, Mode::b2), 0.0, 1e-12);
  }
  const CovarianceMatrix V(pad_with_vacuum(oracle::tmsv(1.0)));
  EXPECT_NEAR(log_negativity_one_vs_two(V, Mode::cavity), 2.0, 1e-9);
}

TEST(Entanglement, FocusRelabelingIsConsistent) {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 50; ++k) {
    const Mat6 V = oracle::random_physical_cm(3, rng, 0.6);
    // B1 as focus equals the cavity as focus after moving B1 to slot 0.
    const Mat6 W = permute_modes(V, {1, 0, 2});
    EXPECT_NEAR(log_negativity_one_vs_two(CovarianceMatrix(V), Mode::b1),
                log_negativity_one_vs_two(CovarianceMatrix(W), Mode::cavity), 1e-10);
    const Mat6 U = permute_modes(V, {2, 0, 1});
    EXPECT_NEAR(log_negativity_one_vs_two(CovarianceMatrix(V), Mode::b2),
                log_negativity_one_vs_two(CovarianceMatrix(U), Mode::cavity), 1e-10);

    const Mat6 P = partial_transposition(Mode::b1);
    Mat6 expect = Mat6::Identity();
    expect(3, 3) = -1.0;
    EXPECT_EQ(P, expect);
  }
}

TEST(Entanglement, DeterminantAndSpectralRoutesAgree) {
  std::mt19937_64 rng(1234);
  for (int k = 0; k < 1000; ++k) {
    const Eigen::Matrix4d V = oracle::random_physical_cm(2, rng);
    const double a = log_negativity_2mode(BipartitionView::from_matrix(V));
    const double b = log_negativity_2mode_spectral(V);
    EXPECT_NEAR(a, b, 1e-10);
  }
}

TEST(Entanglement, LocalRotationsLeaveEverythingUnchanged) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  for (int k = 0; k < 100; ++k) {
    const Mat6 V = oracle::random_physical_cm(3, rng, 0.6);
    const EntanglementReport base = residual_contangle(CovarianceMatrix(V));
    const int mode = k % 3;
    const Mat6 S = oracle::local_rotation(3, mode, phase(rng));
    const EntanglementReport rot = residual_contangle(CovarianceMatrix(Mat6(S * V * S.transpose())));
    EXPECT_NEAR(rot.E_aB1, base.E_aB1, 1e-10);
    EXPECT_NEAR(rot.E_aB2, base.E_aB2, 1e-10);
    EXPECT_NEAR(rot.E_B1B2, base.E_B1B2, 1e-10);
    for (int f = 0; f < 3; ++f) EXPECT_NEAR(rot.one_vs_two[f], base.one_vs_two[f], 1e-10);
  }
}

TEST(Entanglement, ReportIsInternallyConsistent) {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 200; ++k) {
    const EntanglementReport r = residual_contangle(CovarianceMatrix(Mat6(oracle::random_physical_cm(3, rng, 0.6))));
    for (int f = 0; f < 3; ++f) {
      EXPECT_DOUBLE_EQ(r.contangle_one_vs_two[f], r.one_vs_two[f] * r.one_vs_two[f]);
    }
    EXPECT_EQ(r.R_min, std::min({r.residuals[0], r.residuals[1], r.residuals[2]}));
    const bool all_ok = r.residuals[0] >= -kMonogamySlack && r.residuals[1] >= -kMonogamySlack &&
                        r.residuals[2] >= -kMonogamySlack;
    EXPECT_EQ(r.monogamy_ok, all_ok);
    EXPECT_EQ(r.pair(Mode::b1, Mode::cavity), r.E_aB1);
  }
}

TEST(Entanglement, SymplecticFloorOnPhysicalStates) {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 200; ++k) {
    EXPECT_GE(min_symplectic_eigenvalue(oracle::random_physical_cm(3, rng)), kSymplecticFloor);
  }
}

TEST(Entanglement, UnphysicalMatrixIsRejected) {
  const Mat6 bad = 0.2 * Mat6::Identity();
  try {
    residual_contangle(CovarianceMatrix(bad));
    FAIL() << "expected NonPhysicalCM";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonPhysicalCM);
  }
  Eigen::Matrix4d asym = 0.5 * Eigen::Matrix4d::Identity();
  asym(0, 2) = 0.1;
  EXPECT_THROW(BipartitionView::from_matrix(asym), Error);
  Eigen::Matrix4d neg = 0.5 * Eigen::Matrix4d::Identity();
  neg(0, 0) = -0.5;
  EXPECT_THROW(BipartitionView::from_matrix(neg), Error);
}

TEST(Entanglement, DecoupledVacuumPipeline) {
  SystemParams p;
  p.kappa = 0.5;
  p.gamma_1 = p.gamma_2 = 0.2;
  p.drive = DirectDrive{0.0, 0.0, 1.0};
  const PointResult r = evaluate_point(p);
  ASSERT_EQ(r.status, PointStatus::ok);
  EXPECT_LT((r.covariance->matrix() - 0.5 * Mat6::Identity()).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_EQ(r.report->R_min, 0.0);
}

TEST(Entanglement, HoppingAtQuarterPhaseRaisesTripartiteResidual) {
  const PointResult off = evaluate_point(fig7b_point(0.0));
  const PointResult on = evaluate_point(fig7b_point(0.02));
  ASSERT_TRUE(off.report && on.report);
  EXPECT_GT(on.report->R_min, off.report->R_min);

  // Same comparison on covariances from the ODE oracle.
  auto via_ode = [](const PointResult& r) {
    const double t = 50.0 / std::abs(r.stability->spectral_abscissa);
    const auto traj = integrate_lyapunov_ode(*r.system, t, max_lyapunov_step(r.system->A));
    return residual_contangle(CovarianceMatrix(traj.V)).R_min;
  };
  const double off_ode = via_ode(off);
  const double on_ode = via_ode(on);
  EXPECT_NEAR(off_ode, off.report->R_min, 1e-8);
  EXPECT_NEAR(on_ode, on.report->R_min, 1e-8);
  EXPECT_GT(on_ode, off_ode);
}

TEST(Entanglement, HoppingEnhancesMechanicalPairEntanglement) {
  SystemParams p;
  p.kappa = 1.0 / 3.0;
  p.gamma_1 = p.gamma_2 = 0.3;
  p.N_total = 100;
  p.M_split = 50;
  p.n_th = 0.001;
  p.theta = std::numbers::pi / 2;
  p.J_m = 0.02;
  p.drive = DirectDrive{0.2, 0.2, 1.5};
  const PointResult on = evaluate_point(p);
  ASSERT_TRUE(on.report);
  EXPECT_GT(on.report->E_B1B2, 0.0);

  // Largest E_B1B2 anywhere on the J = 0 grid (0 <= delta <= 3, 0 <= G <= 0.3).
  p.J_m = 0.0;
  double best_off = 0.0;
  for (int i = 0; i <= 30; ++i) {
    for (int j = 0; j <= 30; ++j) {
      p.drive = DirectDrive{0.01 * j, 0.01 * j, 0.1 * i};
      const PointResult r = evaluate_point(p);
      if (r.report) best_off = std::max(best_off, r.report->E_B1B2);
    }
  }
  EXPECT_GT(on.report->E_B1B2, 2.0 * best_off);
}

// Degenerate modes without hopping leave the difference mode dark; the
// residual contangle is expected to be negligible at the tripartite optimum.
TEST(Entanglement, DarkModeSuppressesTripartiteResidual) {
  SystemParams p = fig7b_point(0.0);
  p.theta = 0.0;
  const PointResult r = evaluate_point(p);
  ASSERT_TRUE(r.report);
  EXPECT_LT(r.report->R_min, 1e-4);
}
