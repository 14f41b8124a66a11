#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "molcav/error.hpp"
#include "molcav/linearized.hpp"
#include "molcav/lyapunov.hpp"
#include "molcav/mean_field.hpp"
#include "molcav/stability.hpp"
#include "support/oracles.hpp"

using namespace molcav;

namespace {

SystemParams driven() {
  SystemParams p;
  p.omega_1 = 1.0;
  p.omega_2 = 1.05;
  p.delta_a = 1.3;
  p.kappa = 0.4;
  p.gamma_1 = 0.2;
  p.gamma_2 = 0.3;
  p.g_m = 1e-3;
  p.J_m = 0.004;
  p.theta = 1.1;
  p.N_total = 100;
  p.M_split = 30;
  p.drive = PhysicalDrive{18.0};
  return p;
}

std::vector<std::complex<double>> sorted_eigs(const Mat6& A) {
  Eigen::EigenSolver<Mat6> es(A);
  std::vector<std::complex<double>> ev(es.eigenvalues().data(), es.eigenvalues().data() + 6);
  std::sort(ev.begin(), ev.end(), [](auto a, auto b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return ev;
}

}  // namespace

TEST(Drift, DecoupledBlocksHaveBareEigenvalues) {
  DriftInputs in;
  in.delta_tilde = 1.7;
  in.kappa = 0.3;
  in.gamma_1 = 0.1;
  in.gamma_2 = 0.2;
  const Mat6 A = drift_matrix(in);
  EXPECT_TRUE((A.block<2, 4>(0, 2).array() == 0.0).all());
  EXPECT_TRUE((A.block<2, 2>(2, 4).array() == 0.0).all());

  std::vector<std::complex<double>> expect = {{-0.3, -1.7}, {-0.3, 1.7}, {-0.2, -1.0},
                                              {-0.2, 1.0},  {-0.1, -1.0}, {-0.1, 1.0}};
  const auto got = sorted_eigs(A);
  for (std::size_t k = 0; k < 6; ++k) EXPECT_LT(std::abs(got[k] - expect[k]), 1e-12);
}

TEST(Drift, QuarterPhaseLeavesOnlySineEntries) {
  DriftInputs in;
  in.lambda = 0.8;
  in.theta = std::numbers::pi / 2;
  const Mat6 A = drift_matrix(in);
  EXPECT_DOUBLE_EQ(A(2, 4), 0.8);
  EXPECT_DOUBLE_EQ(A(3, 5), 0.8);
  EXPECT_DOUBLE_EQ(A(4, 2), -0.8);
  EXPECT_DOUBLE_EQ(A(5, 3), -0.8);
  EXPECT_NEAR(A(2, 5), 0.0, 1e-15);
  EXPECT_NEAR(A(3, 4), 0.0, 1e-15);
  EXPECT_NEAR(A(4, 3), 0.0, 1e-15);
  EXPECT_NEAR(A(5, 2), 0.0, 1e-15);
}

TEST(Drift, EqualsJacobianOfMeanValueEquations) {
  const SystemParams p = driven();
  const MeanFields mf = solve_steady_state(p);
  const LinearizedSystem sys = build_linearized_system(p, mf);

  Vec6 x0;
  x0 << mf.alpha.real(), mf.alpha.imag(), mf.beta_1.real(), mf.beta_1.imag(), mf.beta_2.real(),
      mf.beta_2.imag();
  const Mat6 J = oracle::central_jacobian([&p](const Vec6& s) { return oracle::mean_value_rhs(p, s); },
                                           x0, 1e-4);
  EXPECT_LT((J - sys.A).cwiseAbs().maxCoeff(), 1e-8) << "\nJ=\n" << J << "\nA=\n" << sys.A;
  EXPECT_GT(std::abs(sys.G_1.imag()), 1e-3);  // the check exercises the Im G entries
}

TEST(Drift, RandomStableParamsMatchJacobian) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int checked = 0;
  while (checked < 25) {
    SystemParams p = driven();
    p.delta_a = 0.5 + 2.0 * u(rng);
    p.kappa = 0.1 + 0.9 * u(rng);
    p.gamma_1 = 0.05 + 0.45 * u(rng);
    p.gamma_2 = 0.05 + 0.45 * u(rng);
    p.omega_2 = 0.8 + 0.4 * u(rng);
    p.theta = 2.0 * std::numbers::pi * u(rng);
    p.J_m = 0.01 * u(rng);
    p.drive = PhysicalDrive{40.0 * u(rng)};
    MeanFields mf;
    try {
      mf = solve_steady_state(p);
    } catch (const Error&) {
      continue;
    }
    const LinearizedSystem sys = build_linearized_system(p, mf);
    if (!check_stability(sys).stable) continue;
    Vec6 x0;
    x0 << mf.alpha.real(), mf.alpha.imag(), mf.beta_1.real(), mf.beta_1.imag(), mf.beta_2.real(),
        mf.beta_2.imag();
    const Mat6 J = oracle::central_jacobian(
        [&p](const Vec6& s) { return oracle::mean_value_rhs(p, s); }, x0, 1e-4);
    EXPECT_LT((J - sys.A).cwiseAbs().maxCoeff(), 1e-8);
    ++checked;
  }
}

TEST(Drift, PhaseFlipTransposesHoppingBlocks) {
  DriftInputs in;
  in.lambda = 0.6;
  in.theta = 0.9;
  in.G_1 = {0.1, 0.02};
  in.G_2 = {0.2, -0.05};
  const Mat6 A = drift_matrix(in);
  in.theta = -0.9;
  const Mat6 B = drift_matrix(in);
  const Eigen::Matrix2d a12 = A.block<2, 2>(2, 4);
  const Eigen::Matrix2d a21 = A.block<2, 2>(4, 2);
  EXPECT_LT((B.block<2, 2>(2, 4) - a21).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((B.block<2, 2>(4, 2) - a12).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((B.block<2, 2>(2, 4) + a12.transpose()).cwiseAbs().maxCoeff(), 1e-15);
  // rotation-like: each hopping block is lambda times an orthogonal matrix
  EXPECT_LT((a12 * a12.transpose() - 0.36 * Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Drift, PhysicalAndDirectModesAgreeUpToCavityPhase) {
  SystemParams p = driven();
  const MeanFields mf = solve_steady_state(p);
  const LinearizedSystem phys = build_linearized_system(p, mf);

  SystemParams d = p;
  d.drive = DirectDrive{std::abs(phys.G_1), std::abs(phys.G_2), mf.delta_tilde};
  const LinearizedSystem direct = build_linearized_system(d, mean_fields_for(d));

  // Rotating the cavity quadratures by arg(alpha) maps one onto the other.
  const double phi = std::arg(mf.alpha);
  Mat6 R = Mat6::Identity();
  R.block<2, 2>(0, 0) = oracle::rotation(phi);
  const Mat6 mapped = R * phys.A * R.transpose();
  EXPECT_LT((mapped - direct.A).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_EQ(phys.D, direct.D);
}

TEST(Diffusion, DiagonalAndPositive) {
  const Mat6 D = diffusion_matrix(0.2, 0.3, 0.4, 0.5);
  Vec6 expect;
  expect << 0.2, 0.2, 0.6, 0.6, 0.8, 0.8;
  EXPECT_EQ(Vec6(D.diagonal()), expect);
  EXPECT_EQ((D - Mat6(D.diagonal().asDiagonal())).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_TRUE((D.diagonal().array() > 0.0).all());
}

TEST(Stability, IsotropicDampingIsStable) {
  const StabilityVerdict v = check_stability(Eigen::MatrixXd(-0.7 * Mat6::Identity()));
  EXPECT_TRUE(v.stable);
  EXPECT_NEAR(v.spectral_abscissa, -0.7, 1e-14);
}

TEST(Stability, FlippedDampingIsUnstable) {
  Mat6 A = -0.5 * Mat6::Identity();
  A(0, 1) = 1.0;
  A(1, 0) = -1.0;
  A(1, 1) = 0.9;  // trace of the cavity block becomes positive
  EXPECT_FALSE(check_stability(Eigen::MatrixXd(A)).stable);
}

TEST(Stability, VerdictSurvivesTimeRescaling) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    const SystemParams p = random_direct_params(rng);
    const LinearizedSystem sys = build_linearized_system(p, mean_fields_for(p));
    const bool base = check_stability(sys).stable;
    for (double s : {0.01, 3.0, 250.0}) {
      EXPECT_EQ(check_stability(Eigen::MatrixXd(s * sys.A)).stable, base);
    }
  }
}

TEST(Stability, ThresholdMatchesLossOfPositiveDefiniteness) {
  // Lyapunov inertia: with D > 0 the formal solution is positive definite
  // exactly when A is Hurwitz.
  SystemParams p;
  p.kappa = 1.0 / 3.0;
  p.gamma_1 = p.gamma_2 = 0.3;
  p.N_total = 100;
  p.M_split = 50;
  p.n_th = 0.001;
  p.theta = std::numbers::pi / 2;
  for (double J : {0.0, 0.02}) {
    p.J_m = J;
    int stable_count = 0;
    int unstable_count = 0;
    for (int k = 0; k <= 300; ++k) {
      const double G = 1.5 * k / 300.0;
      p.drive = DirectDrive{G, G, 1.5};
      const LinearizedSystem sys = build_linearized_system(p, mean_fields_for(p));
      const StabilityVerdict v = check_stability(sys);
      const Eigen::MatrixXd V = solve_lyapunov_dense(sys.A, sys.D);
      const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (V + V.transpose()));
      const bool pd = es.eigenvalues().minCoeff() > 0.0;
      EXPECT_EQ(v.stable, pd) << "J=" << J << " G=" << G;
      (v.stable ? stable_count : unstable_count)++;
    }
    EXPECT_GT(stable_count, 0);
    EXPECT_GT(unstable_count, 0);
  }
}
