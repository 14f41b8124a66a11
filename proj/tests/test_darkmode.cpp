#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "molcav/darkmode.hpp"
#include "molcav/error.hpp"
#include "molcav/presets.hpp"

using namespace molcav;

namespace {

constexpr double kPi = std::numbers::pi;

HybridInputs degenerate(double G, double lambda, double theta) {
  HybridInputs in;
  in.G_1 = in.G_2 = G;
  in.lambda = lambda;
  in.theta = theta;
  return in;
}

}  // namespace

TEST(BrightDark, DegenerateFrequenciesDecoupleTheDarkMode) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 200; ++k) {
    const double w = 0.5 + u(rng);
    const BrightDark bd = bright_dark_couplings(u(rng), 1e-3 + u(rng), w, w);
    EXPECT_EQ(bd.G_minus, 0.0);
  }
}

TEST(BrightDark, EqualCouplingsGiveHalfRootTwoDetuning) {
  const double g = 0.13, delta = 0.07;
  const BrightDark bd = bright_dark_couplings(g, g, 1.0 + delta, 1.0);
  EXPECT_NEAR(bd.G_minus, g * delta / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(bd.G_plus, std::sqrt(2.0) * g, 1e-15);
}

TEST(BrightDark, ZeroCouplingsAreDegenerate) {
  try {
    bright_dark_couplings(0.0, 0.0, 1.0, 1.1);
    FAIL() << "expected DegenerateCouplings";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateCouplings);
  }
}

TEST(BrightDark, DarkCouplingVanishesOnlyOnTheUnitRatioLine) {
  for (int i = 0; i <= 20; ++i) {
    for (int j = 1; j <= 20; ++j) {
      const double ratio = 0.5 + 0.05 * i;  // omega_1 / omega_2
      const double G1 = 0.3 * j / 20.0;
      const BrightDark bd = bright_dark_couplings(G1, 0.15, ratio, 1.0);
      if (i == 10) {
        EXPECT_EQ(bd.G_minus, 0.0);
      } else {
        EXPECT_NE(bd.G_minus, 0.0);
      }
    }
  }
}

TEST(Hybrid, DegenerateLimitValues) {
  const HybridModeData h = hybrid_couplings(degenerate(0.1, 0.4, 0.3));
  EXPECT_NEAR(h.omega_tilde_plus, 1.4, 1e-15);
  EXPECT_NEAR(h.omega_tilde_minus, 0.6, 1e-15);
  EXPECT_NEAR(h.f, 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(h.h, -1.0 / std::sqrt(2.0), 1e-15);
  const std::complex<double> i{0.0, 1.0};
  EXPECT_LT(std::abs(h.Gt_plus - 0.1 / std::sqrt(2.0) * (1.0 + std::exp(-i * 0.3))), 1e-15);
  EXPECT_LT(std::abs(h.Gt_minus - 0.1 / std::sqrt(2.0) * (1.0 - std::exp(i * 0.3))), 1e-15);
}

TEST(Hybrid, PhaseZeroLeavesMinusModeDark) {
  const HybridModeData h = hybrid_couplings(degenerate(0.1, 0.5, 0.0));
  EXPECT_NEAR(std::abs(h.Gt_plus), std::sqrt(2.0) * 0.1, 1e-12);
  EXPECT_LT(std::abs(h.Gt_minus), 1e-12);
  EXPECT_EQ(h.regime, DarkModeRegime::unbroken);
}

TEST(Hybrid, QuarterPhaseHybridizesEvenly) {
  const HybridModeData h = hybrid_couplings(degenerate(0.1, 0.5, kPi / 2));
  EXPECT_NEAR(std::abs(h.Gt_plus), 0.1, 1e-12);
  EXPECT_NEAR(std::abs(h.Gt_minus), 0.1, 1e-12);
  EXPECT_EQ(h.regime, DarkModeRegime::broken);
}

TEST(Hybrid, HalfPhaseLeavesPlusModeDark) {
  const HybridModeData h = hybrid_couplings(degenerate(0.1, 0.5, kPi));
  EXPECT_LT(std::abs(h.Gt_plus), 1e-12);
  EXPECT_NEAR(std::abs(h.Gt_minus), std::sqrt(2.0) * 0.1, 1e-12);
  EXPECT_EQ(h.regime, DarkModeRegime::unbroken);
}

TEST(Hybrid, NoHoppingFallsBackToBrightDark) {
  HybridInputs in = degenerate(0.2, 0.0, 1.0);
  EXPECT_EQ(hybrid_couplings(in).regime, DarkModeRegime::unbroken);
  in.omega_1 = 1.2;
  EXPECT_EQ(hybrid_couplings(in).regime, DarkModeRegime::broken);
  in.G_1 = in.G_2 = 0.0;
  EXPECT_EQ(hybrid_couplings(in).regime, DarkModeRegime::unbroken);
}

TEST(Hybrid, NormIsConservedForEveryPhase) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 500; ++k) {
    HybridInputs in;
    in.G_1 = 0.3 * u(rng);
    in.G_2 = 0.3 * u(rng);
    in.omega_1 = 0.8 + 0.4 * u(rng);
    in.omega_2 = (k % 2 == 0) ? in.omega_1 : 0.8 + 0.4 * u(rng);
    in.lambda = (k % 5 == 0) ? 0.0 : 2.0 * u(rng);
    in.theta = 2.0 * kPi * u(rng);
    const HybridModeData h = hybrid_couplings(in);
    EXPECT_NEAR(std::norm(h.Gt_plus) + std::norm(h.Gt_minus), in.G_1 * in.G_1 + in.G_2 * in.G_2, 1e-12);
    EXPECT_NEAR(h.f * h.f + h.h * h.h, 1.0, 1e-12);
  }
}

TEST(Hybrid, PeriodicAndEvenInPhase) {
  for (int k = 0; k < 64; ++k) {
    const double th = 2.0 * kPi * k / 64.0;
    HybridInputs in;
    in.G_1 = 0.17;
    in.G_2 = 0.09;
    in.omega_2 = 1.04;
    in.lambda = 0.3;
    in.theta = th;
    const HybridModeData a = hybrid_couplings(in);
    in.theta = th + 2.0 * kPi;
    const HybridModeData b = hybrid_couplings(in);
    in.theta = -th;
    const HybridModeData c = hybrid_couplings(in);
    EXPECT_NEAR(std::abs(a.Gt_plus), std::abs(b.Gt_plus), 1e-12);
    EXPECT_NEAR(std::abs(a.Gt_minus), std::abs(b.Gt_minus), 1e-12);
    EXPECT_NEAR(std::abs(a.Gt_plus), std::abs(c.Gt_plus), 1e-12);
    EXPECT_NEAR(std::abs(a.Gt_minus), std::abs(c.Gt_minus), 1e-12);
  }
}

TEST(Hybrid, NearDegenerateApproachesDegenerateValues) {
  const HybridModeData exact = hybrid_couplings(degenerate(0.1, 0.25, 0.8));
  HybridInputs in = degenerate(0.1, 0.25, 0.8);
  in.omega_2 = 1.0 + 1e-11;
  const HybridModeData near = hybrid_couplings(in);
  EXPECT_NEAR(near.f, exact.f, 1e-10);
  EXPECT_NEAR(near.h, exact.h, 1e-10);
  EXPECT_NEAR(near.omega_tilde_plus, exact.omega_tilde_plus, 1e-10);
  EXPECT_NEAR(near.omega_tilde_minus, exact.omega_tilde_minus, 1e-10);
  EXPECT_LT(std::abs(near.Gt_plus - exact.Gt_plus), 1e-10);
  EXPECT_LT(std::abs(near.Gt_minus - exact.Gt_minus), 1e-10);
}

TEST(Hybrid, VanishingHoppingLimitIsContinuous) {
  for (double w2 : {0.9, 1.1}) {
    HybridInputs in = degenerate(0.12, 0.0, 0.4);
    in.omega_2 = w2;
    const HybridModeData at_zero = hybrid_couplings(in);
    in.lambda = 1e-9;
    const HybridModeData tiny = hybrid_couplings(in);
    EXPECT_NEAR(tiny.f, at_zero.f, 1e-7);
    EXPECT_NEAR(tiny.h, at_zero.h, 1e-7);
  }
}

TEST(Polar, SingleSidedCouplingHasNoInterference) {
  SystemParams p;
  p.J_m = 0.1;
  p.N_total = 2;
  p.M_split = 1;
  p.drive = DirectDrive{0.1, 0.0, 0.0};
  for (const PolarRow& r : polar_coupling_profile(p, 64)) {
    EXPECT_NEAR(r.abs_Gt_plus, 0.1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(r.abs_Gt_minus, 0.1 / std::sqrt(2.0), 1e-15);
  }
}

TEST(Polar, NormRowCheck) {
  SystemParams p;
  p.J_m = 0.05;
  p.N_total = 10;
  p.M_split = 3;
  p.omega_2 = 1.02;
  p.drive = DirectDrive{0.11, 0.07, 0.0};
  const auto rows = polar_coupling_profile(p, 64);
  ASSERT_EQ(rows.size(), 64u);
  for (const PolarRow& r : rows) {
    EXPECT_NEAR(r.abs_Gt_plus * r.abs_Gt_plus + r.abs_Gt_minus * r.abs_Gt_minus, 0.11 * 0.11 + 0.07 * 0.07,
                1e-12);
  }
  EXPECT_THROW(polar_coupling_profile(p, 7), Error);
}

TEST(Polar, PresetLobesVanishAtMultiplesOfPi) {
  const SweepSpec spec = figure_preset("fig2b");
  const auto rows = polar_coupling_profile(spec.base, 360);
  EXPECT_LT(rows.front().abs_Gt_minus, 1e-12);
  EXPECT_NEAR(rows[180].theta, kPi, 1e-15);
  EXPECT_LT(rows[180].abs_Gt_plus, 1e-12);
  EXPECT_GT(rows[90].abs_Gt_plus, 0.05);
}
