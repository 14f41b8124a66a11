#include "molcav/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "molcav/darkmode.hpp"
#include "molcav/entanglement.hpp"
#include "molcav/error.hpp"
#include "molcav/pipeline.hpp"

namespace molcav {

SystemParams random_direct_params(std::mt19937_64& rng) {
  auto uni = [&rng](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
  SystemParams p;
  p.kappa = uni(0.1, 1.0);
  p.gamma_1 = uni(0.05, 0.5);
  p.gamma_2 = uni(0.05, 0.5);
  p.J_m = uni(0.0, 0.03);
  p.theta = uni(0.0, 2.0 * std::numbers::pi);
  p.N_total = std::uniform_int_distribution<std::int64_t>(2, 200)(rng);
  p.M_split = std::uniform_int_distribution<std::int64_t>(1, p.N_total - 1)(rng);
  p.n_th = uni(0.0, 1.0);
  p.drive = DirectDrive{uni(0.0, 0.3), uni(0.0, 0.3), uni(0.0, 3.0)};
  return p;
}

namespace {

struct Tracker {
  CheckOutcome out;
  double worst = 0.0;

  explicit Tracker(std::string name) { out.name = std::move(name); }

  void record(bool ok, double metric) {
    ++out.evaluated;
    if (!ok) ++out.failures;
    worst = std::max(worst, metric);
  }

  CheckOutcome finish(const char* metric_name) {
    out.passed = out.failures == 0;
    std::ostringstream ss;
    ss << out.evaluated << " cases, " << out.failures << " failures, worst " << metric_name << '=' << worst;
    out.detail = ss.str();
    return out;
  }
};

Mat6 rotate_mode(const Mat6& V, Mode m, double phi) {
  Mat6 S = Mat6::Identity();
  const int o = quadrature_offset(m);
  S(o, o) = std::cos(phi);
  S(o, o + 1) = std::sin(phi);
  S(o + 1, o) = -std::sin(phi);
  S(o + 1, o + 1) = std::cos(phi);
  return S * V * S.transpose();
}

}  // namespace

std::vector<CheckOutcome> run_self_check(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Tracker residual("lyapunov residual < 1e-10");
  Tracker floor("symplectic eigenvalues >= 1/2 - 1e-8");
  Tracker ppt("two-mode E_N determinant vs spectral route within 1e-10");
  Tracker local("E_N invariant under local phase rotations within 1e-10");
  Tracker mono("residual contangles >= -1e-9");
  Tracker norm("|Gt+|^2 + |Gt-|^2 = G1^2 + G2^2 within 1e-12");
  Tracker scale("stability verdict invariant under time rescaling");
  Tracker thermal("diag(V) of vibrations non-decreasing in n_th");

  int accepted = 0;
  int attempts = 0;
  while (accepted < samples && attempts < 50 * samples) {
    ++attempts;
    SystemParams p = random_direct_params(rng);
    const auto& d = std::get<DirectDrive>(p.drive);

    {
      // degenerate hybrid norm holds for any couplings
      const HybridModeData h = hybrid_couplings(p, d.G_1, d.G_2);
      const double lhs = std::norm(h.Gt_plus) + std::norm(h.Gt_minus);
      const double err = std::abs(lhs - (d.G_1 * d.G_1 + d.G_2 * d.G_2));
      norm.record(err <= 1e-12, err);
    }

    const PointResult r = evaluate_point(p);
    if (r.stability) {
      const double s = std::uniform_real_distribution<double>(0.1, 10.0)(rng);
      const StabilityVerdict scaled = check_stability(Eigen::MatrixXd(s * r.system->A));
      scale.record(scaled.stable == r.stability->stable, 0.0);
    }
    if (!r.covariance) continue;
    ++accepted;

    const Eigen::MatrixXd A = r.system->A, D = r.system->D;
    const double res = lyapunov_residual(A, r.covariance->matrix(), D);
    residual.record(res < 1e-10, res);
    floor.record(r.symplectic_min >= kSymplecticFloor, 0.5 - r.symplectic_min);

    double ppt_err = 0.0;
    for (ModePair pair : {ModePair::a_B1, ModePair::a_B2, ModePair::B1_B2}) {
      const BipartitionView view = BipartitionView::of(*r.covariance, pair);
      ppt_err = std::max(ppt_err, std::abs(log_negativity_2mode(view) -
                                           log_negativity_2mode_spectral(view.matrix())));
    }
    ppt.record(ppt_err <= 1e-10, ppt_err);

    const Mode m = static_cast<Mode>(std::uniform_int_distribution<int>(0, 2)(rng));
    const double phi = std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng);
    const EntanglementReport rotated =
        residual_contangle(CovarianceMatrix(rotate_mode(r.covariance->matrix(), m, phi)));
    double rot_err = std::max({std::abs(rotated.E_aB1 - r.report->E_aB1),
                               std::abs(rotated.E_aB2 - r.report->E_aB2),
                               std::abs(rotated.E_B1B2 - r.report->E_B1B2)});
    for (int k = 0; k < 3; ++k) {
      rot_err = std::max(rot_err, std::abs(rotated.one_vs_two[k] - r.report->one_vs_two[k]));
    }
    local.record(rot_err <= 1e-10, rot_err);

    const double worst_residual = *std::min_element(r.report->residuals.begin(), r.report->residuals.end());
    mono.record(r.report->monogamy_ok, std::max(0.0, -worst_residual));

    SystemParams hotter = p;
    hotter.n_th += 0.5;
    const PointResult rh = evaluate_point(hotter);
    if (rh.covariance) {
      double drop = 0.0;
      for (int i = 2; i < 6; ++i) drop = std::max(drop, (*r.covariance)(i, i) - (*rh.covariance)(i, i));
      thermal.record(drop <= 1e-12, drop);
    }
  }

  std::vector<CheckOutcome> out = {
      residual.finish("residual"), floor.finish("deficit"), ppt.finish("difference"),
      local.finish("difference"),  mono.finish("violation"), norm.finish("error"),
      scale.finish("n/a"),         thermal.finish("decrease"),
  };
  if (accepted < samples) {
    out.push_back({"enough stable samples", false, accepted, samples - accepted,
                   "only " + std::to_string(accepted) + " stable samples drawn"});
  }
  return out;
}

}  // namespace molcav
