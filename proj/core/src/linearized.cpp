#include "molcav/linearized.hpp"

#include <cmath>

#include "molcav/error.hpp"

namespace molcav {

Mat6 drift_matrix(const DriftInputs& in) {
  const double s = in.lambda * std::sin(in.theta);
  const double c = in.lambda * std::cos(in.theta);
  const double r1 = 2.0 * in.G_1.real(), i1 = 2.0 * in.G_1.imag();
  const double r2 = 2.0 * in.G_2.real(), i2 = 2.0 * in.G_2.imag();
  const double k = in.kappa, d = in.delta_tilde;

  Mat6 A;
  // clang-format off
  A <<  -k,   d,  i1,         0.0,          i2,         0.0,
        -d,  -k, -r1,         0.0,         -r2,         0.0,
       0.0, 0.0, -in.gamma_1, in.omega_1,   s,           c,
       -r1, -i1, -in.omega_1, -in.gamma_1, -c,           s,
       0.0, 0.0, -s,          c,           -in.gamma_2,  in.omega_2,
       -r2, -i2, -c,         -s,           -in.omega_2, -in.gamma_2;
  // clang-format on
  return A;
}

Mat6 diffusion_matrix(double kappa, double gamma_1, double gamma_2, double n_th) {
  Vec6 d;
  const double t = 2.0 * n_th + 1.0;
  d << kappa, kappa, gamma_1 * t, gamma_1 * t, gamma_2 * t, gamma_2 * t;
  return d.asDiagonal();
}

LinearizedSystem build_linearized_system(const SystemParams& params, const MeanFields& mf) {
  validate(params);
  if (!params.is_direct() && !mf.converged) {
    throw Error(ErrorKind::InvalidParams, "mean fields are not converged");
  }
  if (!std::isfinite(mf.delta_tilde)) {
    throw Error(ErrorKind::InvalidParams, "effective detuning is not finite");
  }

  LinearizedSystem sys;
  if (const auto* d = std::get_if<DirectDrive>(&params.drive)) {
    sys.G_1 = d->G_1;
    sys.G_2 = d->G_2;
  } else {
    sys.G_1 = params.g_1() * mf.alpha;
    sys.G_2 = params.g_2() * mf.alpha;
  }
  sys.delta_tilde = mf.delta_tilde;

  DriftInputs in;
  in.delta_tilde = mf.delta_tilde;
  in.kappa = params.kappa;
  in.gamma_1 = params.gamma_1;
  in.gamma_2 = params.gamma_2;
  in.omega_1 = params.omega_1;
  in.omega_2 = params.omega_2;
  in.lambda = params.lambda();
  in.theta = params.theta;
  in.G_1 = sys.G_1;
  in.G_2 = sys.G_2;
  sys.A = drift_matrix(in);
  sys.D = diffusion_matrix(params.kappa, params.gamma_1, params.gamma_2, params.n_th);
  return sys;
}

}  // namespace molcav
