#include "molcav/thermal.hpp"

#include <cmath>

#include "molcav/error.hpp"

namespace molcav {

double temperature_to_nth(double temperature_kelvin, double omega_rad_s) {
  if (!(temperature_kelvin >= 0.0) || !(omega_rad_s > 0.0)) {
    throw Error(ErrorKind::InvalidParams, "temperature must be >= 0 and omega > 0");
  }
  if (temperature_kelvin == 0.0) return 0.0;
  const double x = kHbar * omega_rad_s / (kBoltzmann * temperature_kelvin);
  return 1.0 / std::expm1(x);
}

double nth_to_temperature(double n_th, double omega_rad_s) {
  if (!(n_th >= 0.0) || !(omega_rad_s > 0.0)) {
    throw Error(ErrorKind::InvalidParams, "n_th must be >= 0 and omega > 0");
  }
  if (n_th == 0.0) return 0.0;
  return kHbar * omega_rad_s / (kBoltzmann * std::log1p(1.0 / n_th));
}

}  // namespace molcav
