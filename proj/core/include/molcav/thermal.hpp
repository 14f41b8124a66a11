#pragma once

namespace molcav {

inline constexpr double kHbar = 1.054571817e-34;       // J s
inline constexpr double kBoltzmann = 1.380649e-23;     // J / K

/// Bose occupancy 1 / (exp(hbar omega / k_B T) - 1); zero at T = 0.
double temperature_to_nth(double temperature_kelvin, double omega_rad_s);

/// Inverse of temperature_to_nth; zero occupancy maps to T = 0.
double nth_to_temperature(double n_th, double omega_rad_s);

}  // namespace molcav
