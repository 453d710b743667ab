#pragma once

#include <cmath>
#include <numbers>

namespace spdcsim {

// Vacuum speed of light in the unit systems used across the toolkit.
inline constexpr double kSpeedOfLightMps = 299792458.0;     // m/s
inline constexpr double kSpeedOfLightUmPerPs = 299.792458;  // um/ps
inline constexpr double kSpeedOfLightNmPerPs = 299792.458;  // nm/ps

inline constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
inline constexpr double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

// Angular frequency in rad/ps for a vacuum wavelength in nm. Exact conversion,
// used at every interface boundary (internals work in angular frequency).
inline double omega_from_nm(double lambda_nm) {
  return 2.0 * std::numbers::pi * kSpeedOfLightNmPerPs / lambda_nm;
}
inline double nm_from_omega(double omega_rad_ps) {
  return 2.0 * std::numbers::pi * kSpeedOfLightNmPerPs / omega_rad_ps;
}

// Idler wavelength implied by CW energy conservation 1/lo + 1/le = 1/lp.
inline double conjugate_wavelength_nm(double pump_nm, double signal_nm) {
  return 1.0 / (1.0 / pump_nm - 1.0 / signal_nm);
}

}  // namespace spdcsim
