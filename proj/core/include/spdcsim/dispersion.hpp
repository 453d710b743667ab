#pragma once

#include <functional>
#include <string>

#include "spdcsim/errors.hpp"

namespace spdcsim {

// One-resonance Sellmeier form n^2(l) = a + b/(l^2 - c) - d*l^2, l in um.
struct SellmeierSet {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double window_min_um = 0.0;  // validity window, inclusive
  double window_max_um = 0.0;

  double n_squared(double lambda_um) const;
  double index(double lambda_um) const;
  bool in_window(double lambda_um) const {
    return lambda_um >= window_min_um && lambda_um <= window_max_um;
  }
  // Throws DomainError naming the window when lambda is outside it.
  void require_in_window(double lambda_um, const char* who) const;
  void validate(const std::string& name) const;
};

// Default BBO coefficient sets (classic literature set; configuration data,
// overridable through the JSON config).
SellmeierSet bbo_ordinary_default();
SellmeierSet bbo_extraordinary_default();

// Fitted one-resonance approximation to fused-silica dispersion over the
// telecom band, tuned so the default fiber profile lands its zero-dispersion
// wavelength near 1310 nm.
SellmeierSet fused_silica_default();

struct CrystalSpec {
  double cut_angle_deg = 29.67;  // surface normal to optic axis
  double length_mm = 5.0;
  double tilt_deg = 0.0;  // pump deviation from surface normal, signed
  SellmeierSet sellmeier_o = bbo_ordinary_default();
  SellmeierSet sellmeier_e = bbo_extraordinary_default();

  double length_um() const { return length_mm * 1000.0; }
  void validate() const;
};

struct FiberSpec {
  double length_m = 0.0;
  double core_radius_um = 4.1;
  double numerical_aperture = 0.12;
  SellmeierSet cladding_sellmeier = fused_silica_default();

  double v_number(double lambda_um) const;
  // Wavelength below which the profile is no longer single mode (V = 2.405).
  double cutoff_wavelength_um() const;
  void validate() const;
};

// --- crystal indices -------------------------------------------------------

double index_o(const CrystalSpec& crystal, double lambda_um);

// Extraordinary index at propagation angle theta (deg) to the optic axis:
// 1/n^2(theta) = cos^2/n_o^2 + sin^2/n_e^2.
double index_e(const CrystalSpec& crystal, double lambda_um, double theta_deg);

// --- fiber model -----------------------------------------------------------

// LP01 effective index from the scalar characteristic equation
// u J1(u)/J0(u) = w K1(w)/K0(w), u^2 + w^2 = V^2, solved by bracketed
// bisection on the normalized propagation constant b in (0,1).
double fiber_neff(const FiberSpec& fiber, double lambda_um);

double fiber_group_index(const FiberSpec& fiber, double lambda_um,
                         double step_um = 1e-3);

// Chromatic dispersion D = -(lambda/c) d^2 n_eff/d lambda^2 in ps/(nm*km).
// D > 0 means longer wavelengths arrive later.
double fiber_dispersion(const FiberSpec& fiber, double lambda_um,
                        double step_um = 1e-3);

// --- generic finite-difference forms over any index model n(lambda_um) -----
// The fiber operations are these applied to fiber_neff; tests drive them with
// stub index models.

using IndexModel = std::function<double(double)>;

double group_index_of(const IndexModel& n, double lambda_um, double step_um);
double dispersion_of(const IndexModel& n, double lambda_um, double step_um);

}  // namespace spdcsim
