#pragma once

#include <optional>
#include <vector>

#include "spdcsim/dispersion.hpp"

namespace spdcsim {

struct SourceGeometry {
  double pump_waist_um = 150.0;
  double collection_waist_um = 105.0;
  double external_emission_angle_deg = 3.0;  // each arm, symmetric about pump
  double pump_wavelength_nm = 775.0;

  void validate() const;
};

struct TuningCurvePoint {
  double internal_pump_axis_angle_deg = 0.0;
  double lambda_o_nm = 0.0;
  double lambda_e_nm = 0.0;
  double residual_mismatch = 0.0;  // rad/um
};

// Snell refraction at the crystal face: sin(external) = index * sin(internal).
double refract(double external_deg, double index);
double unrefract(double internal_deg, double index);

// Internal pump-to-optic-axis angle for the crystal as mounted: cut angle
// plus the refracted tilt (pump index at the cut angle is used for the tilt
// refraction).
double internal_pump_axis_angle(const CrystalSpec& crystal, double pump_nm);

// --- plane-wave decomposition helpers ---------------------------------------
//
// Geometry: pump propagates along z at `theta_pump_axis` to the optic axis;
// the two collection directions lie at +/- the internal emission angle in the
// plane perpendicular to the principal plane (the cone-intersection plane of
// the apparatus). `q` is the transverse momentum in that plane, rad/um.
// Snell at the exit face preserves q, so a collection direction at external
// angle alpha corresponds to |q| = 2*pi*sin(alpha)/lambda for both arms.

// Longitudinal wavevector of an ordinary wave, kz = sqrt(k^2 - q^2).
double kz_ordinary(const CrystalSpec& crystal, double lambda_um, double q);

// Longitudinal wavevector of an extraordinary wave with transverse momentum q
// in the perpendicular plane; the direction-dependent index is resolved by
// fixed-point iteration on the index surface.
double kz_extraordinary(const CrystalSpec& crystal, double lambda_um, double q,
                        double theta_pump_axis_rad);

// Central transverse momentum of a collected photon, rad/um (positive arm).
double collection_momentum(const SourceGeometry& geometry, double lambda_nm);

// --- phase matching ----------------------------------------------------------

// Signed longitudinal mismatch at the central collection directions,
// e-pump -> o-signal + e-idler, with transverse momentum conserved exactly:
// dk_z = k_pz(q_s + q_i) - k_sz(q_s) - k_iz(q_i), rad/um. Energy conservation
// is NOT assumed; any (lambda_s, lambda_i) inside the Sellmeier windows is
// allowed.
double longitudinal_mismatch(const CrystalSpec& crystal,
                             const SourceGeometry& geometry, double lambda_s_nm,
                             double lambda_i_nm, double theta_pump_axis_deg);

// Options for the 1-D bracketed solve of central_wavelengths.
struct PhaseMatchSearch {
  double lambda_min_nm = 1300.0;
  double lambda_max_nm = 1800.0;
  double bracket_step_nm = 1.0;   // scan grid for sign changes; first bracket wins
  double tolerance_nm = 1e-6;
};

// Solves dk_z = 0 jointly with 1/lo + 1/le = 1/lp. Returns (lambda_o,
// lambda_e) labeled by polarization (ordinary first). Throws SolveError when
// no bracket exists ("no phase matching").
std::pair<double, double> central_wavelengths(
    const CrystalSpec& crystal, const SourceGeometry& geometry,
    double theta_pump_axis_deg, const PhaseMatchSearch& search = {});

struct TuningCurveResult {
  std::vector<TuningCurvePoint> points;
  std::vector<double> skipped_angles_deg;  // angles with no phase matching
};

TuningCurveResult tuning_curve(const CrystalSpec& crystal,
                               const SourceGeometry& geometry,
                               const std::vector<double>& theta_deg,
                               const PhaseMatchSearch& search = {});

// The internal pump-axis angle at which emission is degenerate at 2*lambda_p.
// Bisection on the signed degeneracy residual over [20, 45] deg; the crystal's
// cut angle and tilt are ignored (only its dispersion data is used).
double degeneracy_angle(const CrystalSpec& crystal, const SourceGeometry& geometry,
                        double bracket_lo_deg = 20.0, double bracket_hi_deg = 45.0);

}  // namespace spdcsim
