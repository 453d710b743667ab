#include "spdcsim/phasematching.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "spdcsim/units.hpp"

namespace spdcsim {

void SourceGeometry::validate() const {
  if (!(pump_waist_um > 0.0) || !(collection_waist_um > 0.0))
    throw UsageError("geometry: waists must be > 0");
  if (!(external_emission_angle_deg > 0.0 && external_emission_angle_deg < 90.0))
    throw UsageError("geometry: external emission angle must be in (0, 90) deg");
  if (!(pump_wavelength_nm > 0.0))
    throw UsageError("geometry: pump wavelength must be > 0");
}

double refract(double external_deg, double index) {
  if (external_deg < 0.0 || external_deg >= 90.0)
    throw UsageError("refract: external angle must be in [0, 90) deg");
  if (index < 1.0) throw UsageError("refract: index must be >= 1");
  return rad_to_deg(std::asin(std::sin(deg_to_rad(external_deg)) / index));
}

double unrefract(double internal_deg, double index) {
  const double s = index * std::sin(deg_to_rad(internal_deg));
  if (std::abs(s) > 1.0)
    throw DomainError("unrefract: total internal reflection, no external angle");
  return rad_to_deg(std::asin(s));
}

double internal_pump_axis_angle(const CrystalSpec& crystal, double pump_nm) {
  const double n_pump =
      index_e(crystal, pump_nm * 1e-3, crystal.cut_angle_deg);
  const double correction =
      crystal.tilt_deg >= 0.0 ? refract(crystal.tilt_deg, n_pump)
                              : -refract(-crystal.tilt_deg, n_pump);
  const double theta = crystal.cut_angle_deg + correction;
  if (theta < 0.0 || theta > 90.0)
    throw UsageError("crystal: internal pump-axis angle outside [0, 90] deg");
  return theta;
}

double kz_ordinary(const CrystalSpec& crystal, double lambda_um, double q) {
  crystal.sellmeier_o.require_in_window(lambda_um, "kz_ordinary");
  const double k = 2.0 * std::numbers::pi * crystal.sellmeier_o.index(lambda_um) /
                   lambda_um;
  const double kz2 = k * k - q * q;
  if (kz2 <= 0.0) throw DomainError("kz_ordinary: evanescent transverse momentum");
  return std::sqrt(kz2);
}

double kz_extraordinary(const CrystalSpec& crystal, double lambda_um, double q,
                        double theta_pump_axis_rad) {
  crystal.sellmeier_o.require_in_window(lambda_um, "kz_extraordinary");
  crystal.sellmeier_e.require_in_window(lambda_um, "kz_extraordinary");
  const double n2o = crystal.sellmeier_o.n_squared(lambda_um);
  const double n2e = crystal.sellmeier_e.n_squared(lambda_um);
  const double cos_tp = std::cos(theta_pump_axis_rad);
  const double two_pi_over_l = 2.0 * std::numbers::pi / lambda_um;

  auto index_at = [&](double cos_ax) {
    const double c2 = cos_ax * cos_ax;
    return 1.0 / std::sqrt(c2 / n2o + (1.0 - c2) / n2e);
  };

  // Fixed point on the index surface: the direction's angle to the optic axis
  // satisfies cos(ax) = kz * cos(theta_pump) / |k| in the perpendicular plane.
  double kz = two_pi_over_l * index_at(cos_tp);
  for (int it = 0; it < 80; ++it) {
    const double kmag_guess = std::hypot(kz, q);
    const double cos_ax = std::clamp(kz * cos_tp / kmag_guess, -1.0, 1.0);
    const double kmag = two_pi_over_l * index_at(cos_ax);
    const double kz2 = kmag * kmag - q * q;
    if (kz2 <= 0.0)
      throw DomainError("kz_extraordinary: evanescent transverse momentum");
    const double next = std::sqrt(kz2);
    if (std::abs(next - kz) < 1e-13) return next;
    kz = next;
  }
  return kz;
}

double collection_momentum(const SourceGeometry& geometry, double lambda_nm) {
  return 2.0 * std::numbers::pi *
         std::sin(deg_to_rad(geometry.external_emission_angle_deg)) /
         (lambda_nm * 1e-3);
}

double longitudinal_mismatch(const CrystalSpec& crystal,
                             const SourceGeometry& geometry, double lambda_s_nm,
                             double lambda_i_nm, double theta_pump_axis_deg) {
  const double theta = deg_to_rad(theta_pump_axis_deg);
  const double ls_um = lambda_s_nm * 1e-3;
  const double li_um = lambda_i_nm * 1e-3;
  const double lp_um = 1.0 / (1.0 / ls_um + 1.0 / li_um);
  const double qs = collection_momentum(geometry, lambda_s_nm);
  const double qi = -collection_momentum(geometry, lambda_i_nm);
  return kz_extraordinary(crystal, lp_um, qs + qi, theta) -
         kz_ordinary(crystal, ls_um, qs) -
         kz_extraordinary(crystal, li_um, qi, theta);
}

namespace {

double mismatch_on_energy_curve(const CrystalSpec& crystal,
                                const SourceGeometry& geometry, double theta_deg,
                                double lambda_o_nm) {
  const double lambda_e_nm =
      conjugate_wavelength_nm(geometry.pump_wavelength_nm, lambda_o_nm);
  return longitudinal_mismatch(crystal, geometry, lambda_o_nm, lambda_e_nm,
                               theta_deg);
}

}  // namespace

std::pair<double, double> central_wavelengths(const CrystalSpec& crystal,
                                              const SourceGeometry& geometry,
                                              double theta_pump_axis_deg,
                                              const PhaseMatchSearch& search) {
  auto f = [&](double lo) {
    return mismatch_on_energy_curve(crystal, geometry, theta_pump_axis_deg, lo);
  };
  double prev_x = search.lambda_min_nm;
  double prev_f = f(prev_x);
  double lo = 0.0, hi = 0.0;
  bool found = false;
  for (double x = search.lambda_min_nm + search.bracket_step_nm;
       x <= search.lambda_max_nm + 0.5 * search.bracket_step_nm;
       x += search.bracket_step_nm) {
    const double fx = f(x);
    if (prev_f == 0.0) {
      lo = hi = prev_x;
      found = true;
      break;
    }
    if (prev_f * fx < 0.0) {
      lo = prev_x;
      hi = x;
      found = true;
      break;
    }
    prev_x = x;
    prev_f = fx;
  }
  if (!found)
    throw SolveError("central_wavelengths: no phase matching in search window");
  while (hi - lo > search.tolerance_nm) {
    const double mid = 0.5 * (lo + hi);
    if (f(lo) * f(mid) <= 0.0)
      hi = mid;
    else
      lo = mid;
  }
  const double lambda_o = 0.5 * (lo + hi);
  const double lambda_e =
      conjugate_wavelength_nm(geometry.pump_wavelength_nm, lambda_o);
  return {lambda_o, lambda_e};
}

TuningCurveResult tuning_curve(const CrystalSpec& crystal,
                               const SourceGeometry& geometry,
                               const std::vector<double>& theta_deg,
                               const PhaseMatchSearch& search) {
  TuningCurveResult result;
  result.points.reserve(theta_deg.size());
  for (double th : theta_deg) {
    try {
      const auto [lo, le] = central_wavelengths(crystal, geometry, th, search);
      result.points.push_back(
          {th, lo, le, longitudinal_mismatch(crystal, geometry, lo, le, th)});
    } catch (const SolveError&) {
      result.skipped_angles_deg.push_back(th);
    }
  }
  return result;
}

double degeneracy_angle(const CrystalSpec& crystal, const SourceGeometry& geometry,
                        double bracket_lo_deg, double bracket_hi_deg) {
  const double lambda_deg_nm = 2.0 * geometry.pump_wavelength_nm;
  auto resid = [&](double theta_deg) {
    return longitudinal_mismatch(crystal, geometry, lambda_deg_nm, lambda_deg_nm,
                                 theta_deg);
  };
  double lo = bracket_lo_deg, hi = bracket_hi_deg;
  double flo = resid(lo), fhi = resid(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (flo * fhi > 0.0)
    throw SolveError("degeneracy_angle: no phase matching in bracket");
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    const double fm = resid(mid);
    if (fm == 0.0) return mid;
    if (flo * fm < 0.0) {
      hi = mid;
      fhi = fm;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace spdcsim
