#include "spdcsim/dispersion.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "spdcsim/units.hpp"

namespace spdcsim {

namespace {

std::string window_message(const char* who, double lambda_um,
                           const SellmeierSet& s) {
  std::ostringstream os;
  os << who << ": wavelength " << lambda_um
     << " um outside Sellmeier validity window [" << s.window_min_um << ", "
     << s.window_max_um << "] um";
  return os.str();
}

}  // namespace

double SellmeierSet::n_squared(double lambda_um) const {
  const double l2 = lambda_um * lambda_um;
  return a + b / (l2 - c) - d * l2;
}

double SellmeierSet::index(double lambda_um) const {
  return std::sqrt(n_squared(lambda_um));
}

void SellmeierSet::require_in_window(double lambda_um, const char* who) const {
  if (!in_window(lambda_um)) throw DomainError(window_message(who, lambda_um, *this));
}

void SellmeierSet::validate(const std::string& name) const {
  if (!(window_min_um > 0.0) || !(window_max_um > window_min_um))
    throw UsageError(name + ": validity window must satisfy 0 < min < max");
  if (!(window_min_um * window_min_um > c))
    throw UsageError(name + ": lambda^2 - c must stay positive over the window");
  // n^2 > 1 over the window; the form is monotone enough that a coarse grid
  // plus the endpoints catches violations.
  for (int i = 0; i <= 64; ++i) {
    const double l = window_min_um + (window_max_um - window_min_um) * i / 64.0;
    if (!(n_squared(l) > 1.0))
      throw UsageError(name + ": n^2(lambda) <= 1 inside the validity window");
  }
}

SellmeierSet bbo_ordinary_default() {
  return SellmeierSet{2.7405, 0.0184, 0.0179, 0.0155, 0.25, 2.3};
}

SellmeierSet bbo_extraordinary_default() {
  return SellmeierSet{2.3730, 0.0128, 0.0156, 0.0044, 0.25, 2.3};
}

SellmeierSet fused_silica_default() {
  return SellmeierSet{2.1056820236, 0.0067638499, 0.1511684114, 0.0102920949,
                      0.9, 1.8};
}

void CrystalSpec::validate() const {
  if (!(length_mm > 0.0)) throw UsageError("crystal: length must be > 0");
  if (cut_angle_deg < 0.0 || cut_angle_deg > 90.0)
    throw UsageError("crystal: cut angle must be in [0, 90] deg");
  sellmeier_o.validate("crystal.sellmeier_o");
  sellmeier_e.validate("crystal.sellmeier_e");
}

double FiberSpec::v_number(double lambda_um) const {
  return 2.0 * std::numbers::pi / lambda_um * core_radius_um * numerical_aperture;
}

double FiberSpec::cutoff_wavelength_um() const {
  return 2.0 * std::numbers::pi * core_radius_um * numerical_aperture / 2.405;
}

void FiberSpec::validate() const {
  if (length_m < 0.0) throw UsageError("fiber: length must be >= 0");
  if (!(core_radius_um > 0.0)) throw UsageError("fiber: core radius must be > 0");
  if (!(numerical_aperture > 0.0 && numerical_aperture < 1.0))
    throw UsageError("fiber: numerical aperture must be in (0, 1)");
  cladding_sellmeier.validate("fiber.cladding_sellmeier");
}

double index_o(const CrystalSpec& crystal, double lambda_um) {
  crystal.sellmeier_o.require_in_window(lambda_um, "index_o");
  return crystal.sellmeier_o.index(lambda_um);
}

double index_e(const CrystalSpec& crystal, double lambda_um, double theta_deg) {
  crystal.sellmeier_o.require_in_window(lambda_um, "index_e");
  crystal.sellmeier_e.require_in_window(lambda_um, "index_e");
  if (theta_deg < 0.0 || theta_deg > 90.0)
    throw UsageError("index_e: theta must be in [0, 90] deg");
  const double th = deg_to_rad(theta_deg);
  const double c2 = std::cos(th) * std::cos(th);
  const double s2 = std::sin(th) * std::sin(th);
  return 1.0 / std::sqrt(c2 / crystal.sellmeier_o.n_squared(lambda_um) +
                         s2 / crystal.sellmeier_e.n_squared(lambda_um));
}

namespace {

// Residual of the LP01 characteristic equation as a function of the
// normalized propagation constant b. Sign change from + to - on (0,1) for
// single-mode V.
double lp01_residual(double b, double v) {
  const double u = v * std::sqrt(1.0 - b);
  const double w = v * std::sqrt(b);
  const double j0 = std::cyl_bessel_j(0, u);
  const double j1 = std::cyl_bessel_j(1, u);
  const double k0 = std::cyl_bessel_k(0, w);
  const double k1 = std::cyl_bessel_k(1, w);
  return u * j1 / j0 - w * k1 / k0;
}

}  // namespace

double fiber_neff(const FiberSpec& fiber, double lambda_um) {
  fiber.cladding_sellmeier.require_in_window(lambda_um, "fiber_neff");
  const double v = fiber.v_number(lambda_um);
  if (!(v < 2.405)) {
    std::ostringstream os;
    os << "fiber_neff: V = " << v << " at " << lambda_um
       << " um; profile is not single mode (V >= 2.405, cutoff "
       << fiber.cutoff_wavelength_um() << " um)";
    throw UsageError(os.str());
  }
  double lo = 1e-9, hi = 1.0 - 1e-9;
  double flo = lp01_residual(lo, v);
  double fhi = lp01_residual(hi, v);
  if (!(flo > 0.0 && fhi < 0.0))
    throw SolveError("fiber_neff: no LP01 root in bracket; invalid fiber profile");
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    const double fm = lp01_residual(mid, v);
    if (fm > 0.0) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  const double b = 0.5 * (lo + hi);
  const double ncl = fiber.cladding_sellmeier.index(lambda_um);
  const double na = fiber.numerical_aperture;
  return std::sqrt(ncl * ncl + b * na * na);
}

double group_index_of(const IndexModel& n, double lambda_um, double step_um) {
  const double dn = (n(lambda_um + step_um) - n(lambda_um - step_um)) / (2.0 * step_um);
  return n(lambda_um) - lambda_um * dn;
}

double dispersion_of(const IndexModel& n, double lambda_um, double step_um) {
  const double gp = group_index_of(n, lambda_um + step_um, step_um);
  const double gm = group_index_of(n, lambda_um - step_um, step_um);
  const double dng_per_um = (gp - gm) / (2.0 * step_um);
  // D = (1/c) dn_g/dlambda; per km of fiber and per nm of wavelength:
  // t_ps(1 km) = 1e9 um / c_umps * n_g, so D = 1e9/c_umps * dn_g/dlambda_nm.
  return 1e9 / kSpeedOfLightUmPerPs * dng_per_um * 1e-3;
}

namespace {

void require_band(const FiberSpec& fiber, double lambda_um, double margin_um,
                  const char* who) {
  const SellmeierSet& s = fiber.cladding_sellmeier;
  if (!s.in_window(lambda_um - margin_um) || !s.in_window(lambda_um + margin_um)) {
    std::ostringstream os;
    os << who << ": finite-difference stencil [" << lambda_um - margin_um
       << ", " << lambda_um + margin_um << "] um leaves the validity window ["
       << s.window_min_um << ", " << s.window_max_um << "] um";
    throw DomainError(os.str());
  }
}

}  // namespace

double fiber_group_index(const FiberSpec& fiber, double lambda_um, double step_um) {
  require_band(fiber, lambda_um, step_um, "fiber_group_index");
  return group_index_of([&](double l) { return fiber_neff(fiber, l); }, lambda_um,
                        step_um);
}

double fiber_dispersion(const FiberSpec& fiber, double lambda_um, double step_um) {
  require_band(fiber, lambda_um, 2.0 * step_um, "fiber_dispersion");
  return dispersion_of([&](double l) { return fiber_neff(fiber, l); }, lambda_um,
                       step_um);
}

}  // namespace spdcsim
