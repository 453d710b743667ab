#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "spdcsim/phasematching.hpp"

namespace spdcsim {

enum class PumpKind { cw, pulsed };

struct PumpSpec {
  PumpKind kind = PumpKind::cw;
  double center_wavelength_nm = 775.0;
  std::optional<double> bandwidth_fwhm_nm;  // pulsed only; intensity FWHM

  void validate() const;
};

// How the wavevectors' frequency dependence enters the EPMF: exact per-point
// evaluation, or a Taylor expansion in frequency detunings around the
// configured degenerate point (first or second order).
enum class FrequencyModel { exact, taylor1, taylor2 };

struct EpmfOptions {
  double gamma = 0.193;     // sinc(x) ~ exp(-gamma x^2), amplitude-FWHM match
  int quadrature_order = 15;  // Gauss-Hermite nodes per transverse axis
  FrequencyModel frequency_model = FrequencyModel::exact;
  // Internal pump-axis angle override (deg). When unset, the crystal's
  // mounted angle (cut + refracted tilt) is used.
  std::optional<double> theta_override_deg;
};

struct GridSpec {
  double signal_min_nm = 0.0;
  double signal_max_nm = 0.0;
  double idler_min_nm = 0.0;
  double idler_max_nm = 0.0;
  std::size_t signal_points = 256;
  std::size_t idler_points = 256;

  // +-40 nm around the degenerate point of the given pump wavelength.
  static GridSpec centered_on_degeneracy(double pump_nm, double half_span_nm = 40.0,
                                         std::size_t n = 256);
};

struct JointSpectrumGrid {
  std::vector<double> signal_axis_nm;  // strictly increasing
  std::vector<double> idler_axis_nm;
  std::vector<std::complex<double>> amplitude;  // row-major [is * ni + ii]
  bool normalized = false;

  std::size_t ns() const { return signal_axis_nm.size(); }
  std::size_t ni() const { return idler_axis_nm.size(); }
  std::complex<double>& at(std::size_t is, std::size_t ii) {
    return amplitude[is * ni() + ii];
  }
  const std::complex<double>& at(std::size_t is, std::size_t ii) const {
    return amplitude[is * ni() + ii];
  }
  double signal_step_nm() const;
  double idler_step_nm() const;
  // Scales so that sum |psi|^2 * ds * di = 1 (compensated summation in fixed
  // row-major order, independent of any evaluation parallelism).
  void normalize();
  void validate() const;
};

struct CorrelationMetrics {
  double pearson = 0.0;
  double schmidt_number = 1.0;
  double purity = 1.0;
  double marginal_fwhm_signal_nm = 0.0;
  double marginal_fwhm_idler_nm = 0.0;
  double ridge_angle_deg = 0.0;  // principal axis of the intensity covariance
};

// --- effective phase matching function --------------------------------------

// Evaluates the EPMF on single points or grids for a fixed crystal mounting.
// The analytic path linearizes the longitudinal mismatch in the transverse
// momenta and replaces sinc by a Gaussian, making the mode-overlap integral
// closed-form; the quadrature path keeps the exact sinc response and exact
// transverse dependence (nested Gauss-Hermite) and serves as the oracle.
class EpmfEngine {
 public:
  EpmfEngine(const CrystalSpec& crystal, const SourceGeometry& geometry,
             EpmfOptions options = {});

  std::complex<double> analytic(double lambda_s_nm, double lambda_i_nm) const;
  std::complex<double> quadrature(double lambda_s_nm, double lambda_i_nm) const;

  double theta_deg() const { return theta_deg_; }

 private:
  struct Linearization {
    double k0 = 0.0;   // central mismatch, rad/um
    double a_s = 0.0;  // d(dk_z)/d(q_s), um
    double a_i = 0.0;
    double q_imbalance = 0.0;  // net central transverse momentum, rad/um
  };
  double kz_pump(double omega, double q) const;
  double kz_signal(double omega, double q) const;
  double kz_idler(double omega, double q) const;
  double mismatch(double omega_s, double omega_i, double q_s, double q_i) const;
  Linearization linearize(double omega_s, double omega_i) const;

  CrystalSpec crystal_;
  SourceGeometry geometry_;
  EpmfOptions options_;
  double theta_deg_ = 0.0;
  double theta_rad_ = 0.0;
  double omega_pump_center_ = 0.0;  // Taylor expansion centers (rad/ps)
  double omega_half_center_ = 0.0;
  std::vector<double> gh_nodes_;
  std::vector<double> gh_weights_;
};

// Single-point EPMF amplitude at the crystal's mounted angle (analytic path).
std::complex<double> epmf_amplitude(const CrystalSpec& crystal,
                                    const SourceGeometry& geometry,
                                    double lambda_s_nm, double lambda_i_nm,
                                    const EpmfOptions& options = {});

// Numerical-quadrature oracle path.
std::complex<double> epmf_amplitude_quadrature(const CrystalSpec& crystal,
                                               const SourceGeometry& geometry,
                                               double lambda_s_nm,
                                               double lambda_i_nm,
                                               const EpmfOptions& options = {});

// Pump spectral amplitude A(w_s + w_i): Gaussian in the sum frequency whose
// intensity FWHM equals the configured bandwidth. CW pumps are handled only
// by cw_slice; calling this with one is a usage error.
double pump_envelope(const PumpSpec& pump, double lambda_s_nm, double lambda_i_nm);

// Normalized EPMF grid (pump factor unity).
JointSpectrumGrid epmf_grid(const CrystalSpec& crystal, const SourceGeometry& geometry,
                            const GridSpec& grid, const EpmfOptions& options = {},
                            bool use_quadrature = false);

// psi = Theta * A, elementwise, then normalized. Pulsed pumps only; grids
// smaller than 8x8 are rejected (metrics unreliable).
JointSpectrumGrid joint_spectrum(const CrystalSpec& crystal,
                                 const SourceGeometry& geometry,
                                 const PumpSpec& pump, const GridSpec& grid,
                                 const EpmfOptions& options = {});

// Applies a pulsed pump envelope to an existing EPMF grid and renormalizes.
JointSpectrumGrid apply_pump(const JointSpectrumGrid& theta, const PumpSpec& pump);

// --- CW slice ----------------------------------------------------------------

struct CwSlice {
  std::vector<double> signal_axis_nm;
  std::vector<double> idler_axis_nm;  // implied by energy conservation
  std::vector<std::complex<double>> amplitude;  // normalized 1-D slice
  double pump_wavelength_nm = 0.0;
  double center_nm = 0.0;  // intensity-weighted centroid of |amp|^2
  double fwhm_nm = 0.0;    // outermost half-max crossings of |amp|^2
};

// Diagonal slice of the EPMF for a CW pump at lambda_p (650-820 nm).
CwSlice cw_slice(const CrystalSpec& crystal, const SourceGeometry& geometry,
                 double pump_wavelength_nm, const std::vector<double>& signal_axis_nm,
                 const EpmfOptions& options = {});

// Slice machinery over an arbitrary amplitude function Theta(ls, li); used by
// cw_slice and directly testable against synthetic closed forms.
using AmplitudeFn = std::function<std::complex<double>(double, double)>;
CwSlice cw_slice_of(const AmplitudeFn& theta, double pump_wavelength_nm,
                    const std::vector<double>& signal_axis_nm);

// --- metrics -----------------------------------------------------------------

// Pearson correlation, Schmidt number (SVD of the normalized amplitude
// matrix), purity = 1/K, marginal FWHMs and ridge angle. Requires a
// normalized grid.
CorrelationMetrics metrics(const JointSpectrumGrid& grid);

struct DecorrelationResult {
  double bandwidth_nm = 0.0;
  CorrelationMetrics metrics_at_best;
  bool at_boundary = false;  // minimum pinned to the scan range edge
};

// Coarse scan plus golden-section refinement of |pearson| over pump
// bandwidth. The EPMF grid is computed once and reused across bandwidths.
DecorrelationResult decorrelation_scan(const CrystalSpec& crystal,
                                       const SourceGeometry& geometry,
                                       double bandwidth_min_nm,
                                       double bandwidth_max_nm,
                                       std::size_t coarse_samples,
                                       const GridSpec& grid,
                                       const EpmfOptions& options = {});

}  // namespace spdcsim
