#pragma once

#include <complex>
#include <optional>
#include <string_view>
#include <vector>

#include "qndet/homodyne.hpp"
#include "qndet/types.hpp"

namespace qndet {

// Diffraction-limited transverse mode area (lambda / (3*eta))^2.
double mode_area(double lambda, double eta);

// Resonant absorption cross-section 3*lambda^2 / (2*pi).
double resonant_cross_section(double lambda);

// Dimensional convention for the transition-rate factor
//     A_k = f e^2 omega^2 / (2 pi eps0 m_e c^p).
// Only p = 3 yields an inverse time and is the default everywhere; p = 2 is
// retained so the two readings can be printed side by side.
enum class RateConvention { c_cubed, c_squared };

double transition_rate(const MaterialSystem& m, RateConvention convention);

// Vacuum Rabi frequency squared of a single atom coupled to the pulse:
// |Omega|^2 = (sigma / (eta * mode_area)) * A * delta_omega / (8*pi).
double vacuum_rabi_sq(const MaterialSystem& m,
                      RateConvention convention = RateConvention::c_cubed);

// Everything the single-atom coupling derivation produces, in one place.
struct RabiSpec {
  double sigma = 0.0;             // resonant cross-section (m^2)
  double rate_factor = 0.0;       // A under the chosen convention
  double omega_sq = 0.0;          // |Omega|^2 (rad^2/s^2)
  double interaction_time = 0.0;  // t = 3*pi / delta_omega (s)
  double omega_sq_t = 0.0;        // |Omega|^2 * t / gamma2 (dimensionless)
};

RabiSpec rabi_spec(const MaterialSystem& m,
                   RateConvention convention = RateConvention::c_cubed);

// Tight-focusing estimate of the accumulated single-atom coupling,
// |Omega_a|^2 * t = 81 * eta * gamma2 / (8*pi), used by the design
// equations.  gamma2 defaults to 1 so the result is in units of gamma2.
double omega_a_sq_t(double eta, double gamma2 = 1.0);

// theta - i*kappa wrapper: the real part is the conditional phase shift, the
// negated imaginary part the absorption exponent.
struct ComplexShift {
  std::complex<double> value{0.0, 0.0};

  double theta() const { return value.real(); }
  double kappa() const { return -value.imag(); }
};

// Steady-state energy-shift rate of the dressed four-level chain driven by
// n_a signal, n_b pump and n_c probe photons:
//
//   W = N |O_a|^2 |O_c|^2 n_a n_c /
//       ( nu_c |O_b|^2 n_b + i (gamma4 |O_b|^2 n_b + gamma2 |O_c|^2 n_c) )
//
// Real part: ac-Stark shift of the probe; imaginary part: loss.  Rates and
// nu_c share one unit system (pass everything in units of gamma2, or
// everything in 1/s).
ComplexShift compute_w(double n_atoms, double rabi_a_sq, double rabi_b_sq,
                       double rabi_c_sq, int n_a, double n_b, double n_c,
                       double nu_c, double gamma2, double gamma4);

// Phase shift and absorption per signal photon accumulated over one pulse,
// for classical pump/probe drives alpha_b, alpha_c:
//
//   theta - i*kappa = N |O_a|^2 t /
//       ( nu_c |alpha_b|^2 + i (gamma4 |alpha_b|^2 + gamma2 |alpha_c|^2) )
//
// omega_sq_t = |O_a|^2 t in units of gamma2; nu_c, gamma2, gamma4 likewise.
ComplexShift theta_kappa(double n_atoms, double omega_sq_t, double alpha_b,
                         double alpha_c, double nu_c, double gamma2, double gamma4);

// Inputs of the minimum-resource solve.  theta_max is the single-photon
// phase shift the detector should operate at; the target is either an
// explicit SNR or an error probability converted through `convention`.
// gamma4_over_gamma2 and pump_probe_ratio fix the loss budget; omega_sq_t is
// the accumulated single-atom coupling in units of gamma2.
struct DesignRequest {
  double theta_max = 0.0;
  double p_error = 0.01;
  std::optional<double> snr;
  double pump_probe_ratio = 10.0;
  double gamma4_over_gamma2 = 1.0;
  double omega_sq_t = 0.0;
  SnrConvention convention = SnrConvention::nominal;
};

// Solves for the smallest atom number N and the matched detuning nu_c that
// reach the target SNR at theta_max:
//
//   N_min  = SNR^2 / (2 * theta_max * omega_sq_t) * (g*r + 1)
//   nu_c   = (g*r + 1) / r          [units of gamma2]
//
// with g = gamma4/gamma2 and r = |alpha_b|^2/|alpha_c|^2.  At this point the
// operating phase shift and absorption coincide: theta = kappa = theta_max.
// The probe amplitude is the small-angle working value SNR/(2*theta_max).
// Throws std::domain_error for theta_max outside (0, 1) or other infeasible
// inputs.  Adds a warning when N exceeds 1e4 (dephasing budget).
DetectorDesign design_minimum(const DesignRequest& request);

// Built-in material presets.
MaterialSystem nv_diamond();
const std::vector<std::string>& material_preset_names();
std::optional<MaterialSystem> material_preset(std::string_view name);

}  // namespace qndet
