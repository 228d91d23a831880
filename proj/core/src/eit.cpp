#include "qndet/eit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qndet/constants.hpp"
#include "qndet/math.hpp"

namespace qndet {

using std::numbers::pi;

double mode_area(double lambda, double eta) {
  if (!(lambda > 0.0)) throw std::invalid_argument("mode_area: lambda must be > 0");
  if (!(eta > 0.0)) throw std::invalid_argument("mode_area: eta must be > 0");
  const double w = lambda / (3.0 * eta);
  return w * w;
}

double resonant_cross_section(double lambda) {
  if (!(lambda > 0.0))
    throw std::invalid_argument("resonant_cross_section: lambda must be > 0");
  return 3.0 * lambda * lambda / (2.0 * pi);
}

double transition_rate(const MaterialSystem& m, RateConvention convention) {
  m.validate();
  const double c = constants::speed_of_light;
  const double omega = 2.0 * pi * c / m.lambda;
  const double e = constants::elementary_charge;
  double denom = 2.0 * pi * constants::vacuum_permittivity * constants::electron_mass * c * c;
  if (convention == RateConvention::c_cubed) denom *= c;
  return m.oscillator_strength * e * e * omega * omega / denom;
}

double vacuum_rabi_sq(const MaterialSystem& m, RateConvention convention) {
  m.validate();
  const double sigma = resonant_cross_section(m.lambda);
  return sigma / (m.eta * m.mode_area) * transition_rate(m, convention) * m.delta_omega /
         (8.0 * pi);
}

RabiSpec rabi_spec(const MaterialSystem& m, RateConvention convention) {
  m.validate();
  RabiSpec spec;
  spec.sigma = resonant_cross_section(m.lambda);
  spec.rate_factor = transition_rate(m, convention);
  spec.omega_sq = vacuum_rabi_sq(m, convention);
  // A pulse of bandwidth delta_omega needs ~3 periods of 2*pi/delta_omega to
  // pass an atom; that dwell time is what the coupling accumulates over.
  spec.interaction_time = 3.0 * pi / m.delta_omega;
  spec.omega_sq_t = spec.omega_sq * spec.interaction_time / m.gamma2;
  return spec;
}

double omega_a_sq_t(double eta, double gamma2) {
  if (!(eta > 0.0)) throw std::invalid_argument("omega_a_sq_t: eta must be > 0");
  if (!(gamma2 > 0.0)) throw std::invalid_argument("omega_a_sq_t: gamma2 must be > 0");
  // sigma/(eta*A) with A = (lambda/(3*eta))^2 collapses to 27*eta/(2*pi);
  // with A_rate ~ 2*gamma2 and t = 3*pi/delta_omega the product becomes
  // independent of the wavelength entirely.
  return 81.0 * eta * gamma2 / (8.0 * pi);
}

ComplexShift compute_w(double n_atoms, double rabi_a_sq, double rabi_b_sq,
                       double rabi_c_sq, int n_a, double n_b, double n_c,
                       double nu_c, double gamma2, double gamma4) {
  if (!(n_atoms > 0.0)) throw std::invalid_argument("compute_w: n_atoms must be > 0");
  if (n_a < 0) throw std::invalid_argument("compute_w: n_a must be >= 0");
  if (!(rabi_a_sq >= 0.0 && rabi_b_sq >= 0.0 && rabi_c_sq >= 0.0))
    throw std::invalid_argument("compute_w: squared Rabi frequencies must be >= 0");
  if (!(n_b >= 0.0 && n_c >= 0.0))
    throw std::invalid_argument("compute_w: photon numbers must be >= 0");
  if (!(gamma2 >= 0.0 && gamma4 >= 0.0))
    throw std::invalid_argument("compute_w: decay rates must be >= 0");

  const std::complex<double> numerator =
      n_atoms * rabi_a_sq * rabi_c_sq * static_cast<double>(n_a) * n_c;
  const std::complex<double> denominator(nu_c * rabi_b_sq * n_b,
                                         gamma4 * rabi_b_sq * n_b + gamma2 * rabi_c_sq * n_c);
  // complex_div flags the degenerate pump-off/probe-off corner explicitly.
  return ComplexShift{complex_div(numerator, denominator)};
}

ComplexShift theta_kappa(double n_atoms, double omega_sq_t, double alpha_b,
                         double alpha_c, double nu_c, double gamma2, double gamma4) {
  if (!(n_atoms > 0.0)) throw std::invalid_argument("theta_kappa: n_atoms must be > 0");
  if (!(omega_sq_t > 0.0)) throw std::invalid_argument("theta_kappa: omega_sq_t must be > 0");
  if (!(alpha_b >= 0.0 && alpha_c >= 0.0))
    throw std::invalid_argument("theta_kappa: drive amplitudes must be >= 0");
  if (!(gamma2 >= 0.0 && gamma4 >= 0.0))
    throw std::invalid_argument("theta_kappa: decay rates must be >= 0");

  const double n_b = alpha_b * alpha_b;
  const double n_c = alpha_c * alpha_c;
  const std::complex<double> denominator(nu_c * n_b, gamma4 * n_b + gamma2 * n_c);
  return ComplexShift{complex_div({n_atoms * omega_sq_t, 0.0}, denominator)};
}

DetectorDesign design_minimum(const DesignRequest& request) {
  if (!(request.theta_max > 0.0 && request.theta_max < 1.0))
    throw std::domain_error("design_minimum: theta_max must lie in (0, 1)");
  if (!(request.pump_probe_ratio > 0.0))
    throw std::domain_error("design_minimum: pump/probe ratio must be > 0");
  if (!(request.gamma4_over_gamma2 >= 0.0))
    throw std::domain_error("design_minimum: gamma4/gamma2 must be >= 0");
  if (!(request.omega_sq_t > 0.0))
    throw std::domain_error("design_minimum: omega_sq_t must be > 0");

  const double snr =
      request.snr ? *request.snr : snr_for_p_error(request.p_error, request.convention);
  if (!(snr > 0.0)) throw std::domain_error("design_minimum: target snr must be > 0");

  const double g = request.gamma4_over_gamma2;
  const double r = request.pump_probe_ratio;
  const double theta = request.theta_max;

  // Small-angle working point.  Using SNR/(2*theta) rather than the exact
  // 1/sin amplitude keeps the closed-form identities of the minimum exact:
  // plugging (N, nu_c, alpha_b, alpha_c) back into theta_kappa returns
  // theta = kappa = theta_max identically.
  const double alpha_c = snr / (2.0 * theta);
  const double alpha_b = std::sqrt(r) * alpha_c;

  const double n_atoms = snr * snr / (2.0 * theta * request.omega_sq_t) * (g * r + 1.0);
  const double nu_c = (g * r + 1.0) / r;  // units of gamma2

  DetectorDesign design;
  design.n_atoms = n_atoms;
  design.nu_c = nu_c;
  design.drive = DriveConfig{alpha_b, alpha_c};
  design.kerr = KerrInteraction{theta, theta, -1};
  design.snr = snr;
  design.p_error = p_error_binary(snr);
  if (n_atoms > 1.0e4)
    design.warnings.push_back(
        "atom number exceeds 1e4: collective dephasing is no longer negligible at this "
        "operating point");
  return design;
}

MaterialSystem nv_diamond() {
  MaterialSystem m;
  m.name = "nv-diamond";
  m.lambda = 637e-9;
  m.oscillator_strength = 0.12;
  m.eta = 2.4;
  m.gamma2 = 1.0 / 50e-9;  // 50 ns spin coherence floor
  m.gamma4 = m.gamma2;
  m.delta_omega = 2.0 * pi * 5e6;
  m.mode_area = mode_area(m.lambda, m.eta);
  return m;
}

const std::vector<std::string>& material_preset_names() {
  static const std::vector<std::string> names = {"nv-diamond"};
  return names;
}

std::optional<MaterialSystem> material_preset(std::string_view name) {
  if (name == "nv-diamond") return nv_diamond();
  return std::nullopt;
}

}  // namespace qndet
