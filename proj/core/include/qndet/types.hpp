#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qndet {

// Effective cross-Kerr interaction accumulated over one pulse, per signal
// photon.  theta is the conditional phase shift chi*t, kappa the residual
// absorption exponent.  phase_sign selects the rotation direction of the
// probe: +1 for the ideal lossless coupling, -1 for the dressed-atom
// evolution where the probe picks up exp(-(1 + i)*n*theta) at the matched
// operating point.
struct KerrInteraction {
  double theta = 0.0;
  double kappa = 0.0;
  int phase_sign = +1;

  void validate() const {
    if (!(theta >= 0.0))
      throw std::invalid_argument("KerrInteraction: theta must be >= 0");
    if (!(kappa >= 0.0))
      throw std::invalid_argument("KerrInteraction: kappa must be >= 0");
    if (phase_sign != +1 && phase_sign != -1)
      throw std::invalid_argument("KerrInteraction: phase_sign must be +1 or -1");
  }
};

// Coherent probe amplitude.
struct ProbeState {
  std::complex<double> alpha{0.0, 0.0};

  double mean_photons() const { return std::norm(alpha); }
};

// Signal mode in a photon-number eigenstate, optionally resolved into two
// polarization paths (n_h, n_v) that share the probe sequentially.
struct FockSignal {
  int photons = 0;
  std::optional<std::pair<int, int>> split;

  FockSignal() = default;

  explicit FockSignal(int n) : photons(n) {
    if (n < 0) throw std::invalid_argument("FockSignal: photon count must be >= 0");
  }

  FockSignal(int n_h, int n_v) : photons(n_h + n_v), split(std::in_place, n_h, n_v) {
    if (n_h < 0 || n_v < 0)
      throw std::invalid_argument("FockSignal: polarization counts must be >= 0");
  }
};

// Atomic transition and waveguide data, SI units throughout (rates in 1/s,
// angular frequencies in rad/s, lengths in m).
struct MaterialSystem {
  std::string name;
  double lambda = 0.0;               // transition wavelength
  double oscillator_strength = 0.0;  // dimensionless f-value of the probe transition
  double eta = 1.0;                  // host refractive index
  double gamma2 = 0.0;               // dephasing/decay rate of the spin level
  double gamma4 = 0.0;               // decay rate of the upper auxiliary level
  double delta_omega = 0.0;          // pulse bandwidth (rad/s)
  double mode_area = 0.0;            // effective transverse mode area (m^2)

  void validate() const {
    if (!(lambda > 0.0)) throw std::invalid_argument("MaterialSystem: lambda must be > 0");
    if (!(oscillator_strength > 0.0))
      throw std::invalid_argument("MaterialSystem: oscillator strength must be > 0");
    if (!(eta > 0.0)) throw std::invalid_argument("MaterialSystem: eta must be > 0");
    if (!(gamma2 > 0.0)) throw std::invalid_argument("MaterialSystem: gamma2 must be > 0");
    if (!(gamma4 >= 0.0)) throw std::invalid_argument("MaterialSystem: gamma4 must be >= 0");
    if (!(delta_omega > 0.0))
      throw std::invalid_argument("MaterialSystem: delta_omega must be > 0");
    if (!(mode_area > 0.0)) throw std::invalid_argument("MaterialSystem: mode_area must be > 0");
  }
};

// Classical pump (b) and probe (c) drive amplitudes.  Both are taken real
// and non-negative; only the photon numbers |alpha|^2 enter the rate
// equations.
struct DriveConfig {
  double alpha_b = 0.0;
  double alpha_c = 0.0;

  double pump_photons() const { return alpha_b * alpha_b; }
  double probe_photons() const { return alpha_c * alpha_c; }

  double pump_probe_ratio() const {
    if (!(alpha_c > 0.0))
      throw std::domain_error("DriveConfig: pump/probe ratio undefined for alpha_c == 0");
    return (alpha_b * alpha_b) / (alpha_c * alpha_c);
  }
};

// A solved operating point: the smallest atom number and the matched probe
// detuning that reach the requested signal-to-noise ratio.  nu_c is in units
// of gamma2; kerr.theta == kerr.kappa at the minimum-resource point.
struct DetectorDesign {
  double n_atoms = 0.0;
  double nu_c = 0.0;
  DriveConfig drive;
  KerrInteraction kerr;
  double snr = 0.0;
  double p_error = 0.0;
  std::vector<std::string> warnings;
};

}  // namespace qndet
