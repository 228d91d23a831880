#include "qndet/kerr.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace qndet {

ProbeState evolve_probe(const FockSignal& signal, const ProbeState& probe,
                        const KerrInteraction& kerr) {
  kerr.validate();
  const double n = static_cast<double>(signal.photons);
  const std::complex<double> factor =
      std::exp(std::complex<double>(-n * kerr.kappa, kerr.phase_sign * n * kerr.theta));
  return ProbeState{probe.alpha * factor};
}

ProbeState evolve_dual_path(int n_h, int n_v, const ProbeState& probe,
                            const KerrInteraction& kerr) {
  // The two polarization paths act on the probe one after the other, so the
  // accumulated factor depends only on n_h + n_v.
  return evolve_probe(FockSignal(n_h, n_v), probe, kerr);
}

double survival_probability(int n_a, const KerrInteraction& kerr) {
  kerr.validate();
  if (n_a < 0) throw std::invalid_argument("survival_probability: n_a must be >= 0");
  return std::exp(-static_cast<double>(n_a) * kerr.kappa);
}

}  // namespace qndet
