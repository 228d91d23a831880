#pragma once

#include "qndet/types.hpp"

namespace qndet {

// Joint evolution of |n_a>|alpha_c> under the cross-Kerr coupling: the
// signal Fock state is untouched and the probe amplitude is multiplied by
// exp(-n_a*kappa + i*phase_sign*n_a*theta).  A split signal (n_h, n_v)
// interacts with the probe sequentially, so only the total photon number
// matters.
ProbeState evolve_probe(const FockSignal& signal, const ProbeState& probe,
                        const KerrInteraction& kerr);

// Convenience overload for the two-path polarization arrangement.
ProbeState evolve_dual_path(int n_h, int n_v, const ProbeState& probe,
                            const KerrInteraction& kerr);

// Probability that a probe photon survives the residual absorption after
// interacting with n_a signal photons: exp(-n_a * kappa).
double survival_probability(int n_a, const KerrInteraction& kerr);

}  // namespace qndet
