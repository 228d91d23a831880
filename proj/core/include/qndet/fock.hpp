#pragma once

#include <complex>
#include <vector>

#include "qndet/types.hpp"

namespace qndet {

// State vector of a single bosonic mode in the number basis, truncated to
// dim() levels.
struct TruncatedMode {
  std::vector<std::complex<double>> amplitudes;

  int dim() const { return static_cast<int>(amplitudes.size()); }
  double norm() const;
};

// Smallest safe truncation for a coherent state of amplitude alpha:
// ceil(|alpha|^2 + 8*|alpha| + 20).  Keeps the Poisson tail below ~1e-12
// over the amplitudes this toolkit works with.
int coherent_truncation_dim(std::complex<double> alpha);

// Coherent-state coefficients exp(-|a|^2/2) * a^n / sqrt(n!), evaluated in
// log space to stay finite for large photon numbers.  Refuses dimensions
// below the truncation rule; use detail::coherent_vector_unchecked to study
// truncation error deliberately.
TruncatedMode coherent_vector(std::complex<double> alpha, int dim);

namespace detail {
TruncatedMode coherent_vector_unchecked(std::complex<double> alpha, int dim);
}

// Diagonal cross-Kerr unitary conditioned on n_a signal photons:
// amplitudes[n] *= exp(i * phase_sign * n_a * n * theta).  Norm-preserving.
TruncatedMode kerr_unitary_apply(const TruncatedMode& mode, int n_a, double theta,
                                 int phase_sign = +1);

// Probe state after the damped interaction, built directly from the evolved
// amplitude alpha * exp(-n_a*kappa + i*phase_sign*n_a*theta).  Same closed
// form the analytic layer uses, but constructed independently in the number
// basis so the two can be cross-checked.
TruncatedMode damped_amplitude_apply(std::complex<double> alpha, int n_a,
                                     const KerrInteraction& kerr, int dim);

// First two moments of the quadrature x(phi) = c e^{i phi} + c^dag e^{-i phi},
// computed with the tridiagonal matrix representation (<n|x|n+1> = sqrt(n+1)
// e^{i phi}).
struct QuadratureMoments {
  double mean = 0.0;
  double variance = 0.0;
};

QuadratureMoments quadrature_moments(const TruncatedMode& mode, double phi);

}  // namespace qndet
