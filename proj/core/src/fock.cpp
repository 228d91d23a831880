#include "qndet/fock.hpp"

#include <cmath>
#include <stdexcept>

namespace qndet {

double TruncatedMode::norm() const {
  double sum = 0.0;
  for (const auto& a : amplitudes) sum += std::norm(a);
  return std::sqrt(sum);
}

int coherent_truncation_dim(std::complex<double> alpha) {
  const double a = std::abs(alpha);
  return static_cast<int>(std::ceil(a * a + 8.0 * a + 20.0));
}

namespace detail {

TruncatedMode coherent_vector_unchecked(std::complex<double> alpha, int dim) {
  if (dim < 1)
    throw std::invalid_argument("coherent_vector: dimension must be >= 1");

  TruncatedMode mode;
  mode.amplitudes.resize(static_cast<std::size_t>(dim));
  const double a = std::abs(alpha);
  if (a == 0.0) {
    mode.amplitudes[0] = 1.0;
    return mode;
  }

  // exp(-a^2/2) * a^n / sqrt(n!) assembled in log space; the phase advances
  // by arg(alpha) per rung.
  const double log_a = std::log(a);
  const double phase = std::arg(alpha);
  double log_factorial = 0.0;
  for (int n = 0; n < dim; ++n) {
    if (n > 0) log_factorial += std::log(static_cast<double>(n));
    const double log_mag = -0.5 * a * a + n * log_a - 0.5 * log_factorial;
    mode.amplitudes[static_cast<std::size_t>(n)] =
        std::polar(std::exp(log_mag), phase * n);
  }
  return mode;
}

}  // namespace detail

TruncatedMode coherent_vector(std::complex<double> alpha, int dim) {
  const int required = coherent_truncation_dim(alpha);
  if (dim < required)
    throw std::invalid_argument(
        "coherent_vector: dimension below the truncation rule |alpha|^2 + 8|alpha| + 20");
  return detail::coherent_vector_unchecked(alpha, dim);
}

TruncatedMode kerr_unitary_apply(const TruncatedMode& mode, int n_a, double theta,
                                 int phase_sign) {
  if (n_a < 0) throw std::invalid_argument("kerr_unitary_apply: n_a must be >= 0");
  if (phase_sign != +1 && phase_sign != -1)
    throw std::invalid_argument("kerr_unitary_apply: phase_sign must be +1 or -1");

  TruncatedMode out = mode;
  const double step = phase_sign * static_cast<double>(n_a) * theta;
  for (int n = 0; n < out.dim(); ++n)
    out.amplitudes[static_cast<std::size_t>(n)] *= std::polar(1.0, step * n);
  return out;
}

TruncatedMode damped_amplitude_apply(std::complex<double> alpha, int n_a,
                                     const KerrInteraction& kerr, int dim) {
  kerr.validate();
  if (n_a < 0) throw std::invalid_argument("damped_amplitude_apply: n_a must be >= 0");
  const double n = static_cast<double>(n_a);
  const std::complex<double> evolved =
      alpha * std::exp(std::complex<double>(-n * kerr.kappa, kerr.phase_sign * n * kerr.theta));
  return coherent_vector(evolved, dim);
}

QuadratureMoments quadrature_moments(const TruncatedMode& mode, double phi) {
  const int dim = mode.dim();
  if (dim < 1)
    throw std::invalid_argument("quadrature_moments: empty state vector");

  // x(phi)|psi> with the tridiagonal representation: the annihilation part
  // pulls amplitude n+1 down with weight sqrt(n+1)*e^{i phi}, the creation
  // part pushes amplitude n-1 up with weight sqrt(n)*e^{-i phi}.
  const std::complex<double> up = std::exp(std::complex<double>(0.0, phi));
  const std::complex<double> down = std::conj(up);
  std::vector<std::complex<double>> applied(static_cast<std::size_t>(dim));
  for (int n = 0; n < dim; ++n) {
    std::complex<double> v{0.0, 0.0};
    if (n + 1 < dim)
      v += up * std::sqrt(static_cast<double>(n + 1)) *
           mode.amplitudes[static_cast<std::size_t>(n + 1)];
    if (n > 0)
      v += down * std::sqrt(static_cast<double>(n)) *
           mode.amplitudes[static_cast<std::size_t>(n - 1)];
    applied[static_cast<std::size_t>(n)] = v;
  }

  std::complex<double> first{0.0, 0.0};
  double second = 0.0;
  for (int n = 0; n < dim; ++n) {
    first += std::conj(mode.amplitudes[static_cast<std::size_t>(n)]) *
             applied[static_cast<std::size_t>(n)];
    second += std::norm(applied[static_cast<std::size_t>(n)]);  // <x psi|x psi>
  }
  const double mean = first.real();
  return QuadratureMoments{mean, second - mean * mean};
}

}  // namespace qndet
