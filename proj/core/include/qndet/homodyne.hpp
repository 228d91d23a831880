#pragma once

#include <cstdint>
#include <vector>

#include "qndet/types.hpp"

namespace qndet {

// Quadrature x(phi) = c*exp(i*phi) + c^dag*exp(-i*phi).  phi = 0 is the X
// quadrature, phi = -pi/2 the Y quadrature (so that <Y> = 2*alpha_c*sin(n*theta)
// for a probe rotated by +n*theta).
struct QuadratureSpec {
  double phi = 0.0;
};

// Expected quadrature value of a coherent state: 2*Re[alpha*exp(i*phi)].
// The quadrature variance of any coherent state is 1 in this convention.
double quadrature_mean(const ProbeState& probe, const QuadratureSpec& spec);

// Distance between the n_a-photon and vacuum Y-quadrature peaks in units of
// the (common) standard deviation: 2*alpha_c*exp(-n_a*kappa)*|sin(n_a*theta)|.
double snr_y(double alpha_c, double theta, int n_a, double kappa = 0.0);

// Probability of misidentifying one of two equally likely Gaussian peaks
// separated by `snr` standard deviations: erfc(snr / (2*sqrt(2))) / 2.
double p_error_binary(double snr);

// Smallest probe amplitude whose single-photon Y displacement reaches
// target_snr: target_snr / (2*sin(theta_max)).  Throws std::domain_error
// unless 0 < theta_max < pi.
double required_alpha(double target_snr, double theta_max);

// Mapping from a target error probability to the design SNR.  `nominal`
// returns the conventional two-digit working value 4.6 when p_error == 0.01
// exactly and falls back to exact inversion otherwise; `exact` always solves
// p = erfc(snr/(2*sqrt(2)))/2 for snr.
enum class SnrConvention { nominal, exact };

double snr_for_p_error(double p_error, SnrConvention convention = SnrConvention::nominal);

// Decision rule for number-resolved detection: expected Y means for
// n = 0..n_max and the n_max midpoint thresholds between neighbours
// (maximum-likelihood for equal-variance Gaussians).
struct DiscriminationPlan {
  std::vector<double> means;
  std::vector<double> thresholds;
  double variance = 1.0;

  int n_max() const { return static_cast<int>(means.size()) - 1; }
};

// Builds the plan from the operating point.  Throws std::domain_error if the
// means are not strictly increasing over 0..n_max (phase shift too large, or
// absorption folding the arc back), since midpoint thresholds are then
// meaningless.
DiscriminationPlan build_plan(double alpha_c, const KerrInteraction& kerr, int n_max);

// Outcome histogram of repeated homodyne shots.
struct ShotCounts {
  std::vector<std::int64_t> decided;  // decided[n] = shots classified as n photons

  std::int64_t total() const;
  std::int64_t errors(int true_n) const;      // shots decided != true_n
  double error_rate(int true_n) const;        // errors / total
};

// Draws `shots` Gaussian homodyne outcomes around means[true_n] (variance
// plan.variance; variance 0 degenerates to the noiseless mean) and classifies
// each against the thresholds.  Fully deterministic for a fixed (seed,
// workers) pair: the shot stream is partitioned across `workers` blocks with
// per-block seeds derived from `seed`, independent of scheduling.
ShotCounts simulate_shots(const DiscriminationPlan& plan, int true_n, std::int64_t shots,
                          std::uint64_t seed, int workers = 1);

// Exact misclassification probability for Gaussian outcomes around
// means[true_n] against the plan thresholds (tail integrals of the two
// neighbouring cells).
double plan_error_probability(const DiscriminationPlan& plan, int true_n);

}  // namespace qndet
