#include "qndet/homodyne.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

#include "qndet/math.hpp"

namespace qndet {
namespace {

// Stateless 64-bit mixer; used only to derive independent per-worker seeds.
std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic unit-variance Gaussian sampler: Box-Muller over mt19937_64
// uniforms.  std::normal_distribution is avoided on purpose - its algorithm
// is implementation-defined, and shot streams here must be reproducible
// bit-for-bit for a fixed seed.
class GaussianSampler {
 public:
  explicit GaussianSampler(std::uint64_t seed) : rng_(seed) {}

  double operator()() {
    const double u1 = 1.0 - to_unit(rng_());  // (0, 1]: keeps log() finite
    const double u2 = to_unit(rng_());        // [0, 1)
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  static double to_unit(std::uint64_t x) { return static_cast<double>(x >> 11) * 0x1.0p-53; }

  std::mt19937_64 rng_;
};

// Number of thresholds strictly below y = index of the decided cell.
int classify(const std::vector<double>& thresholds, double y) {
  return static_cast<int>(std::lower_bound(thresholds.begin(), thresholds.end(), y) -
                          thresholds.begin());
}

void check_plan(const DiscriminationPlan& plan) {
  if (plan.means.size() < 2 || plan.thresholds.size() + 1 != plan.means.size())
    throw std::invalid_argument("DiscriminationPlan: plan is not built (means/thresholds mismatch)");
  if (!(plan.variance >= 0.0))
    throw std::invalid_argument("DiscriminationPlan: variance must be >= 0");
}

}  // namespace

double quadrature_mean(const ProbeState& probe, const QuadratureSpec& spec) {
  return 2.0 * (probe.alpha * std::exp(std::complex<double>(0.0, spec.phi))).real();
}

double snr_y(double alpha_c, double theta, int n_a, double kappa) {
  if (!(alpha_c >= 0.0)) throw std::invalid_argument("snr_y: alpha_c must be >= 0");
  if (n_a < 0) throw std::invalid_argument("snr_y: n_a must be >= 0");
  if (!(kappa >= 0.0)) throw std::invalid_argument("snr_y: kappa must be >= 0");
  const double n = static_cast<double>(n_a);
  return 2.0 * alpha_c * std::exp(-n * kappa) * std::abs(std::sin(n * theta));
}

double p_error_binary(double snr) {
  if (!(snr >= 0.0)) throw std::invalid_argument("p_error_binary: snr must be >= 0");
  return 0.5 * std::erfc(snr / (2.0 * std::numbers::sqrt2));
}

double required_alpha(double target_snr, double theta_max) {
  if (!(target_snr > 0.0))
    throw std::domain_error("required_alpha: target snr must be > 0");
  if (!(theta_max > 0.0) || !(theta_max < std::numbers::pi))
    throw std::domain_error("required_alpha: theta_max must lie in (0, pi)");
  return target_snr / (2.0 * std::sin(theta_max));
}

double snr_for_p_error(double p_error, SnrConvention convention) {
  if (!(p_error > 0.0 && p_error < 0.5))
    throw std::domain_error("snr_for_p_error: p_error must lie in (0, 0.5)");
  if (convention == SnrConvention::nominal && p_error == 0.01) return 4.6;
  return 2.0 * std::numbers::sqrt2 * erfc_inv(2.0 * p_error);
}

DiscriminationPlan build_plan(double alpha_c, const KerrInteraction& kerr, int n_max) {
  kerr.validate();
  if (!(alpha_c >= 0.0)) throw std::invalid_argument("build_plan: alpha_c must be >= 0");
  if (n_max < 1) throw std::invalid_argument("build_plan: n_max must be >= 1");

  DiscriminationPlan plan;
  plan.means.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    const double nd = static_cast<double>(n);
    plan.means.push_back(2.0 * alpha_c * std::exp(-nd * kerr.kappa) * std::sin(nd * kerr.theta));
  }
  plan.thresholds.reserve(static_cast<std::size_t>(n_max));
  for (int n = 0; n < n_max; ++n) {
    if (!(plan.means[n + 1] > plan.means[n]))
      throw std::domain_error(
          "build_plan: quadrature means are not strictly increasing up to n_max; "
          "the operating point cannot resolve neighbouring photon numbers");
    plan.thresholds.push_back(0.5 * (plan.means[n] + plan.means[n + 1]));
  }
  return plan;
}

std::int64_t ShotCounts::total() const {
  std::int64_t sum = 0;
  for (const std::int64_t c : decided) sum += c;
  return sum;
}

std::int64_t ShotCounts::errors(int true_n) const {
  std::int64_t wrong = 0;
  for (std::size_t n = 0; n < decided.size(); ++n)
    if (static_cast<int>(n) != true_n) wrong += decided[n];
  return wrong;
}

double ShotCounts::error_rate(int true_n) const {
  const std::int64_t all = total();
  if (all == 0) return 0.0;
  return static_cast<double>(errors(true_n)) / static_cast<double>(all);
}

ShotCounts simulate_shots(const DiscriminationPlan& plan, int true_n, std::int64_t shots,
                          std::uint64_t seed, int workers) {
  check_plan(plan);
  if (true_n < 0 || true_n > plan.n_max())
    throw std::invalid_argument("simulate_shots: true_n outside the plan range");
  if (shots < 1) throw std::invalid_argument("simulate_shots: shots must be >= 1");
  if (workers < 1) throw std::invalid_argument("simulate_shots: workers must be >= 1");

  const double mu = plan.means[static_cast<std::size_t>(true_n)];
  const double sigma = std::sqrt(plan.variance);
  const int cells = static_cast<int>(plan.means.size());

  // Fixed partition of the shot stream: block i gets shots/workers (+1 for
  // the first shots%workers blocks) draws from its own derived seed, so the
  // histogram is identical no matter how the blocks are scheduled.
  std::uint64_t derive_state = seed;
  std::vector<std::uint64_t> block_seeds(static_cast<std::size_t>(workers));
  for (auto& s : block_seeds) s = splitmix64(derive_state);

  const std::int64_t base = shots / workers;
  const std::int64_t extra = shots % workers;

  std::vector<std::vector<std::int64_t>> partial(
      static_cast<std::size_t>(workers), std::vector<std::int64_t>(cells, 0));

  auto run_block = [&](int block) {
    const std::int64_t count = base + (block < extra ? 1 : 0);
    GaussianSampler gauss(block_seeds[static_cast<std::size_t>(block)]);
    auto& hist = partial[static_cast<std::size_t>(block)];
    for (std::int64_t i = 0; i < count; ++i) {
      const double y = mu + sigma * gauss();
      ++hist[static_cast<std::size_t>(classify(plan.thresholds, y))];
    }
  };

  if (workers == 1) {
    run_block(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int b = 0; b < workers; ++b) pool.emplace_back(run_block, b);
    for (auto& t : pool) t.join();
  }

  ShotCounts counts;
  counts.decided.assign(cells, 0);
  for (const auto& hist : partial)
    for (int n = 0; n < cells; ++n) counts.decided[static_cast<std::size_t>(n)] += hist[n];
  return counts;
}

double plan_error_probability(const DiscriminationPlan& plan, int true_n) {
  check_plan(plan);
  if (true_n < 0 || true_n > plan.n_max())
    throw std::invalid_argument("plan_error_probability: true_n outside the plan range");
  if (plan.variance == 0.0) return 0.0;

  const double mu = plan.means[static_cast<std::size_t>(true_n)];
  const double sigma = std::sqrt(plan.variance);
  double p = 0.0;
  if (true_n > 0) {
    const double t_lo = plan.thresholds[static_cast<std::size_t>(true_n) - 1];
    p += 0.5 * std::erfc((mu - t_lo) / (sigma * std::numbers::sqrt2));
  }
  if (true_n < plan.n_max()) {
    const double t_hi = plan.thresholds[static_cast<std::size_t>(true_n)];
    p += 0.5 * std::erfc((t_hi - mu) / (sigma * std::numbers::sqrt2));
  }
  return p;
}

}  // namespace qndet
