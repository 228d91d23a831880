#include <benchmark/benchmark.h>

#include <complex>
#include <numbers>

#include "qndet/qndet.hpp"

namespace {

void BM_evolve_probe(benchmark::State& state) {
  const qndet::KerrInteraction kerr{0.01, 0.01, +1};
  const qndet::ProbeState probe{{230.0, 0.0}};
  const qndet::FockSignal signal(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qndet::evolve_probe(signal, probe, kerr));
  }
}
BENCHMARK(BM_evolve_probe);

void BM_theta_kappa(benchmark::State& state) {
  const double omega_sq_t = qndet::omega_a_sq_t(2.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        qndet::theta_kappa(800.0, omega_sq_t, 72.0, 23.0, 11.0, 1.0, 1.0));
  }
}
BENCHMARK(BM_theta_kappa);

void BM_design_minimum(benchmark::State& state) {
  qndet::DesignRequest request;
  request.theta_max = 0.01;
  request.omega_sq_t = qndet::omega_a_sq_t(2.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qndet::design_minimum(request));
  }
}
BENCHMARK(BM_design_minimum);

void BM_snr_inversion(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        qndet::snr_for_p_error(1e-3, qndet::SnrConvention::exact));
  }
}
BENCHMARK(BM_snr_inversion);

void BM_coherent_vector(benchmark::State& state) {
  const std::complex<double> alpha{static_cast<double>(state.range(0)), 0.0};
  const int dim = qndet::coherent_truncation_dim(alpha);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qndet::coherent_vector(alpha, dim));
  }
  state.SetComplexityN(dim);
}
BENCHMARK(BM_coherent_vector)->Arg(1)->Arg(2)->Arg(3)->Complexity(benchmark::oN);

void BM_quadrature_moments(benchmark::State& state) {
  const auto mode = qndet::coherent_vector(3.0, 53);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qndet::quadrature_moments(mode, -std::numbers::pi / 2));
  }
}
BENCHMARK(BM_quadrature_moments);

void BM_simulate_shots(benchmark::State& state) {
  const auto plan =
      qndet::build_plan(230.0, qndet::KerrInteraction{0.01, 0.0, +1}, 1);
  const auto shots = static_cast<std::int64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qndet::simulate_shots(plan, 1, shots, 42u, 1));
  }
  state.SetItemsProcessed(state.iterations() * shots);
}
BENCHMARK(BM_simulate_shots)->Arg(10000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
