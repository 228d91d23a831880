// Acceptance gate for the detector toolkit.  Each numbered check prints one
// [PASS]/[FAIL] line with the measured quantities; the process exit code is
// the number of failed checks.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qndet/qndet.hpp"

#ifndef QNDET_CLI_PATH
#error "QNDET_CLI_PATH must point at the built qndet binary"
#endif

namespace {

using std::numbers::pi;

int checks_run = 0;
int checks_failed = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail) {
  ++checks_run;
  if (!ok) ++checks_failed;
  std::printf("[%s] %02d %s: %s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
              detail.c_str());
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string run_cli_capture(const std::string& args, int& exit_code) {
  const std::string cmd = std::string(QNDET_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    exit_code = -1;
    return {};
  }
  std::string out;
  char buffer[4096];
  while (std::size_t got = std::fread(buffer, 1, sizeof buffer, pipe)) out.append(buffer, got);
  const int status = pclose(pipe);
  exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

// --------------------------------------------------------------------------

void check_binary_discrimination() {
  const auto start = std::chrono::steady_clock::now();
  const double analytic = qndet::p_error_binary(4.6);
  const bool analytic_ok = std::fabs(analytic - 1.078e-2) <= 1e-4;

  const double alpha = qndet::required_alpha(4.6, 0.01);
  const auto plan = qndet::build_plan(alpha, qndet::KerrInteraction{0.01, 0.0, +1}, 1);
  const auto counts = qndet::simulate_shots(plan, 1, 1000000, 20260819u, 4);
  const double empirical = counts.error_rate(1);
  const double deviation = std::fabs(empirical - analytic);
  const bool mc_ok = deviation <= 3.1e-4;

  const double elapsed = seconds_since(start);
  std::ostringstream detail;
  detail << "analytic " << analytic << " (|d|=" << std::fabs(analytic - 1.078e-2)
         << " <= 1e-4), mc rate " << empirical << " (|d|=" << deviation
         << " <= 3.1e-4), " << elapsed << " s < 5 s";
  report(1, "binary discrimination at snr 4.6", analytic_ok && mc_ok && elapsed < 5.0,
         detail.str());
}

qndet::DesignRequest nv_request(double theta_max) {
  qndet::DesignRequest request;
  request.theta_max = theta_max;
  request.p_error = 0.01;
  request.pump_probe_ratio = 10.0;
  request.gamma4_over_gamma2 = 1.0;
  request.omega_sq_t = qndet::omega_a_sq_t(2.4);
  return request;
}

void check_design_point_a() {
  const auto d = qndet::design_minimum(nv_request(0.01));
  const bool atoms_ok = d.n_atoms >= 1350.0 && d.n_atoms <= 1700.0;
  const bool nu_ok = std::fabs(d.nu_c - 1.1) <= 1e-12;
  std::ostringstream detail;
  detail << "n_atoms " << d.n_atoms << " in [1350, 1700], nu_c " << d.nu_c
         << " (|d|=" << std::fabs(d.nu_c - 1.1) << " <= 1e-12)";
  report(2, "design point at theta 0.01", atoms_ok && nu_ok, detail.str());
}

void check_design_point_b() {
  const auto d = qndet::design_minimum(nv_request(0.1));
  const double n_c = d.drive.probe_photons();
  const double absorption = 1.0 - std::exp(-d.kerr.kappa);
  const bool atoms_ok = d.n_atoms >= 140.0 && d.n_atoms <= 170.0;
  const bool probe_ok = n_c >= 500.0 && n_c <= 600.0;
  const bool kappa_ok = d.kerr.kappa == d.kerr.theta;
  const bool absorption_ok = absorption >= 0.09 && absorption <= 0.105;
  std::ostringstream detail;
  detail << "n_atoms " << d.n_atoms << " in [140, 170], n_c " << n_c
         << " in [500, 600], absorption " << absorption << " in [0.09, 0.105], kappa==theta "
         << (kappa_ok ? "yes" : "no");
  report(3, "design point at theta 0.1", atoms_ok && probe_ok && kappa_ok && absorption_ok,
         detail.str());
}

void check_design_point_c() {
  const auto shift = qndet::theta_kappa(800.0, qndet::omega_a_sq_t(2.4), std::sqrt(5290.0),
                                        std::sqrt(529.0), 11.0, 1.0, 1.0);
  const double ratio = shift.kappa() / shift.theta();
  const double absorption = 1.0 - std::exp(-shift.kappa());
  const bool theta_ok = shift.theta() >= 0.10 && shift.theta() <= 0.11;
  const bool ratio_ok = std::fabs(ratio - 0.1) <= 1e-12;
  const bool absorption_ok = absorption <= 0.013;
  std::ostringstream detail;
  detail << "theta " << shift.theta() << " in [0.10, 0.11], kappa/theta " << ratio
         << " (|d|=" << std::fabs(ratio - 0.1) << " <= 1e-12), absorption " << absorption
         << " <= 0.013";
  report(4, "detuned 800-atom point", theta_ok && ratio_ok && absorption_ok, detail.str());
}

void check_kappa_theta_identity() {
  std::mt19937_64 rng(7u);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int draw = 0; draw < 50; ++draw) {
    const double theta_max = std::exp(std::log(1e-3) + unit(rng) * std::log(0.9 / 1e-3));
    const double p_error = std::exp(std::log(1e-6) + unit(rng) * std::log(0.3 / 1e-6));
    const double ratio = std::exp(std::log(0.2) + unit(rng) * std::log(200.0 / 0.2));
    qndet::DesignRequest request;
    request.theta_max = theta_max;
    request.p_error = p_error;
    request.pump_probe_ratio = ratio;
    request.omega_sq_t = qndet::omega_a_sq_t(2.4);
    const auto d = qndet::design_minimum(request);
    const auto shift = qndet::theta_kappa(d.n_atoms, request.omega_sq_t, d.drive.alpha_b,
                                          d.drive.alpha_c, d.nu_c, 1.0, 1.0);
    worst = std::max(worst, std::fabs(shift.kappa() - shift.theta()) / shift.theta());
    worst = std::max(worst, std::fabs(shift.theta() - theta_max) / theta_max);
  }
  std::ostringstream detail;
  detail << "50 random operating points, worst |kappa-theta|/theta " << worst << " <= 1e-9";
  report(5, "matched loss identity", worst <= 1e-9, detail.str());
}

void check_sweep_constancy() {
  const auto start = std::chrono::steady_clock::now();
  int exit_code = -1;
  const std::string csv = run_cli_capture("sweep --format csv", exit_code);
  const double elapsed = seconds_since(start);

  bool parse_ok = exit_code == 0;
  std::vector<double> p_col, theta_col, n_col, nu_col;
  std::istringstream lines(csv);
  std::string line;
  bool header = true;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      parse_ok = parse_ok && line.rfind("p_error,snr,theta_max,n_atoms_min", 0) == 0;
      continue;
    }
    std::istringstream fields(line);
    std::string cell;
    std::vector<double> row;
    while (std::getline(fields, cell, ',')) row.push_back(std::stod(cell));
    if (row.size() < 7) {
      parse_ok = false;
      break;
    }
    p_col.push_back(row[0]);
    theta_col.push_back(row[2]);
    n_col.push_back(row[3]);
    nu_col.push_back(row[4]);
  }
  parse_ok = parse_ok && p_col.size() == 300;  // three 100-point curves

  double worst_product_dev = 0.0;
  double worst_nu_dev = 0.0;
  bool ordering_ok = true;
  if (parse_ok) {
    for (int curve = 0; curve < 3; ++curve) {
      const std::size_t offset = static_cast<std::size_t>(curve) * 100;
      const double product0 = n_col[offset] * theta_col[offset];
      for (std::size_t i = 0; i < 100; ++i) {
        const double product = n_col[offset + i] * theta_col[offset + i];
        worst_product_dev =
            std::max(worst_product_dev, std::fabs(product - product0) / product0);
        worst_nu_dev = std::max(worst_nu_dev, std::fabs(nu_col[offset + i] - 1.1));
        if (curve > 0 && !(n_col[offset + i] > n_col[offset - 100 + i])) ordering_ok = false;
      }
    }
  }
  std::ostringstream detail;
  detail << "300 rows, worst |N*theta| drift " << worst_product_dev
         << " <= 1e-9, curves ordered by error target "
         << (ordering_ok ? "yes" : "no") << ", worst |nu_c-1.1| " << worst_nu_dev << ", "
         << elapsed << " s < 1 s";
  report(6, "resource sweep constancy",
         parse_ok && worst_product_dev <= 1e-9 && ordering_ok && worst_nu_dev <= 1e-12 &&
             elapsed < 1.0,
         detail.str());
}

void check_oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<double> alphas = {0.5, 1.0, 2.0, 3.0};
  const std::vector<double> thetas = {0.0, 0.01, 0.1, 0.5, pi / 2};
  double worst_moment_dev = 0.0;
  double worst_rotation_dev = 0.0;
  for (const double alpha : alphas) {
    const int dim = qndet::coherent_truncation_dim(alpha);
    const auto base = qndet::coherent_vector(alpha, dim);
    for (const double theta : thetas) {
      for (int n_a = 0; n_a <= 3; ++n_a) {
        const auto rotated = qndet::kerr_unitary_apply(base, n_a, theta, +1);
        const auto probe =
            qndet::evolve_probe(qndet::FockSignal(n_a), qndet::ProbeState{alpha},
                                qndet::KerrInteraction{theta, 0.0, +1});
        for (const double phi : {0.0, -pi / 2}) {
          const auto moments = qndet::quadrature_moments(rotated, phi);
          const double mean_ref =
              qndet::quadrature_mean(probe, qndet::QuadratureSpec{phi});
          worst_moment_dev = std::max(worst_moment_dev, std::fabs(moments.mean - mean_ref));
          worst_moment_dev = std::max(worst_moment_dev, std::fabs(moments.variance - 1.0));
        }
        const auto reference = qndet::detail::coherent_vector_unchecked(probe.alpha, dim);
        double sum = 0.0;
        for (int n = 0; n < dim; ++n)
          sum += std::norm(rotated.amplitudes[static_cast<std::size_t>(n)] -
                           reference.amplitudes[static_cast<std::size_t>(n)]);
        worst_rotation_dev = std::max(worst_rotation_dev, std::sqrt(sum));
      }
    }
  }
  const double elapsed = seconds_since(start);
  std::ostringstream detail;
  detail << "80 grid cells, worst moment deviation " << worst_moment_dev
         << " <= 1e-6, worst rotation norm " << worst_rotation_dev << " <= 1e-8, " << elapsed
         << " s < 10 s";
  report(7, "number-basis oracle equivalence",
         worst_moment_dev <= 1e-6 && worst_rotation_dev <= 1e-8 && elapsed < 10.0,
         detail.str());
}

void check_snr_doubling() {
  const double ratio =
      qndet::snr_y(230.0, 0.01, 2, 0.0) / qndet::snr_y(230.0, 0.01, 1, 0.0);
  const double exact = 2.0 * std::cos(0.01);
  const bool coarse_ok = std::fabs(ratio - 2.0) / 2.0 <= 0.005;
  const bool exact_ok = std::fabs(ratio - exact) <= 1e-9;
  std::ostringstream detail;
  detail << "snr(2)/snr(1) " << ratio << ", |ratio-2|/2 " << std::fabs(ratio - 2.0) / 2.0
         << " <= 0.005, |ratio-2cos(0.01)| " << std::fabs(ratio - exact) << " <= 1e-9";
  report(8, "two-photon snr doubling", coarse_ok && exact_ok, detail.str());
}

void check_rate_pulse_consistency() {
  std::mt19937_64 rng(2026u);
  std::uniform_real_distribution<double> unit(0.1, 5.0);
  double worst = 0.0;
  for (int draw = 0; draw < 100; ++draw) {
    const double n_atoms = 100.0 * unit(rng);
    const double omega_a_sq = unit(rng);
    const double omega_bc_sq = unit(rng);
    const double t = unit(rng);
    const double alpha_b = 3.0 * unit(rng);
    const double alpha_c = unit(rng);
    const double nu_c = unit(rng);
    const double gamma2 = unit(rng);
    const double gamma4 = unit(rng);
    const int n_a = 1 + draw % 4;
    const auto rate = qndet::compute_w(n_atoms, omega_a_sq, omega_bc_sq, omega_bc_sq, n_a,
                                       alpha_b * alpha_b, alpha_c * alpha_c, nu_c, gamma2,
                                       gamma4);
    const auto pulse = qndet::theta_kappa(n_atoms, omega_a_sq * t, alpha_b, alpha_c, nu_c,
                                          gamma2, gamma4);
    const std::complex<double> lhs = rate.value * t;
    const std::complex<double> rhs =
        static_cast<double>(n_a) * (alpha_c * alpha_c) * pulse.value;
    worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
  }
  std::ostringstream detail;
  detail << "100 random draws, worst relative error " << worst << " <= 1e-12";
  report(9, "rate/pulse shift consistency", worst <= 1e-12, detail.str());
}

void check_rabi_window() {
  const auto spec = qndet::rabi_spec(qndet::nv_diamond(), qndet::RateConvention::c_cubed);
  const double mhz = std::sqrt(spec.omega_sq) / (2.0 * pi) / 1e6;
  std::ostringstream detail;
  detail << "omega/2pi " << mhz << " MHz in [2, 6]";
  report(10, "single-atom coupling window", mhz >= 2.0 && mhz <= 6.0, detail.str());
}

}  // namespace

int main() {
  check_binary_discrimination();
  check_design_point_a();
  check_design_point_b();
  check_design_point_c();
  check_kappa_theta_identity();
  check_sweep_constancy();
  check_oracle_equivalence();
  check_snr_doubling();
  check_rate_pulse_consistency();
  check_rabi_window();
  std::printf("%d/%d acceptance checks passed\n", checks_run - checks_failed, checks_run);
  return checks_failed;
}
