// qndet command-line front end: operating-point design, resource sweeps,
// Monte-Carlo homodyne readout, number-basis cross-checks and the
// single-atom coupling budget.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qndet/qndet.hpp"

namespace {

using nlohmann::ordered_json;
using std::numbers::pi;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitOracle = 4;

std::string fmt_g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Rows of preformatted cells -> RFC-ish CSV (no quoting needed: cells are
// numbers, identifiers or ';'-joined warning text).
std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  for (std::size_t i = 0; i < header.size(); ++i)
    out << header[i] << (i + 1 < header.size() ? "," : "\n");
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i)
      out << row[i] << (i + 1 < row.size() ? "," : "\n");
  return out.str();
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file: " + out_path);
  file << text;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

qndet::MaterialSystem require_material(const std::string& name) {
  auto preset = qndet::material_preset(name);
  if (!preset)
    throw std::invalid_argument("unknown material preset '" + name + "' (available: " +
                                join(qndet::material_preset_names(), ", ") + ")");
  return *preset;
}

// ---------------------------------------------------------------------------
// design

struct DesignOptions {
  double theta_max = 0.0;
  double p_error = 0.01;
  std::optional<double> snr;
  double ratio = 10.0;
  std::string material = "nv-diamond";
  bool exact_snr = false;
  bool si = false;
  std::string format = "structured";
  std::string out;
};

qndet::DesignRequest to_request(const DesignOptions& o, const qndet::MaterialSystem& m) {
  qndet::DesignRequest request;
  request.theta_max = o.theta_max;
  request.p_error = o.p_error;
  request.snr = o.snr;
  request.pump_probe_ratio = o.ratio;
  request.gamma4_over_gamma2 = m.gamma4 / m.gamma2;
  request.omega_sq_t = qndet::omega_a_sq_t(m.eta);
  request.convention =
      o.exact_snr ? qndet::SnrConvention::exact : qndet::SnrConvention::nominal;
  return request;
}

int run_design(const DesignOptions& o) {
  const auto material = require_material(o.material);
  const auto request = to_request(o, material);
  const auto design = qndet::design_minimum(request);

  // Round-trip the solved point through the pulse-accumulated shift as a
  // self-check; at the minimum both parts must equal theta_max.
  const auto shift =
      qndet::theta_kappa(design.n_atoms, request.omega_sq_t, design.drive.alpha_b,
                         design.drive.alpha_c, design.nu_c, 1.0, request.gamma4_over_gamma2);
  const double survival = qndet::survival_probability(1, design.kerr);

  if (o.format == "csv") {
    const std::vector<std::string> header = {
        "material",     "theta_max", "p_error_target", "snr",
        "ratio",        "n_atoms_min", "n_atoms_ceil",  "nu_c_gamma2",
        "alpha_b",      "alpha_c",   "probe_photons",  "theta",
        "kappa",        "survival_1", "p_error",       "warnings"};
    const std::vector<std::vector<std::string>> rows = {{
        material.name, fmt_g(o.theta_max), fmt_g(o.p_error), fmt_g(design.snr),
        fmt_g(o.ratio), fmt_g(design.n_atoms), fmt_g(std::ceil(design.n_atoms)),
        fmt_g(design.nu_c), fmt_g(design.drive.alpha_b), fmt_g(design.drive.alpha_c),
        fmt_g(design.drive.probe_photons()), fmt_g(design.kerr.theta),
        fmt_g(design.kerr.kappa), fmt_g(survival), fmt_g(design.p_error),
        join(design.warnings, "; ")}};
    write_output(to_csv(header, rows), o.out);
    return kExitOk;
  }

  ordered_json report;
  report["command"] = "design";
  report["material"] = material.name;
  report["inputs"] = {{"theta_max", o.theta_max},
                      {"p_error_target", o.p_error},
                      {"snr_convention", o.exact_snr ? "exact" : "nominal"},
                      {"pump_probe_ratio", o.ratio},
                      {"gamma4_over_gamma2", request.gamma4_over_gamma2},
                      {"omega_sq_t_gamma2", request.omega_sq_t}};
  if (o.snr) report["inputs"]["snr_override"] = *o.snr;
  report["design"] = {{"snr", design.snr},
                      {"p_error", design.p_error},
                      {"n_atoms_min", design.n_atoms},
                      {"n_atoms_ceil", std::ceil(design.n_atoms)},
                      {"nu_c_gamma2", design.nu_c},
                      {"alpha_b", design.drive.alpha_b},
                      {"alpha_c", design.drive.alpha_c},
                      {"pump_photons", design.drive.pump_photons()},
                      {"probe_photons", design.drive.probe_photons()},
                      {"theta", design.kerr.theta},
                      {"kappa", design.kerr.kappa},
                      {"single_photon_survival", survival},
                      {"single_photon_absorption", 1.0 - survival}};
  report["consistency"] = {{"theta_roundtrip", shift.theta()},
                           {"kappa_roundtrip", shift.kappa()}};
  if (o.si) {
    report["si"] = {{"gamma2_per_s", material.gamma2},
                    {"gamma4_per_s", material.gamma4},
                    {"nu_c_rad_per_s", design.nu_c * material.gamma2},
                    {"delta_omega_rad_per_s", material.delta_omega},
                    {"interaction_time_s", 3.0 * pi / material.delta_omega},
                    {"lambda_m", material.lambda},
                    {"mode_area_m2", material.mode_area}};
  }
  report["warnings"] = design.warnings;
  write_output(report.dump(2) + "\n", o.out);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepOptions {
  double theta_min = 1e-3;
  double theta_max = 1e-1;
  int points = 100;
  std::string spacing = "log";
  std::vector<double> p_error_list = {1e-2, 1e-3, 1e-4};
  double ratio = 10.0;
  std::string material = "nv-diamond";
  bool exact_snr = false;
  std::string format = "csv";
  std::string out;
};

std::vector<double> make_grid(double lo, double hi, int points, const std::string& spacing) {
  if (points < 1) throw std::invalid_argument("sweep grid needs at least one point");
  if (!(lo > 0.0 && hi < 1.0 && lo <= hi))
    throw std::invalid_argument("sweep grid must satisfy 0 < theta-min <= theta-max < 1");
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(points));
  if (points == 1) {
    grid.push_back(lo);
    return grid;
  }
  if (spacing == "log") {
    const double step = (std::log(hi) - std::log(lo)) / (points - 1);
    for (int i = 0; i < points; ++i) grid.push_back(std::exp(std::log(lo) + step * i));
  } else {
    const double step = (hi - lo) / (points - 1);
    for (int i = 0; i < points; ++i) grid.push_back(lo + step * i);
  }
  grid.front() = lo;  // pin endpoints against rounding drift
  grid.back() = hi;
  return grid;
}

int run_sweep(const SweepOptions& o) {
  if (o.p_error_list.empty())
    throw std::invalid_argument("sweep needs at least one p-error value");
  for (const double p : o.p_error_list)
    if (!(p > 0.0 && p < 0.5))
      throw std::invalid_argument("sweep p-error values must lie in (0, 0.5)");
  const auto material = require_material(o.material);
  const double g = material.gamma4 / material.gamma2;
  const double omega_sq_t = qndet::omega_a_sq_t(material.eta);
  const auto convention =
      o.exact_snr ? qndet::SnrConvention::exact : qndet::SnrConvention::nominal;
  const auto grid = make_grid(o.theta_min, o.theta_max, o.points, o.spacing);

  const std::vector<std::string> header = {"p_error",     "snr",       "theta_max",
                                           "n_atoms_min", "nu_c_gamma2", "alpha_c",
                                           "probe_photons"};
  std::vector<std::vector<std::string>> rows;
  ordered_json json_rows = ordered_json::array();
  for (const double p : o.p_error_list) {
    for (const double theta : grid) {
      qndet::DesignRequest request;
      request.theta_max = theta;
      request.p_error = p;
      request.pump_probe_ratio = o.ratio;
      request.gamma4_over_gamma2 = g;
      request.omega_sq_t = omega_sq_t;
      request.convention = convention;
      const auto design = qndet::design_minimum(request);
      rows.push_back({fmt_g(p), fmt_g(design.snr), fmt_g(theta), fmt_g(design.n_atoms),
                      fmt_g(design.nu_c), fmt_g(design.drive.alpha_c),
                      fmt_g(design.drive.probe_photons())});
      json_rows.push_back({{"p_error", p},
                           {"snr", design.snr},
                           {"theta_max", theta},
                           {"n_atoms_min", design.n_atoms},
                           {"nu_c_gamma2", design.nu_c},
                           {"alpha_c", design.drive.alpha_c},
                           {"probe_photons", design.drive.probe_photons()}});
    }
  }

  if (o.format == "csv") {
    write_output(to_csv(header, rows), o.out);
  } else {
    ordered_json report;
    report["command"] = "sweep";
    report["material"] = material.name;
    report["grid"] = {{"theta_min", o.theta_min},
                      {"theta_max", o.theta_max},
                      {"points", o.points},
                      {"spacing", o.spacing},
                      {"pump_probe_ratio", o.ratio},
                      {"snr_convention", o.exact_snr ? "exact" : "nominal"}};
    report["rows"] = json_rows;
    write_output(report.dump(2) + "\n", o.out);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// montecarlo

struct MonteCarloOptions {
  std::optional<double> alpha_c;
  double theta = 0.0;
  double kappa = 0.0;
  std::optional<double> theta_max;
  double p_error = 0.01;
  std::optional<double> snr;
  double ratio = 10.0;
  std::string material = "nv-diamond";
  bool exact_snr = false;
  int true_n = 1;
  int n_max = 1;
  double variance = 1.0;
  std::int64_t shots = 1000000;
  std::uint64_t seed = 12345;
  int workers = 1;
  std::string format = "structured";
  std::string out;
};

int run_montecarlo(const MonteCarloOptions& o) {
  if (o.alpha_c.has_value() == o.theta_max.has_value())
    throw std::invalid_argument(
        "choose one operating-point route: either --alpha-c with --theta [--kappa], or "
        "--theta-max [--p-error/--snr/--ratio/--material]");

  double alpha_c = 0.0;
  qndet::KerrInteraction kerr;
  if (o.alpha_c) {
    alpha_c = *o.alpha_c;
    kerr = qndet::KerrInteraction{o.theta, o.kappa, +1};
  } else {
    DesignOptions d;
    d.theta_max = *o.theta_max;
    d.p_error = o.p_error;
    d.snr = o.snr;
    d.ratio = o.ratio;
    d.material = o.material;
    d.exact_snr = o.exact_snr;
    const auto design = qndet::design_minimum(to_request(d, require_material(o.material)));
    alpha_c = design.drive.alpha_c;
    kerr = qndet::KerrInteraction{design.kerr.theta, design.kerr.kappa, +1};
  }

  auto plan = qndet::build_plan(alpha_c, kerr, o.n_max);
  plan.variance = o.variance;
  const auto counts = qndet::simulate_shots(plan, o.true_n, o.shots, o.seed, o.workers);
  const double empirical = counts.error_rate(o.true_n);
  const double analytic = qndet::plan_error_probability(plan, o.true_n);
  const double stderr_p =
      analytic > 0.0 ? std::sqrt(analytic * (1.0 - analytic) / static_cast<double>(o.shots))
                     : 0.0;
  const double z = stderr_p > 0.0 ? (empirical - analytic) / stderr_p : 0.0;

  if (o.format == "csv") {
    std::vector<std::string> header = {"true_n", "n_max",  "alpha_c",
                                       "theta",  "kappa",  "variance",
                                       "shots",  "seed",   "workers",
                                       "empirical_error_rate", "analytic_error_rate", "z_score"};
    std::vector<std::string> row = {
        std::to_string(o.true_n), std::to_string(o.n_max), fmt_g(alpha_c),
        fmt_g(kerr.theta),        fmt_g(kerr.kappa),       fmt_g(o.variance),
        std::to_string(o.shots),  std::to_string(o.seed),  std::to_string(o.workers),
        fmt_g(empirical),         fmt_g(analytic),         fmt_g(z)};
    for (std::size_t n = 0; n < counts.decided.size(); ++n) {
      header.push_back("count_" + std::to_string(n));
      row.push_back(std::to_string(counts.decided[n]));
    }
    write_output(to_csv(header, {row}), o.out);
  } else {
    ordered_json report;
    report["command"] = "montecarlo";
    report["plan"] = {{"alpha_c", alpha_c},
                      {"theta", kerr.theta},
                      {"kappa", kerr.kappa},
                      {"n_max", o.n_max},
                      {"means", plan.means},
                      {"thresholds", plan.thresholds},
                      {"variance", plan.variance}};
    report["run"] = {{"true_n", o.true_n},
                     {"shots", o.shots},
                     {"seed", o.seed},
                     {"workers", o.workers}};
    report["counts"] = counts.decided;
    report["empirical_error_rate"] = empirical;
    report["analytic_error_rate"] = analytic;
    report["z_score"] = z;
    write_output(report.dump(2) + "\n", o.out);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// oracle-check

struct OracleOptions {
  std::vector<double> alpha_list = {0.5, 1.0, 2.0, 3.0};
  std::vector<double> theta_list = {0.0, 0.01, 0.1, 0.5};
  std::vector<int> n_list = {0, 1, 2, 3};
  int dim_override = 0;  // 0 = truncation rule
  double tolerance = 1e-6;
  std::string format = "csv";
  std::string out;
};

double l2_diff(const qndet::TruncatedMode& a, const qndet::TruncatedMode& b) {
  double sum = 0.0;
  for (int n = 0; n < a.dim(); ++n)
    sum += std::norm(a.amplitudes[static_cast<std::size_t>(n)] -
                     b.amplitudes[static_cast<std::size_t>(n)]);
  return std::sqrt(sum);
}

int run_oracle_check(const OracleOptions& o) {
  if (o.alpha_list.empty() || o.theta_list.empty() || o.n_list.empty())
    throw std::invalid_argument("oracle-check needs non-empty alpha/theta/n lists");
  for (const double a : o.alpha_list)
    if (!(std::abs(a) <= 4.0))
      throw std::invalid_argument(
          "oracle-check: |alpha| > 4 refused; the truncation rule is only certified up to 4");

  const std::vector<std::string> header = {"alpha",      "theta",     "n_a",
                                           "dim",        "mean_dev_x", "mean_dev_y",
                                           "var_dev_x",  "var_dev_y",  "rotation_dev",
                                           "max_dev",    "pass"};
  std::vector<std::vector<std::string>> rows;
  ordered_json json_rows = ordered_json::array();
  int failures = 0;

  for (const double alpha : o.alpha_list) {
    for (const double theta : o.theta_list) {
      for (const int n_a : o.n_list) {
        const int dim = o.dim_override > 0 ? o.dim_override
                                           : qndet::coherent_truncation_dim(alpha);
        // The override deliberately bypasses the truncation guard so that
        // under-resolved grids show up as reported failures, not exceptions.
        const auto mode = o.dim_override > 0
                              ? qndet::detail::coherent_vector_unchecked(alpha, dim)
                              : qndet::coherent_vector(alpha, dim);
        const auto rotated = qndet::kerr_unitary_apply(mode, n_a, theta, +1);

        const qndet::KerrInteraction kerr{theta, 0.0, +1};
        const auto probe =
            qndet::evolve_probe(qndet::FockSignal(n_a), qndet::ProbeState{alpha}, kerr);
        const auto reference = qndet::detail::coherent_vector_unchecked(probe.alpha, dim);

        const double rotation_dev = l2_diff(rotated, reference);
        const auto mx = qndet::quadrature_moments(rotated, 0.0);
        const auto my = qndet::quadrature_moments(rotated, -pi / 2.0);
        const double mean_dev_x =
            std::abs(mx.mean - qndet::quadrature_mean(probe, qndet::QuadratureSpec{0.0}));
        const double mean_dev_y =
            std::abs(my.mean - qndet::quadrature_mean(probe, qndet::QuadratureSpec{-pi / 2.0}));
        const double var_dev_x = std::abs(mx.variance - 1.0);
        const double var_dev_y = std::abs(my.variance - 1.0);
        const double max_dev = std::max({mean_dev_x, mean_dev_y, var_dev_x, var_dev_y,
                                         rotation_dev});
        const bool pass = max_dev <= o.tolerance;
        if (!pass) ++failures;

        rows.push_back({fmt_g(alpha), fmt_g(theta), std::to_string(n_a),
                        std::to_string(dim), fmt_g(mean_dev_x), fmt_g(mean_dev_y),
                        fmt_g(var_dev_x), fmt_g(var_dev_y), fmt_g(rotation_dev),
                        fmt_g(max_dev), pass ? "1" : "0"});
        json_rows.push_back({{"alpha", alpha},
                             {"theta", theta},
                             {"n_a", n_a},
                             {"dim", dim},
                             {"mean_dev_x", mean_dev_x},
                             {"mean_dev_y", mean_dev_y},
                             {"var_dev_x", var_dev_x},
                             {"var_dev_y", var_dev_y},
                             {"rotation_dev", rotation_dev},
                             {"max_dev", max_dev},
                             {"pass", pass}});
      }
    }
  }

  if (o.format == "csv") {
    write_output(to_csv(header, rows), o.out);
  } else {
    ordered_json report;
    report["command"] = "oracle-check";
    report["tolerance"] = o.tolerance;
    report["dim_override"] = o.dim_override;
    report["cells"] = json_rows;
    report["failures"] = failures;
    write_output(report.dump(2) + "\n", o.out);
  }
  if (failures > 0) {
    std::cerr << "oracle-check: " << failures << " cell(s) exceeded tolerance " << o.tolerance
              << "\n";
    return kExitOracle;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// rabi

struct RabiOptions {
  std::string material = "nv-diamond";
  std::optional<double> oscillator_strength;
  std::optional<double> eta;
  std::optional<double> lambda_nm;
  std::optional<double> bandwidth_mhz;  // delta_omega / 2pi, in MHz
  std::string format = "structured";
  std::string out;
};

ordered_json convention_block(const qndet::MaterialSystem& m, qndet::RateConvention conv) {
  const auto spec = qndet::rabi_spec(m, conv);
  const double omega = std::sqrt(spec.omega_sq);
  return {{"rate_factor", spec.rate_factor},
          {"omega_sq_rad2_per_s2", spec.omega_sq},
          {"omega_rad_per_s", omega},
          {"omega_over_2pi_hz", omega / (2.0 * pi)},
          {"omega_over_gamma2", omega / m.gamma2},
          {"omega_sq_t_gamma2", spec.omega_sq_t}};
}

int run_rabi(const RabiOptions& o) {
  qndet::MaterialSystem m = require_material(o.material);
  if (o.oscillator_strength) m.oscillator_strength = *o.oscillator_strength;
  if (o.eta) m.eta = *o.eta;
  if (o.lambda_nm) m.lambda = *o.lambda_nm * 1e-9;
  if (o.bandwidth_mhz) m.delta_omega = 2.0 * pi * *o.bandwidth_mhz * 1e6;
  m.mode_area = qndet::mode_area(m.lambda, m.eta);  // stays diffraction-limited
  m.validate();

  const auto adopted = qndet::rabi_spec(m, qndet::RateConvention::c_cubed);
  std::vector<std::string> warnings;
  if (std::sqrt(adopted.omega_sq) > m.gamma2)
    warnings.push_back("single-atom Rabi frequency exceeds gamma2; the weak-drive treatment "
                       "is marginal here");

  if (o.format == "csv") {
    const auto printed = qndet::rabi_spec(m, qndet::RateConvention::c_squared);
    const std::vector<std::string> header = {
        "material", "lambda_m", "oscillator_strength", "eta", "gamma2_per_s",
        "delta_omega_rad_per_s", "sigma_m2", "mode_area_m2", "interaction_time_s",
        "rate_factor_c3", "omega_over_2pi_hz_c3", "omega_sq_t_gamma2_c3",
        "rate_factor_c2", "omega_over_2pi_hz_c2", "omega_sq_t_gamma2_c2",
        "omega_sq_t_design_gamma2", "warnings"};
    const std::vector<std::vector<std::string>> rows = {{
        m.name, fmt_g(m.lambda), fmt_g(m.oscillator_strength), fmt_g(m.eta),
        fmt_g(m.gamma2), fmt_g(m.delta_omega), fmt_g(adopted.sigma), fmt_g(m.mode_area),
        fmt_g(adopted.interaction_time), fmt_g(adopted.rate_factor),
        fmt_g(std::sqrt(adopted.omega_sq) / (2.0 * pi)), fmt_g(adopted.omega_sq_t),
        fmt_g(printed.rate_factor), fmt_g(std::sqrt(printed.omega_sq) / (2.0 * pi)),
        fmt_g(printed.omega_sq_t), fmt_g(qndet::omega_a_sq_t(m.eta)),
        join(warnings, "; ")}};
    write_output(to_csv(header, rows), o.out);
    return kExitOk;
  }

  ordered_json report;
  report["command"] = "rabi";
  report["material"] = m.name;
  report["inputs"] = {{"lambda_m", m.lambda},
                      {"oscillator_strength", m.oscillator_strength},
                      {"eta", m.eta},
                      {"gamma2_per_s", m.gamma2},
                      {"delta_omega_rad_per_s", m.delta_omega}};
  report["geometry"] = {{"sigma_m2", qndet::resonant_cross_section(m.lambda)},
                        {"mode_area_m2", m.mode_area},
                        {"sigma_over_eta_area",
                         qndet::resonant_cross_section(m.lambda) / (m.eta * m.mode_area)}};
  report["interaction_time_s"] = adopted.interaction_time;
  report["conventions"] = {
      {"c_cubed", convention_block(m, qndet::RateConvention::c_cubed)},
      {"c_squared", convention_block(m, qndet::RateConvention::c_squared)}};
  report["omega_sq_t_design_gamma2"] = qndet::omega_a_sq_t(m.eta);
  report["warnings"] = warnings;
  write_output(report.dump(2) + "\n", o.out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"design and simulation toolkit for a nonlinear photon-number detector"};
  app.set_version_flag("--version", "qndet 0.1.0");
  app.set_config("--config", "", "read options from an INI file ([subcommand] sections)");
  app.require_subcommand(1);

  const auto format_check = CLI::IsMember({"csv", "structured"});

  DesignOptions design_opts;
  auto* design_cmd =
      app.add_subcommand("design", "solve the minimum-resource operating point");
  design_cmd->add_option("--theta-max", design_opts.theta_max,
                         "single-photon phase shift to operate at, in (0, 1)")
      ->required();
  design_cmd->add_option("--p-error", design_opts.p_error, "target error probability")
      ->capture_default_str();
  design_cmd->add_option("--snr", design_opts.snr, "explicit SNR target (overrides --p-error)");
  design_cmd->add_option("--ratio", design_opts.ratio, "pump/probe photon-number ratio")
      ->capture_default_str();
  design_cmd->add_option("--material", design_opts.material, "material preset")
      ->capture_default_str();
  design_cmd->add_flag("--exact-snr", design_opts.exact_snr,
                       "invert p_error exactly instead of using the nominal 4.6 at 0.01");
  design_cmd->add_flag("--si", design_opts.si, "include an SI-units block in the report");
  design_cmd->add_option("--format", design_opts.format, "csv or structured")
      ->check(format_check)
      ->capture_default_str();
  design_cmd->add_option("--out", design_opts.out, "write the report to a file");

  SweepOptions sweep_opts;
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "sweep theta_max for each target error rate (atoms-vs-phase curves)");
  sweep_cmd->add_option("--theta-min", sweep_opts.theta_min, "grid start")
      ->capture_default_str();
  sweep_cmd->add_option("--theta-max", sweep_opts.theta_max, "grid end")
      ->capture_default_str();
  sweep_cmd->add_option("--points", sweep_opts.points, "grid size")->capture_default_str();
  sweep_cmd->add_option("--spacing", sweep_opts.spacing, "log or linear")
      ->check(CLI::IsMember({"log", "linear"}))
      ->capture_default_str();
  sweep_cmd->add_option("--p-error-list", sweep_opts.p_error_list,
                        "target error probabilities (comma separated)")
      ->delimiter(',')
      ->capture_default_str();
  sweep_cmd->add_option("--ratio", sweep_opts.ratio, "pump/probe photon-number ratio")
      ->capture_default_str();
  sweep_cmd->add_option("--material", sweep_opts.material, "material preset")
      ->capture_default_str();
  sweep_cmd->add_flag("--exact-snr", sweep_opts.exact_snr,
                      "invert p_error exactly instead of using the nominal 4.6 at 0.01");
  sweep_cmd->add_option("--format", sweep_opts.format, "csv or structured")
      ->check(format_check)
      ->capture_default_str();
  sweep_cmd->add_option("--out", sweep_opts.out, "write the table to a file");

  MonteCarloOptions mc_opts;
  auto* mc_cmd = app.add_subcommand(
      "montecarlo", "simulate homodyne readout shots at an operating point");
  mc_cmd->add_option("--alpha-c", mc_opts.alpha_c, "probe amplitude (direct route)");
  mc_cmd->add_option("--theta", mc_opts.theta, "phase shift per photon (direct route)");
  mc_cmd->add_option("--kappa", mc_opts.kappa, "absorption per photon (direct route)")
      ->capture_default_str();
  mc_cmd->add_option("--theta-max", mc_opts.theta_max,
                     "design the operating point first (design route)");
  mc_cmd->add_option("--p-error", mc_opts.p_error, "design route: target error probability")
      ->capture_default_str();
  mc_cmd->add_option("--snr", mc_opts.snr, "design route: explicit SNR target");
  mc_cmd->add_option("--ratio", mc_opts.ratio, "design route: pump/probe ratio")
      ->capture_default_str();
  mc_cmd->add_option("--material", mc_opts.material, "design route: material preset")
      ->capture_default_str();
  mc_cmd->add_flag("--exact-snr", mc_opts.exact_snr, "design route: exact SNR inversion");
  mc_cmd->add_option("--true-n", mc_opts.true_n, "photon number actually present")
      ->capture_default_str();
  mc_cmd->add_option("--n-max", mc_opts.n_max, "largest photon number the plan resolves")
      ->capture_default_str();
  mc_cmd->add_option("--variance", mc_opts.variance,
                     "quadrature variance (0 = noiseless check)")
      ->capture_default_str();
  mc_cmd->add_option("--shots", mc_opts.shots, "number of homodyne shots")
      ->capture_default_str();
  mc_cmd->add_option("--seed", mc_opts.seed, "random seed")->capture_default_str();
  mc_cmd->add_option("--workers", mc_opts.workers, "deterministic shot-stream blocks")
      ->capture_default_str();
  mc_cmd->add_option("--format", mc_opts.format, "csv or structured")
      ->check(format_check)
      ->capture_default_str();
  mc_cmd->add_option("--out", mc_opts.out, "write the report to a file");

  OracleOptions oracle_opts;
  auto* oracle_cmd = app.add_subcommand(
      "oracle-check", "cross-check the analytic probe model against the number-basis "
                      "simulation over a grid of (alpha, theta, n)");
  oracle_cmd->add_option("--alpha-list", oracle_opts.alpha_list, "probe amplitudes, |alpha| <= 4")
      ->delimiter(',')
      ->capture_default_str();
  oracle_cmd->add_option("--theta-list", oracle_opts.theta_list, "phase shifts per photon")
      ->delimiter(',')
      ->capture_default_str();
  oracle_cmd->add_option("--n-list", oracle_opts.n_list, "signal photon numbers")
      ->delimiter(',')
      ->capture_default_str();
  oracle_cmd->add_option("--dim-override", oracle_opts.dim_override,
                         "force a basis size instead of the truncation rule (0 = rule)")
      ->capture_default_str();
  oracle_cmd->add_option("--tolerance", oracle_opts.tolerance, "per-cell deviation budget")
      ->capture_default_str();
  oracle_cmd->add_option("--format", oracle_opts.format, "csv or structured")
      ->check(format_check)
      ->capture_default_str();
  oracle_cmd->add_option("--out", oracle_opts.out, "write the table to a file");

  RabiOptions rabi_opts;
  auto* rabi_cmd = app.add_subcommand(
      "rabi", "single-atom coupling budget for a material preset");
  rabi_cmd->add_option("--material", rabi_opts.material, "material preset")
      ->capture_default_str();
  rabi_cmd->add_option("--oscillator-strength", rabi_opts.oscillator_strength,
                       "override the transition f-value");
  rabi_cmd->add_option("--eta", rabi_opts.eta, "override the refractive index");
  rabi_cmd->add_option("--lambda-nm", rabi_opts.lambda_nm,
                       "override the transition wavelength (nm)");
  rabi_cmd->add_option("--bandwidth-mhz", rabi_opts.bandwidth_mhz,
                       "override the pulse bandwidth delta_omega/2pi (MHz)");
  rabi_cmd->add_option("--format", rabi_opts.format, "csv or structured")
      ->check(format_check)
      ->capture_default_str();
  rabi_cmd->add_option("--out", rabi_opts.out, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (design_cmd->parsed()) return run_design(design_opts);
    if (sweep_cmd->parsed()) return run_sweep(sweep_opts);
    if (mc_cmd->parsed()) return run_montecarlo(mc_opts);
    if (oracle_cmd->parsed()) return run_oracle_check(oracle_opts);
    if (rabi_cmd->parsed()) return run_rabi(rabi_opts);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;  // unreachable with require_subcommand(1)
}
