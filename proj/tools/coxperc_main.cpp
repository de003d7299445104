// Command-line front end: growth series, spectral bounds, phase certificates,
// exact walk oracles and percolation sweeps for reflection groups given by a
// Coxeter matrix (JSON file or named built-in fixture).

#include <algorithm>
#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "coxperc/cayley_ball.hpp"
#include "coxperc/coxeter_matrix.hpp"
#include "coxperc/fixtures.hpp"
#include "coxperc/growth_series.hpp"
#include "coxperc/nerve.hpp"
#include "coxperc/percolation.hpp"
#include "coxperc/phase_cert.hpp"
#include "coxperc/report.hpp"
#include "coxperc/walk_bounds.hpp"

namespace {

using coxperc::kExitOk;
using coxperc::kExitResource;
using coxperc::kExitUsage;
using coxperc::kExitValidation;
using nlohmann::json;

// Thrown for failures that map to a specific process exit code.
struct CliError : std::runtime_error {
  int code;
  CliError(int code, const std::string& msg) : std::runtime_error(msg), code(code) {}
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError(kExitUsage, "cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// `input` is either a built-in fixture name or a path to a JSON file.
coxperc::CoxeterMatrix resolve_input(const std::string& input) {
  for (const std::string& name : coxperc::fixture_names())
    if (name == input) return coxperc::fixture_by_name(input);

  std::string text = read_file(input);
  try {
    json::parse(text);
  } catch (const json::exception& e) {
    throw CliError(kExitUsage, std::string("input is not valid JSON: ") + e.what());
  }
  try {
    return coxperc::parse_coxeter_input(text);
  } catch (const std::invalid_argument& e) {
    throw CliError(kExitValidation, std::string("invalid Coxeter input: ") + e.what());
  }
}

// "a:b:steps" -> `steps` evenly spaced probabilities from a to b inclusive.
std::vector<double> parse_p_grid(const std::string& text) {
  double a = 0.0, b = 1.0;
  int steps = 0;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> a >> c1 >> b >> c2 >> steps) || c1 != ':' || c2 != ':' || !(in >> std::ws).eof())
    throw CliError(kExitUsage, "--p-grid expects a:b:steps, got: " + text);
  if (!(0.0 <= a && a <= b && b <= 1.0) || steps < 1)
    throw CliError(kExitUsage, "--p-grid needs 0 <= a <= b <= 1 and steps >= 1");
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i)
    grid.push_back(steps == 1 ? a : a + (b - a) * i / (steps - 1));
  return grid;
}

coxperc::PercMode parse_mode(const std::string& text) {
  if (text == "bond") return coxperc::PercMode::bond;
  if (text == "site") return coxperc::PercMode::site;
  throw CliError(kExitUsage, "--mode must be bond or site, got: " + text);
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

coxperc::CayleyBall build_ball_or_die(const coxperc::CoxeterMatrix& m, int radius,
                                      std::size_t max_ball_size) {
  coxperc::BallOptions opt;
  opt.radius = radius;
  opt.max_vertices = max_ball_size;
  try {
    return coxperc::build_ball(m, opt);
  } catch (const coxperc::BallCapExceeded& e) {
    throw CliError(kExitResource, e.what());
  }
}

int run_analyze(const coxperc::CoxeterMatrix& m, const coxperc::ReportOptions& opt) {
  coxperc::ReportResult result = coxperc::run_report(m, opt);
  emit(result.doc);
  return result.exit_code;
}

int run_growth(const coxperc::CoxeterMatrix& m, int coeffs) {
  coxperc::Nerve nerve = coxperc::build_nerve(m);
  coxperc::InverseGrowth ig;
  try {
    ig = coxperc::steinberg_inverse_growth(m, nerve);
  } catch (const std::invalid_argument& e) {
    emit(json{{"schema_version", coxperc::kReportSchemaVersion}, {"error", e.what()}});
    return kExitValidation;
  }
  coxperc::SeriesCoefficients series = coxperc::ball_size_series(ig, std::max(coeffs, 0));
  coxperc::GrowthRateResult rate = coxperc::growth_rate(ig);

  json sphere = json::array(), ball = json::array();
  for (const auto& v : series.sphere) sphere.push_back(v.get_str());
  for (const auto& v : series.ball) ball.push_back(v.get_str());
  json p = json::array(), q = json::array();
  for (int i = 0; i <= ig.p.degree(); ++i) p.push_back(ig.p.coeff(i).get_str());
  for (int i = 0; i <= ig.q.degree(); ++i) q.push_back(ig.q.coeff(i).get_str());

  emit(json{{"schema_version", coxperc::kReportSchemaVersion},
            {"k", ig.k},
            {"inverse_numerator", p},
            {"inverse_denominator", q},
            {"sphere_sizes", sphere},
            {"ball_sizes", ball},
            {"growth_rate",
             {{"has_root", rate.has_root},
              {"t_star", rate.t_star},
              {"rate", rate.rate},
              {"method", rate.method}}}});
  return kExitOk;
}

int run_bounds(const coxperc::CoxeterMatrix& m, int radius, std::size_t max_ball_size,
               double c1, double c2, double c3) {
  coxperc::ReportOptions opt;
  opt.radius = radius;
  opt.max_ball_size = max_ball_size;
  opt.c1 = c1;
  opt.c2 = c2;
  opt.c3 = c3;
  opt.oracle_nmax = -1;
  coxperc::ReportResult result = coxperc::run_report(m, opt);
  json doc{{"schema_version", coxperc::kReportSchemaVersion},
           {"bounds", result.doc["bounds"]}};
  emit(doc);
  // The trimmed view still honors the resource cap, but a certificate error
  // is not this command's concern.
  return result.exit_code == kExitResource ? kExitResource : kExitOk;
}

int run_certify(const coxperc::CoxeterMatrix& m) {
  json doc{{"schema_version", coxperc::kReportSchemaVersion}};
  try {
    coxperc::PhaseCertificate cert = coxperc::certify_phase(m);
    json candidates = json::array();
    for (const auto& c : cert.candidates) {
      candidates.push_back({{"variant", coxperc::rho_variant_name(c.variant)},
                            {"valid", c.valid},
                            {"rho", c.rho},
                            {"gamma_star_applied", c.gamma_applied},
                            {"b1", c.b1},
                            {"note", c.note}});
    }
    json audit = json::array();
    for (const auto& c : cert.audit)
      audit.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    doc["certificate"] = {
        {"k", cert.k},
        {"ra_compact_validated", cert.ra_compact_validated},
        {"chosen_variant", coxperc::rho_variant_name(cert.chosen_variant)},
        {"rho_bound", cert.rho_bound},
        {"gamma_star_applied", cert.gamma_star_applied},
        {"b1", cert.b1},
        {"gr_source", cert.gr_source},
        {"b2", cert.b2},
        {"margin", cert.margin},
        {"verdict", cert.certified ? "certified" : "not-certified-by-these-bounds"},
        {"candidates", candidates},
        {"audit", audit}};
    emit(doc);
    return kExitOk;
  } catch (const coxperc::CertifyError& e) {
    doc["certificate"] = {{"error", e.what()}};
    emit(doc);
    return kExitValidation;
  }
}

int run_table(bool as_json) {
  std::vector<coxperc::ThresholdRow> rows = coxperc::reproduce_threshold_table();
  if (as_json) {
    json arr = json::array();
    for (const auto& row : rows) {
      arr.push_back({{"variant", coxperc::rho_variant_name(row.variant)},
                     {"min_k_direct", row.min_k_direct},
                     {"min_k_gamma_star", row.min_k_gamma_star}});
    }
    emit(json{{"schema_version", coxperc::kReportSchemaVersion}, {"thresholds", arr}});
    return kExitOk;
  }
  std::cout << "variant      min k (rho)  min k (gamma*)\n";
  for (const auto& row : rows) {
    std::string name = coxperc::rho_variant_name(row.variant);
    name.resize(13, ' ');
    std::cout << name << row.min_k_direct << "           " << row.min_k_gamma_star << "\n";
  }
  return kExitOk;
}

int run_oracle(const coxperc::CoxeterMatrix& m, int nmax, int radius,
               std::size_t max_ball_size) {
  if (nmax < 0) throw CliError(kExitUsage, "--nmax must be >= 0");
  const int required = (nmax + 1) / 2 + 1;
  coxperc::CayleyBall ball = build_ball_or_die(m, std::max(radius, required), max_ball_size);
  json doc{{"schema_version", coxperc::kReportSchemaVersion}};
  try {
    coxperc::WalkSpectra spectra = coxperc::count_walk_spectra(ball, nmax);
    json closed = json::array(), nb = json::array(), saw = json::array();
    for (const auto& v : spectra.closed) closed.push_back(v.get_str());
    for (const auto& v : spectra.nonbacktracking) nb.push_back(v.get_str());
    for (const auto& v : spectra.self_avoiding) saw.push_back(v.get_str());
    doc["oracle"] = {{"n_max", nmax},
                     {"closed_walks", closed},
                     {"nonbacktracking_cycles", nb},
                     {"self_avoiding_cycles", saw},
                     {"note", spectra.note}};
    coxperc::DecompositionVerdict verdict = coxperc::verify_cycle_decomposition(
        coxperc::from_ball(ball), m.rank(), nmax);
    doc["oracle"]["decomposition"] = {{"holds", verdict.holds},
                                      {"n_checked", verdict.n_checked},
                                      {"first_failure", verdict.first_failure},
                                      {"note", verdict.note}};
  } catch (const std::invalid_argument& e) {
    doc["oracle"] = {{"error", e.what()}};
    emit(doc);
    return kExitValidation;
  }
  emit(doc);
  return kExitOk;
}

int run_simulate(const coxperc::CoxeterMatrix& m, const std::string& p_grid_text, int samples,
                 std::uint64_t seed, const std::string& mode_text, int workers, int radius,
                 std::size_t max_ball_size, bool as_csv) {
  std::vector<double> grid = parse_p_grid(p_grid_text);
  coxperc::PercMode mode = parse_mode(mode_text);
  if (samples < 1) throw CliError(kExitUsage, "--samples must be >= 1");
  if (workers < 1) throw CliError(kExitUsage, "--workers must be >= 1");
  coxperc::CayleyBall ball = build_ball_or_die(m, radius, max_ball_size);
  coxperc::SweepResult sweep = coxperc::percolation_sweep(ball, grid, samples, mode, seed,
                                                          workers);
  if (as_csv) {
    std::cout << coxperc::sweep_csv(sweep);
    return kExitOk;
  }
  json points = json::array();
  for (const auto& pt : sweep.points) {
    points.push_back({{"p", pt.p},
                      {"theta_hat", pt.theta_hat},
                      {"mean_boundary_clusters", pt.mean_boundary_clusters},
                      {"samples", pt.samples}});
  }
  emit(json{{"schema_version", coxperc::kReportSchemaVersion},
            {"percolation",
             {{"mode", coxperc::perc_mode_name(sweep.mode)},
              {"seed", sweep.seed},
              {"boundary_size", sweep.boundary_size},
              {"num_vertices", ball.num_vertices()},
              {"points", points}}}});
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"growth series, spectral bounds and percolation-phase certificates for "
               "reflection groups of Coxeter polyhedra"};
  app.require_subcommand(1);

  std::string input;
  int radius = 4;
  std::size_t max_ball_size = 5'000'000;
  int coeffs = 10;
  int nmax = 10;
  double c1 = 3.0, c2 = 3.0, c3 = 2.0;
  bool as_json = false, as_csv = false, simulate_too = false;
  std::string p_grid_text = "0:1:21";
  int samples = 200;
  std::uint64_t seed = 1;
  std::string mode_text = "bond";
  int workers = 1;

  const std::string fixture_help = [] {
    std::string s = "Coxeter input: JSON file path or one of: ";
    bool first = true;
    for (const std::string& name : coxperc::fixture_names()) {
      if (!first) s += ", ";
      s += name;
      first = false;
    }
    return s;
  }();

  CLI::App* analyze = app.add_subcommand("analyze", "full report: nerve, growth, bounds, "
                                                    "certificate, oracle");
  analyze->add_option("input", input, fixture_help)->required();
  analyze->add_option("--radius", radius, "Cayley ball radius")->capture_default_str();
  analyze->add_option("--coeffs", coeffs, "growth coefficients to report")
      ->capture_default_str();
  analyze->add_option("--nmax", nmax, "oracle walk length (negative disables)")
      ->default_val(6);
  analyze->add_option("--max-ball-size", max_ball_size, "vertex cap for ball enumeration")
      ->capture_default_str();
  analyze->add_option("--c1", c1, "Gabber weight c1")->capture_default_str();
  analyze->add_option("--c2", c2, "Gabber weight c2")->capture_default_str();
  analyze->add_option("--c3", c3, "Gabber weight c3")->capture_default_str();
  analyze->add_flag("--simulate", simulate_too, "include a percolation sweep");
  analyze->add_option("--p-grid", p_grid_text, "sweep grid a:b:steps")->capture_default_str();
  analyze->add_option("--samples", samples, "sweep samples per p")->capture_default_str();
  analyze->add_option("--seed", seed, "sweep base seed")->capture_default_str();
  analyze->add_option("--mode", mode_text, "bond or site")->capture_default_str();
  analyze->add_option("--workers", workers, "sweep worker threads")->capture_default_str();

  CLI::App* growth = app.add_subcommand("growth", "growth series and growth rate");
  growth->add_option("input", input, fixture_help)->required();
  growth->add_option("--coeffs", coeffs, "coefficients to report")->capture_default_str();

  CLI::App* bounds = app.add_subcommand("bounds", "spectral-radius bounds, closed-form and "
                                                  "observed");
  bounds->add_option("input", input, fixture_help)->required();
  bounds->add_option("--c1", c1, "Gabber weight c1")->capture_default_str();
  bounds->add_option("--c2", c2, "Gabber weight c2")->capture_default_str();
  bounds->add_option("--c3", c3, "Gabber weight c3")->capture_default_str();
  bounds->add_option("--radius", radius, "Cayley ball radius")->capture_default_str();
  bounds->add_option("--max-ball-size", max_ball_size, "vertex cap for ball enumeration")
      ->capture_default_str();

  CLI::App* certify = app.add_subcommand("certify", "issue a phase certificate");
  certify->add_option("input", input, fixture_help)->required();

  CLI::App* table = app.add_subcommand("table", "minimal-k threshold table");
  table->add_flag("--json", as_json, "emit JSON instead of text");

  CLI::App* oracle = app.add_subcommand("oracle", "exact walk counts and the cycle "
                                                  "decomposition identity");
  oracle->add_option("input", input, fixture_help)->required();
  oracle->add_option("--nmax", nmax, "largest walk length")->capture_default_str();
  oracle->add_option("--radius", radius, "minimum ball radius")->capture_default_str();
  oracle->add_option("--max-ball-size", max_ball_size, "vertex cap for ball enumeration")
      ->capture_default_str();

  CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo percolation sweep");
  simulate->add_option("input", input, fixture_help)->required();
  simulate->add_option("--p-grid", p_grid_text, "grid a:b:steps")->capture_default_str();
  simulate->add_option("--samples", samples, "samples per p")->capture_default_str();
  simulate->add_option("--seed", seed, "base seed")->capture_default_str();
  simulate->add_option("--mode", mode_text, "bond or site")->capture_default_str();
  simulate->add_option("--workers", workers, "worker threads")->capture_default_str();
  simulate->add_option("--radius", radius, "Cayley ball radius")->capture_default_str();
  simulate->add_option("--max-ball-size", max_ball_size, "vertex cap for ball enumeration")
      ->capture_default_str();
  simulate->add_flag("--csv", as_csv, "emit CSV instead of JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*table) return run_table(as_json);

    coxperc::CoxeterMatrix m = resolve_input(input);
    if (*analyze) {
      coxperc::ReportOptions opt;
      opt.radius = radius;
      opt.max_ball_size = max_ball_size;
      opt.coeffs = coeffs;
      opt.c1 = c1;
      opt.c2 = c2;
      opt.c3 = c3;
      opt.oracle_nmax = nmax;
      opt.simulate = simulate_too;
      if (simulate_too) {
        opt.p_grid = parse_p_grid(p_grid_text);
        opt.samples = samples;
        opt.seed = seed;
        opt.mode = parse_mode(mode_text);
        opt.workers = workers;
      }
      return run_analyze(m, opt);
    }
    if (*growth) return run_growth(m, coeffs);
    if (*bounds) return run_bounds(m, radius, max_ball_size, c1, c2, c3);
    if (*certify) return run_certify(m);
    if (*oracle) return run_oracle(m, nmax, radius, max_ball_size);
    if (*simulate)
      return run_simulate(m, p_grid_text, samples, seed, mode_text, workers, radius,
                          max_ball_size, as_csv);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}
