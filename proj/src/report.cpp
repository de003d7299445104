#include "coxperc/report.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxperc/cayley_ball.hpp"
#include "coxperc/growth_series.hpp"
#include "coxperc/int_polynomial.hpp"
#include "coxperc/nerve.hpp"
#include "coxperc/phase_cert.hpp"
#include "coxperc/rooted_graph.hpp"
#include "coxperc/walk_bounds.hpp"
#include "coxperc/walk_counts.hpp"

namespace coxperc {
namespace {

using nlohmann::json;

json mpz_strings(const std::vector<mpz_class>& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(v.get_str());
  return arr;
}

json poly_json(const IntPolynomial& p) {
  json arr = json::array();
  for (int i = 0; i <= p.degree(); ++i) arr.push_back(p.coeff(i).get_str());
  return arr;
}

json checks_json(const std::vector<CheckResult>& checks) {
  json arr = json::array();
  for (const auto& c : checks)
    arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return arr;
}

json nerve_section(const CoxeterMatrix& m, const Nerve& nerve, const NerveReport& report) {
  json doc{{"f0", report.f0},
           {"f1", report.f1},
           {"f2", report.f2},
           {"max_vertex_degree", report.delta},
           {"euler_characteristic", report.euler},
           {"connected", report.connected},
           {"is_flag", report.is_flag},
           {"has_3_simplex", report.has_3_simplex},
           {"edges_in_two_triangles", report.edges_in_two_triangles},
           {"links_single_cycles", report.links_single_cycles},
           {"is_sphere_triangulation", report.is_sphere_triangulation},
           {"detail", report.detail}};
  if (m.flags().right_angled && m.flags().compact)
    doc["ra_compact_checks"] = checks_json(validate_right_angled_compact(m, nerve, report));
  return doc;
}

json growth_section(const CoxeterMatrix& m, const InverseGrowth& ig, const Nerve& nerve,
                    int coeffs) {
  json doc{{"steinberg_terms", ig.terms.size()},
           {"inverse_numerator", poly_json(ig.p)},
           {"inverse_denominator", poly_json(ig.q)},
           {"numerator_palindromic", ig.p.is_palindromic()}};

  const int n_max = std::clamp(coeffs, 0, 1000);
  SeriesCoefficients series = ball_size_series(ig, n_max);
  doc["sphere_sizes"] = mpz_strings(series.sphere);
  doc["ball_sizes"] = mpz_strings(series.ball);

  GrowthRateResult rate = growth_rate(ig);
  doc["growth_rate"] = {{"has_root", rate.has_root},
                        {"t_star", rate.t_star},
                        {"rate", rate.rate},
                        {"bracket_lo", rate.bracket_lo},
                        {"bracket_hi", rate.bracket_hi},
                        {"method", rate.method}};

  if (m.flags().hyperbolic_polyhedral && m.rank() >= 6) {
    LowerBoundVerdict lb = growth_lower_bound_check(ig, nerve);
    doc["lower_bound"] = {{"tree_bound", lb.tree_bound},
                          {"holds", lb.holds},
                          {"worst_margin", lb.worst_margin},
                          {"worst_t", lb.worst_t},
                          {"note", lb.note}};
  } else {
    doc["lower_bound"] = {{"note", "not applicable: requires a hyperbolic polyhedral "
                                   "input with k >= 6"}};
  }
  return doc;
}

json ball_info(const CayleyBall& ball) {
  json spheres = json::array();
  for (std::size_t s : ball.sphere_sizes) spheres.push_back(s);
  return json{{"radius_requested", ball.radius},
              {"radius_reached", ball.radius_reached},
              {"saturated", ball.saturated},
              {"num_vertices", ball.num_vertices()},
              {"num_edges", ball.edges.size()},
              {"sphere_sizes", spheres},
              {"backend", ball.backend}};
}

json bounds_section(const CoxeterMatrix& m, const CayleyBall* ball, const ReportOptions& opt,
                    bool ra_validated) {
  const int k = m.rank();
  json doc;
  doc["tree_rho_tilde"] = k >= 2 ? tree_rho_tilde(k) : 0.0;

  json closed = json::array();
  for (RhoVariant variant :
       {RhoVariant::basic, RhoVariant::general, RhoVariant::ra_compact}) {
    if (variant == RhoVariant::ra_compact && !ra_validated) continue;
    json entry{{"variant", rho_variant_name(variant)}};
    try {
      BoundValue rho = rho_closed_form(k, variant);
      entry["rho"] = rho.value;
      entry["provenance"] = rho.provenance;
      entry["preconditions"] = rho.preconditions;
      if (k >= 2 && rho.value >= tree_rho_tilde(k)) {
        BoundValue gs = gamma_star_bound(rho.value, k);
        entry["gamma_star"] = gs.value;
      }
    } catch (const std::invalid_argument& e) {
      entry["error"] = e.what();
    }
    closed.push_back(std::move(entry));
  }
  doc["closed_form"] = closed;

  if (ball != nullptr) {
    doc["ball"] = ball_info(*ball);
    try {
      OrientationStats stats = orientation_stats(*ball);
      GabberParams params{opt.c1, opt.c2, opt.c3};
      BoundValue observed = gabber_bound_on_ball(*ball, stats, params);
      doc["observed"] = {{"weights", {opt.c1, opt.c2, opt.c3}},
                         {"sup_f", observed.value},
                         {"provenance", observed.provenance},
                         {"preconditions", observed.preconditions},
                         {"interior_vertices", stats.num_interior}};
    } catch (const std::invalid_argument& e) {
      doc["observed"] = {{"error", e.what()}};
    }
  }
  return doc;
}

json certificate_json(const PhaseCertificate& cert) {
  json candidates = json::array();
  for (const auto& c : cert.candidates) {
    candidates.push_back({{"variant", rho_variant_name(c.variant)},
                          {"valid", c.valid},
                          {"rho", c.rho},
                          {"gamma_star_applied", c.gamma_applied},
                          {"b1", c.b1},
                          {"note", c.note}});
  }
  return json{{"k", cert.k},
              {"ra_compact_validated", cert.ra_compact_validated},
              {"chosen_variant", rho_variant_name(cert.chosen_variant)},
              {"rho_bound", cert.rho_bound},
              {"gamma_star_applied", cert.gamma_star_applied},
              {"b1", cert.b1},
              {"gr_source", cert.gr_source},
              {"b2", cert.b2},
              {"margin", cert.margin},
              {"verdict", cert.certified ? "certified" : "not-certified-by-these-bounds"},
              {"candidates", candidates},
              {"audit", checks_json(cert.audit)}};
}

json oracle_section(const CayleyBall& ball, int k, int n_max) {
  WalkSpectra spectra = count_walk_spectra(ball, n_max);
  json doc{{"n_max", n_max},
           {"closed_walks", mpz_strings(spectra.closed)},
           {"nonbacktracking_cycles", mpz_strings(spectra.nonbacktracking)},
           {"self_avoiding_cycles", mpz_strings(spectra.self_avoiding)},
           {"note", spectra.note}};
  try {
    DecompositionVerdict verdict = verify_cycle_decomposition(from_ball(ball), k, n_max);
    doc["decomposition"] = {{"holds", verdict.holds},
                            {"n_checked", verdict.n_checked},
                            {"first_failure", verdict.first_failure},
                            {"note", verdict.note}};
  } catch (const std::invalid_argument& e) {
    doc["decomposition"] = {{"error", e.what()}};
  }
  return doc;
}

std::vector<double> default_p_grid() {
  std::vector<double> grid(21);
  for (int i = 0; i <= 20; ++i) grid[i] = i / 20.0;
  return grid;
}

json percolation_section(const CayleyBall& ball, const ReportOptions& opt) {
  const std::vector<double>& grid = opt.p_grid.empty() ? default_p_grid() : opt.p_grid;
  SweepResult sweep =
      percolation_sweep(ball, grid, opt.samples, opt.mode, opt.seed, opt.workers);
  json points = json::array();
  for (const auto& pt : sweep.points) {
    points.push_back({{"p", pt.p},
                      {"theta_hat", pt.theta_hat},
                      {"mean_boundary_clusters", pt.mean_boundary_clusters},
                      {"samples", pt.samples}});
  }
  return json{{"mode", perc_mode_name(sweep.mode)},
              {"seed", sweep.seed},
              {"boundary_size", sweep.boundary_size},
              {"points", points}};
}

}  // namespace

ReportResult run_report(const CoxeterMatrix& m, const ReportOptions& options) {
  ReportResult result;
  json& doc = result.doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["input"] = json::parse(coxeter_input_json(m));
  doc["input"]["exact_backend_available"] = m.exact_backend_available();

  bool resource_hit = false;
  bool validation_failed = false;

  Nerve nerve = build_nerve(m);
  NerveReport nerve_report = classify_nerve(nerve);
  doc["nerve"] = nerve_section(m, nerve, nerve_report);

  bool ra_validated = false;
  if (m.flags().right_angled && m.flags().compact) {
    std::vector<CheckResult> checks = validate_right_angled_compact(m, nerve, nerve_report);
    ra_validated = std::all_of(checks.begin(), checks.end(),
                               [](const CheckResult& c) { return c.passed; });
  }

  try {
    InverseGrowth ig = steinberg_inverse_growth(m, nerve);
    doc["growth"] = growth_section(m, ig, nerve, options.coeffs);
  } catch (const std::exception& e) {
    doc["growth"] = {{"error", e.what()}};
    validation_failed = true;
  }

  // One ball serves the bounds, oracle and percolation sections; the oracle
  // re-builds at a larger radius only when its walk length demands it.
  std::unique_ptr<CayleyBall> ball;
  BallOptions ball_opt;
  ball_opt.radius = options.radius;
  ball_opt.max_vertices = options.max_ball_size;
  try {
    ball = std::make_unique<CayleyBall>(build_ball(m, ball_opt));
  } catch (const BallCapExceeded& e) {
    doc["bounds"] = bounds_section(m, nullptr, options, ra_validated);
    doc["bounds"]["ball"] = {{"error", e.what()}, {"radius_reached", e.radius_reached}};
    resource_hit = true;
  }
  if (ball) doc["bounds"] = bounds_section(m, ball.get(), options, ra_validated);

  try {
    PhaseCertificate cert = certify_phase(m);
    doc["certificate"] = certificate_json(cert);
  } catch (const CertifyError& e) {
    doc["certificate"] = {{"error", e.what()}};
    validation_failed = true;
  }

  if (options.oracle_nmax >= 0) {
    const int required_radius = (options.oracle_nmax + 1) / 2 + 1;
    try {
      const CayleyBall* oracle_ball = ball.get();
      std::unique_ptr<CayleyBall> bigger;
      if (!oracle_ball ||
          (!oracle_ball->saturated && oracle_ball->radius_reached < required_radius)) {
        BallOptions bigger_opt = ball_opt;
        bigger_opt.radius = required_radius;
        bigger = std::make_unique<CayleyBall>(build_ball(m, bigger_opt));
        oracle_ball = bigger.get();
      }
      doc["oracle"] = oracle_section(*oracle_ball, m.rank(), options.oracle_nmax);
    } catch (const BallCapExceeded& e) {
      doc["oracle"] = {{"error", e.what()}};
      resource_hit = true;
    } catch (const std::invalid_argument& e) {
      doc["oracle"] = {{"error", e.what()}};
      validation_failed = true;
    }
  }

  if (options.simulate) {
    if (ball) {
      doc["percolation"] = percolation_section(*ball, options);
    } else {
      doc["percolation"] = {{"error", "ball unavailable (size cap exceeded)"}};
    }
  }

  if (resource_hit)
    result.exit_code = kExitResource;
  else if (validation_failed)
    result.exit_code = kExitValidation;
  else
    result.exit_code = kExitOk;
  return result;
}

}  // namespace coxperc
