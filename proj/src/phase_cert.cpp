#include "coxperc/phase_cert.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace coxperc {
namespace {

double round_to_grid(double x) { return std::nearbyint(x * 1e12); }

// b1 for one lemma at abstract k: closed form, sharpened by the transform
// when its radicand is nonnegative.
double table_b1(RhoVariant variant, int k, bool use_gamma_star) {
  const double rho = rho_closed_form(k, variant).value;
  if (!use_gamma_star) return rho;
  if (rho < 2.0 * std::sqrt(static_cast<double>(k - 1))) return rho;  // transform unavailable
  return gamma_star_bound(rho, k).value;
}

}  // namespace

bool strictly_less_rounded(double b1, double b2) { return round_to_grid(b1) < round_to_grid(b2); }

PhaseCertificate certify_phase(const CoxeterMatrix& m) {
  const int k = m.rank();
  const ClassFlags flags = m.flags();
  if (!flags.hyperbolic_polyhedral)
    throw CertifyError("certify_phase: input does not carry the hyperbolic_polyhedral flag");
  if (k < 6)
    throw CertifyError("certify_phase: growth lower bound needs k >= 6");

  PhaseCertificate cert;
  cert.k = k;
  cert.flags = flags;

  const Nerve nerve = build_nerve(m);
  const NerveReport nerve_report = classify_nerve(nerve);

  // Right-angled compact validation, when the flags claim it.
  if (flags.right_angled && flags.compact) {
    const auto checks = validate_right_angled_compact(m, nerve, nerve_report);
    bool all = true;
    for (const auto& c : checks) {
      cert.audit.push_back(c);
      all = all && c.passed;
    }
    if (!all)
      throw CertifyError(
          "certify_phase: flags claim right-angled compact but validation failed (see checks)");
    cert.ra_compact_validated = true;
  }

  // Candidate spectral bounds, each optionally sharpened by gamma*.
  const double gamma_floor = 2.0 * std::sqrt(static_cast<double>(k - 1));
  for (RhoVariant variant : {RhoVariant::basic, RhoVariant::general, RhoVariant::ra_compact}) {
    CertCandidate cand;
    cand.variant = variant;
    if (variant == RhoVariant::ra_compact && !(cert.ra_compact_validated && k >= 12)) {
      cand.valid = false;
      cand.note = "requires validated right-angled compact input with k >= 12";
      cert.candidates.push_back(std::move(cand));
      continue;
    }
    const BoundValue rho = rho_closed_form(k, variant);
    cand.valid = true;
    cand.rho = rho.value;
    if (rho.value >= gamma_floor) {
      cand.gamma_applied = true;
      cand.b1 = gamma_star_bound(rho.value, k).value;
    } else {
      cand.gamma_applied = false;
      cand.b1 = rho.value;
    }
    std::ostringstream os;
    os << rho.provenance << (cand.gamma_applied ? ", gamma* applied" : ", used directly");
    cand.note = os.str();
    cert.candidates.push_back(std::move(cand));
  }

  bool have = false;
  for (const auto& cand : cert.candidates) {
    if (!cand.valid) continue;
    if (!have || cand.b1 < cert.b1) {
      have = true;
      cert.b1 = cand.b1;
      cert.rho_bound = cand.rho;
      cert.gamma_star_applied = cand.gamma_applied;
      cert.chosen_variant = cand.variant;
    }
  }

  // Growth-rate side.  The inverse growth series drives both the exact root
  // (right-angled compact) and the audit of the reference inequality.
  const InverseGrowth ig = steinberg_inverse_growth(m, nerve);
  const double closed_form_b2 = ra_reference_growth_rate(k);
  const LowerBoundVerdict lower = growth_lower_bound_check(ig, nerve);

  if (cert.ra_compact_validated) {
    const GrowthRateResult root = growth_rate(ig);
    CheckResult root_check{"ra_growth_rate_closed_form", false, ""};
    if (root.has_root) {
      const double gap = std::abs(root.rate - closed_form_b2);
      root_check.passed = gap <= 1e-9;
      std::ostringstream os;
      os << "Steinberg root gives gr = " << root.rate << ", closed form " << closed_form_b2
         << ", |gap| = " << gap;
      root_check.detail = os.str();
      cert.b2 = root.rate;
      cert.gr_source = "steinberg root (exact growth rate)";
    } else {
      root_check.detail = "no root of 1/W found on (0,1]";
      cert.b2 = closed_form_b2;
      cert.gr_source = "closed-form lower bound (root finding failed)";
    }
    cert.audit.push_back(std::move(root_check));
  } else {
    cert.b2 = closed_form_b2;
    cert.gr_source = "closed-form lower bound";
  }

  {
    CheckResult grid_check{"growth_lower_bound", lower.holds, lower.note};
    if (lower.tree_bound) grid_check.name = "growth_lower_bound_tree_case";
    cert.audit.push_back(std::move(grid_check));
  }

  bool audit_ok = true;
  for (const auto& c : cert.audit) audit_ok = audit_ok && c.passed;

  cert.margin = cert.b2 - cert.b1;
  cert.certified = audit_ok && strictly_less_rounded(cert.b1, cert.b2);
  return cert;
}

std::vector<ThresholdRow> reproduce_threshold_table() {
  std::vector<ThresholdRow> table;
  for (RhoVariant variant : {RhoVariant::basic, RhoVariant::general, RhoVariant::ra_compact}) {
    ThresholdRow row;
    row.variant = variant;
    const int floor_k = (variant == RhoVariant::ra_compact) ? 12 : 6;
    for (int pass = 0; pass < 2; ++pass) {
      const bool use_gamma = (pass == 1);
      int found = 0;
      for (int k = floor_k; k <= 200; ++k) {
        const double b1 = table_b1(variant, k, use_gamma);
        const double b2 = ra_reference_growth_rate(k);
        if (strictly_less_rounded(b1, b2)) {
          found = k;
          break;
        }
      }
      (use_gamma ? row.min_k_gamma_star : row.min_k_direct) = found;
    }
    table.push_back(row);
  }
  return table;
}

}  // namespace coxperc
