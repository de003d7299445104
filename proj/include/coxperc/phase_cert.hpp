#pragma once

// Certificate pipeline: pick the best valid closed-form spectral bound,
// optionally sharpen it through the gamma* transform, compare against the
// growth-rate bound, and issue a conservative verdict.  Also reproduces the
// minimal-k threshold table for the three lemmas with and without gamma*.

#include <stdexcept>
#include <string>
#include <vector>

#include "coxperc/coxeter_matrix.hpp"
#include "coxperc/growth_series.hpp"
#include "coxperc/nerve.hpp"
#include "coxperc/walk_bounds.hpp"

namespace coxperc {

// Input fails the pipeline's hard preconditions (flags, rank, or an
// inconsistency between claimed flags and the nerve).
class CertifyError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct CertCandidate {
  RhoVariant variant = RhoVariant::basic;
  bool valid = false;          // lemma applies to this input
  double rho = 0.0;            // closed-form spectral bound (when valid)
  bool gamma_applied = false;  // transform used on top of rho
  double b1 = 0.0;             // resulting cycle-growth bound
  std::string note;
};

struct PhaseCertificate {
  int k = 0;
  ClassFlags flags;
  bool ra_compact_validated = false;

  RhoVariant chosen_variant = RhoVariant::basic;
  double rho_bound = 0.0;
  bool gamma_star_applied = false;
  double b1 = 0.0;

  std::string gr_source;  // "steinberg root" or "closed-form lower bound"
  double b2 = 0.0;

  double margin = 0.0;  // b2 - b1
  bool certified = false;

  std::vector<CertCandidate> candidates;
  std::vector<CheckResult> audit;
};

// Runs the full pipeline.  Throws CertifyError when the input does not carry
// the hyperbolic_polyhedral flag, has k < 6, claims right-angled compact but
// fails validation, or has a nerve outside the supported shape.
PhaseCertificate certify_phase(const CoxeterMatrix& m);

// Comparison rule shared by certificates and the threshold table: strict
// b1 < b2 after rounding both to the 1e-12 grid (ties are not certified).
bool strictly_less_rounded(double b1, double b2);

struct ThresholdRow {
  RhoVariant variant = RhoVariant::basic;
  int min_k_direct = 0;      // least k certified using rho directly
  int min_k_gamma_star = 0;  // least k certified after the transform
};
std::vector<ThresholdRow> reproduce_threshold_table();

}  // namespace coxperc
