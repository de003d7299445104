#pragma once

// Growth series machinery: spherical growth polynomials via bracket products,
// the alternating inverse-growth sum over the nerve, its exact rational normal
// form p(t)/q(t), power-series expansion into sphere/ball sizes, growth-rate
// extraction by root finding, and the right-angled reference comparison.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "coxperc/coxeter_matrix.hpp"
#include "coxperc/int_polynomial.hpp"
#include "coxperc/nerve.hpp"

namespace coxperc {

// One term of the alternating sum: sign / W_T(1/t), where W_T is the bracket
// product over `brackets` and exponent_sum = deg W_T.
struct SteinbergTerm {
  std::vector<int> subset;    // generator subset T, sorted; empty for the unit term
  std::vector<int> brackets;  // bracket orders of W_T, ascending
  int exponent_sum = 0;       // deg W_T = sum (n_i - 1)
  int sign = 1;               // (-1)^{|T|}
};

struct InverseGrowth {
  int k = 0;
  std::vector<SteinbergTerm> terms;
  IntPolynomial p, q;  // exact normal form: 1/W(t) = p(t)/q(t), q > 0 on (0,1]

  // Value of the alternating term sum at t in [0,1]; t = 0 yields the limit 1.
  double eval_terms(double t) const;
  // Value of the rational normal form p(t)/q(t).
  double eval(double t) const;
};

struct GrowthRateResult {
  bool has_root = false;  // least positive root of 1/W found in (0,1]
  double t_star = 0.0;
  double rate = 0.0;  // 1/t_star
  double bracket_lo = 0.0, bracket_hi = 0.0;
  std::string method;  // scan/bisection trace or "no root <= 1"
};

struct LowerBoundVerdict {
  bool tree_bound = false;  // degenerate nerve: bound gr >= k-4 applies instead
  bool holds = false;       // reference inequality verified at every grid point
  double worst_margin = 0.0;
  double worst_t = 0.0;
  std::string note;
};

// Bracket orders of W_T for spherical T with |T| <= 3 (singleton [2], pair
// [2,m], triple by type).  |T| >= 4 is unsupported and rejected.
std::vector<int> spherical_bracket_orders(const CoxeterMatrix& m, const std::vector<int>& subset);
IntPolynomial spherical_growth_polynomial(const CoxeterMatrix& m, const std::vector<int>& subset);

// Alternating sum over {empty set} plus the nerve's simplices; requires the
// nerve to have no simplex of dimension >= 3.
InverseGrowth steinberg_inverse_growth(const CoxeterMatrix& m, const Nerve& nerve);

// First n_max+1 coefficients of W = q/p (sphere sizes) and of W/(1-t) (ball
// sizes), by exact integer power-series division.
struct SeriesCoefficients {
  std::vector<mpz_class> sphere;
  std::vector<mpz_class> ball;
};
SeriesCoefficients ball_size_series(const InverseGrowth& ig, int n_max);

// Least positive root of 1/W on (0,1]: geometric sign scan (1e4 points on
// [1e-6, 1]) followed by bisection to absolute width 1e-12.
GrowthRateResult growth_rate(const InverseGrowth& ig);

// (t-1)/(t+1)^3 * (-t^2 + (k-4)t - 1): the right-angled compact reference.
double ra_reference_inverse(int k, double t);

// Closed-form growth rate of the right-angled compact reference, (k-4+sqrt((k-4)^2-4))/2.
double ra_reference_growth_rate(int k);

// Verifies 1/W(t) <= 1/W^rb(t) on the grid (default: 1e3 uniform points on
// (0,1]) and reports the minimum margin.  The three degenerate nerve shapes
// (no edges; one edge; one triangle holding every edge) short-circuit to the
// tree bound gr >= k-4.  Requires k >= 6.
LowerBoundVerdict growth_lower_bound_check(const InverseGrowth& ig, const Nerve& nerve,
                                           const std::vector<double>& grid = {});

// [a-d, b+d](t) <= [a, b](t) for t >= 0; preconditions a <= b+1 and d <= a.
bool bracket_inequality_holds(int a, int b, int d, double t);

}  // namespace coxperc
