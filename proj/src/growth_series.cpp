#include "coxperc/growth_series.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace coxperc {
namespace {

// [n](x) = x^{n-1} + ... + 1 evaluated in floating point.
double bracket_value(int n, double x) {
  if (std::abs(x - 1.0) < 1e-14) return static_cast<double>(n);
  return (std::pow(x, n) - 1.0) / (x - 1.0);
}

std::vector<int> sorted_pair_orders(const CoxeterMatrix& m, const std::vector<int>& t) {
  std::vector<int> orders;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) orders.push_back(m.order(t[i], t[j]));
  std::sort(orders.begin(), orders.end());
  return orders;
}

}  // namespace

std::vector<int> spherical_bracket_orders(const CoxeterMatrix& m, const std::vector<int>& subset) {
  if (!is_spherical(m, subset))
    throw std::invalid_argument("spherical_bracket_orders: subset is not spherical");
  switch (subset.size()) {
    case 1:
      return {2};
    case 2:
      return {2, m.order(subset[0], subset[1])};
    case 3: {
      const std::vector<int> o = sorted_pair_orders(m, subset);
      if (o[0] == 2 && o[1] == 2) return {2, 2, o[2]};        // reducible, A1 x I2(m)
      if (o[0] == 2 && o[1] == 3 && o[2] == 3) return {2, 3, 4};   // A3
      if (o[0] == 2 && o[1] == 3 && o[2] == 4) return {2, 4, 6};   // B3
      if (o[0] == 2 && o[1] == 3 && o[2] == 5) return {2, 6, 10};  // H3
      throw std::logic_error("spherical_bracket_orders: unclassified spherical triple");
    }
    default:
      throw std::domain_error(
          "spherical_bracket_orders: subsets of size >= 4 are unsupported here");
  }
}

IntPolynomial spherical_growth_polynomial(const CoxeterMatrix& m, const std::vector<int>& subset) {
  return bracket_product(spherical_bracket_orders(m, subset));
}

InverseGrowth steinberg_inverse_growth(const CoxeterMatrix& m, const Nerve& nerve) {
  if (nerve.simplices.size() > 3 && !nerve.simplices[3].empty())
    throw std::domain_error(
        "steinberg_inverse_growth: nerve contains a 3-simplex; only nerves of dimension <= 2 "
        "are supported");

  InverseGrowth ig;
  ig.k = m.rank();
  ig.terms.push_back({{}, {}, 0, +1});  // empty subset: the constant 1
  for (std::size_t d = 0; d < nerve.simplices.size() && d < 3; ++d) {
    const int sign = (d % 2 == 0) ? -1 : +1;  // (-1)^{d+1}
    for (const auto& simplex : nerve.simplices[d]) {
      SteinbergTerm term;
      term.subset = simplex;
      term.brackets = spherical_bracket_orders(m, simplex);
      for (int n : term.brackets) term.exponent_sum += n - 1;
      term.sign = sign;
      ig.terms.push_back(std::move(term));
    }
  }

  // Common denominator: the pointwise-maximum bracket multiset over all terms.
  std::map<int, int> common;
  for (const auto& term : ig.terms) {
    std::map<int, int> mult;
    for (int n : term.brackets) ++mult[n];
    for (const auto& [n, c] : mult) common[n] = std::max(common[n], c);
  }
  std::vector<int> denominator_orders;
  for (const auto& [n, c] : common)
    for (int i = 0; i < c; ++i) denominator_orders.push_back(n);
  ig.q = bracket_product(denominator_orders);

  // p = sum over terms of sign * t^{deg W_T} * (common / W_T).
  ig.p = IntPolynomial();
  for (const auto& term : ig.terms) {
    std::map<int, int> mult;
    for (int n : term.brackets) ++mult[n];
    std::vector<int> cofactor;
    for (const auto& [n, c] : common) {
      const auto it = mult.find(n);
      const int used = (it == mult.end()) ? 0 : it->second;
      for (int i = 0; i < c - used; ++i) cofactor.push_back(n);
    }
    IntPolynomial piece =
        IntPolynomial::monomial(term.sign, term.exponent_sum) * bracket_product(cofactor);
    ig.p = ig.p + piece;
  }
  return ig;
}

double InverseGrowth::eval_terms(double t) const {
  if (t == 0.0) return 1.0;  // only the empty-set term survives in the limit
  const double x = 1.0 / t;
  double sum = 0.0;
  for (const auto& term : terms) {
    double denom = 1.0;
    for (int n : term.brackets) denom *= bracket_value(n, x);
    sum += static_cast<double>(term.sign) / denom;
  }
  return sum;
}

double InverseGrowth::eval(double t) const { return p.eval(t) / q.eval(t); }

SeriesCoefficients ball_size_series(const InverseGrowth& ig, int n_max) {
  SeriesCoefficients out;
  out.sphere = series_divide(ig.q, ig.p, n_max);  // W = q/p
  out.ball.reserve(out.sphere.size());
  mpz_class acc = 0;
  for (const auto& w : out.sphere) {
    acc += w;
    out.ball.push_back(acc);
  }
  return out;
}

GrowthRateResult growth_rate(const InverseGrowth& ig) {
  // q > 0 on (0,1] (all bracket factors have positive coefficients), so the
  // sign of 1/W is the sign of p there.
  const auto f = [&ig](double t) { return ig.p.eval(t); };

  constexpr int kPoints = 10000;
  constexpr double kLow = 1e-6;
  GrowthRateResult res;

  double prev_t = 0.0;  // f(0) = p(0) = 1 > 0
  for (int i = 0; i < kPoints; ++i) {
    const double t = (i == kPoints - 1)
                         ? 1.0
                         : kLow * std::pow(1.0 / kLow, static_cast<double>(i) / (kPoints - 1));
    const double ft = f(t);
    // A crossing, or a grid point within 1e-14 of zero (treated as a root and
    // refined against its left neighbour).
    if (ft <= 0.0 || std::abs(ft) <= 1e-14) {
      double lo = prev_t, hi = t;
      while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) > 0.0)
          lo = mid;
        else
          hi = mid;
      }
      res.has_root = true;
      res.bracket_lo = lo;
      res.bracket_hi = hi;
      res.t_star = 0.5 * (lo + hi);
      res.rate = 1.0 / res.t_star;
      std::ostringstream os;
      os << "geometric sign scan (" << kPoints << " points) + bisection, width "
         << (hi - lo);
      res.method = os.str();
      return res;
    }
    prev_t = t;
  }
  res.method = "no root <= 1";
  return res;
}

double ra_reference_inverse(int k, double t) {
  if (k < 6) throw std::invalid_argument("ra_reference_inverse: requires k >= 6");
  const double kk = static_cast<double>(k);
  const double u = t + 1.0;
  return (t - 1.0) / (u * u * u) * (-t * t + (kk - 4.0) * t - 1.0);
}

double ra_reference_growth_rate(int k) {
  if (k < 6) throw std::invalid_argument("ra_reference_growth_rate: requires k >= 6");
  const double a = static_cast<double>(k) - 4.0;
  return 0.5 * (a + std::sqrt(a * a - 4.0));
}

LowerBoundVerdict growth_lower_bound_check(const InverseGrowth& ig, const Nerve& nerve,
                                           const std::vector<double>& grid) {
  if (ig.k < 6)
    throw std::invalid_argument("growth_lower_bound_check: requires k >= 6");

  LowerBoundVerdict verdict;
  // Degenerate nerves (no edges; a single edge; a single triangle carrying
  // every edge) fall back on the embedded-tree bound.
  const std::size_t f1 = nerve.f1(), f2 = nerve.f2();
  if (f1 == 0 || f1 == 1 || (f2 == 1 && f1 == 3)) {
    verdict.tree_bound = true;
    verdict.holds = true;
    std::ostringstream os;
    os << "degenerate nerve: tree bound applies, gr >= k-4 = " << (ig.k - 4);
    verdict.note = os.str();
    return verdict;
  }

  std::vector<double> points = grid;
  if (points.empty()) {
    points.reserve(1000);
    for (int j = 1; j <= 1000; ++j) points.push_back(static_cast<double>(j) / 1000.0);
  }
  verdict.holds = true;
  bool first = true;
  for (double t : points) {
    const double margin = ra_reference_inverse(ig.k, t) - ig.eval(t);
    if (first || margin < verdict.worst_margin) {
      verdict.worst_margin = margin;
      verdict.worst_t = t;
      first = false;
    }
  }
  verdict.holds = verdict.worst_margin >= -1e-12;
  std::ostringstream os;
  os << "min over " << points.size() << " grid points of (1/W^rb - 1/W) = "
     << verdict.worst_margin << " at t = " << verdict.worst_t;
  verdict.note = os.str();
  return verdict;
}

bool bracket_inequality_holds(int a, int b, int d, double t) {
  if (a < 1 || b < 1 || d < 0 || a > b + 1 || d > a || t < 0.0)
    throw std::invalid_argument("bracket_inequality_holds: preconditions a,b >= 1, a <= b+1, "
                                "0 <= d <= a, t >= 0");
  const auto val = [t](int n) {
    double sum = 0.0, power = 1.0;
    for (int i = 0; i < n; ++i) {
      sum += power;
      power *= t;
    }
    return sum;
  };
  return val(a - d) * val(b + d) <= val(a) * val(b);
}

}  // namespace coxperc
