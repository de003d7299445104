#pragma once

// Spectral-radius machinery: weighted flow bounds evaluated on finite balls,
// the three closed-form bounds on the adjacency spectral radius, the regular
// tree path-count kernel with its Green function, the transform turning a
// spectral bound into a non-backtracking-cycle growth bound, and the exact
// cycle-decomposition identity check that ties the counting oracles together.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "coxperc/cayley_ball.hpp"
#include "coxperc/rooted_graph.hpp"

namespace coxperc {

// Weights c_1, c_2, c_3 indexed by the outward-edge count r at an edge's head.
struct GabberParams {
  double c1 = 1.0, c2 = 1.0, c3 = 1.0;
  double weight(int r) const;  // c_r for r in {1,2,3}
};

struct BoundValue {
  double value = 0.0;
  std::string provenance;     // which rule produced it
  std::string preconditions;  // validity context echoed for the audit trail
};

// sup over interior vertices of f_v = r(v) c_{r(v)} + sum_i q_i(v)/c_i.
// An empirical observation on a finite ball - never itself a certificate -
// but it must not exceed the matching closed form on valid inputs.
BoundValue gabber_bound_on_ball(const CayleyBall& ball, const OrientationStats& stats,
                                const GabberParams& params);

enum class RhoVariant { basic, general, ra_compact };

// Closed-form upper bounds for the normalized spectral radius rho-tilde:
//   basic      2*sqrt(3(k-3))   (k >= 6)
//   general    (k+17)/3         (k >= 6)
//   ra_compact (10k+62)/20      (k >= 12, right-angled compact inputs only)
BoundValue rho_closed_form(int k, RhoVariant variant);
const char* rho_variant_name(RhoVariant variant);

// gamma-hat = (rho + sqrt(rho^2 - 4(k-1)))/2; requires rho >= 2*sqrt(k-1).
// Satisfies gamma-hat + (k-1)/gamma-hat = rho.
BoundValue gamma_star_bound(double rho, int k);

// Path counts on the k-regular tree: c(n,d) = number of length-n walks from a
// vertex at distance d to the target, tabulated for 0 <= n <= n_max.
struct TreeKernel {
  int k = 0;
  int n_max = 0;
  std::vector<std::vector<mpz_class>> table;  // table[n][d], d = 0..n_max

  const mpz_class& count(int n, int d) const { return table[n][d]; }
};
TreeKernel tree_path_counts(int k, int n_max);

// Green function G(d, kz) = A(z) f(z)^d of the simple random walk on the
// k-regular tree, and the conjugacy map f itself.  Domain |z| <= 1/(2*sqrt(k-1)).
double tree_green(int k, int d, double z);
double f_map(int k, double z);
double tree_rho_tilde(int k);  // 2*sqrt(k-1)

// Exact check of C_n = sum_d a*_d c(n,d) for all n <= n_max on a finite
// k-regular rooted graph (regular at least out to distance ceil(n_max/2)).
struct DecompositionVerdict {
  bool holds = false;
  int n_checked = -1;     // largest n verified
  int first_failure = -1;  // -1 when holds
  std::string note;
};
DecompositionVerdict verify_cycle_decomposition(const RootedGraph& g, int k, int n_max);

}  // namespace coxperc
