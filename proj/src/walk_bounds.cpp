#include "coxperc/walk_bounds.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "coxperc/walk_counts.hpp"

namespace coxperc {

double GabberParams::weight(int r) const {
  switch (r) {
    case 1:
      return c1;
    case 2:
      return c2;
    case 3:
      return c3;
    default:
      throw std::domain_error("GabberParams: weight index must be 1, 2 or 3");
  }
}

BoundValue gabber_bound_on_ball(const CayleyBall& ball, const OrientationStats& stats,
                                const GabberParams& params) {
  if (params.c1 <= 0.0 || params.c2 <= 0.0 || params.c3 <= 0.0)
    throw std::invalid_argument("gabber_bound_on_ball: weights must be strictly positive");
  if (stats.num_interior == 0)
    throw std::invalid_argument("gabber_bound_on_ball: no interior vertices (radius too small)");

  double sup = 0.0;
  std::uint32_t argmax = 0;
  for (std::uint32_t v = 0; v < ball.num_vertices(); ++v) {
    if (!stats.interior(v)) continue;
    const int r = stats.r[v];
    if (r > 3)
      throw std::domain_error("gabber_bound_on_ball: interior vertex with r > 3 (no weight)");
    double f = (r >= 1) ? r * params.weight(r) : 0.0;
    for (int i = 1; i <= ball.k; ++i) {
      const int q = stats.q(v, i);
      if (q == 0) continue;
      if (i > 3)
        throw std::domain_error("gabber_bound_on_ball: interior vertex with q_i > 0 for i > 3");
      f += static_cast<double>(q) / params.weight(i);
    }
    if (f > sup) {
      sup = f;
      argmax = v;
    }
  }
  BoundValue bound;
  bound.value = sup;
  std::ostringstream prov, pre;
  prov << "observed sup of f_v over " << stats.num_interior << " interior vertices (argmax at length "
       << ball.lengths[argmax] << ")";
  pre << "weights (" << params.c1 << ", " << params.c2 << ", " << params.c3
      << "); empirical ball estimate, not a certificate";
  bound.provenance = prov.str();
  bound.preconditions = pre.str();
  return bound;
}

const char* rho_variant_name(RhoVariant variant) {
  switch (variant) {
    case RhoVariant::basic:
      return "basic";
    case RhoVariant::general:
      return "general";
    case RhoVariant::ra_compact:
      return "ra_compact";
  }
  return "?";
}

BoundValue rho_closed_form(int k, RhoVariant variant) {
  BoundValue bound;
  switch (variant) {
    case RhoVariant::basic:
      if (k < 6) throw std::invalid_argument("rho_closed_form(basic): requires k >= 6");
      bound.value = 2.0 * std::sqrt(3.0 * (k - 3));
      bound.provenance = "rho basic: 2*sqrt(3(k-3))";
      bound.preconditions = "k >= 6, polyhedral input";
      break;
    case RhoVariant::general:
      if (k < 6) throw std::invalid_argument("rho_closed_form(general): requires k >= 6");
      bound.value = (static_cast<double>(k) + 17.0) / 3.0;
      bound.provenance = "rho general: (k+17)/3";
      bound.preconditions = "k >= 6, polyhedral input";
      break;
    case RhoVariant::ra_compact:
      if (k < 12) throw std::invalid_argument("rho_closed_form(ra_compact): requires k >= 12");
      bound.value = (10.0 * k + 62.0) / 20.0;
      bound.provenance = "rho ra_compact: (10k+62)/20";
      bound.preconditions = "k >= 12, validated right-angled compact input";
      break;
  }
  return bound;
}

BoundValue gamma_star_bound(double rho, int k) {
  if (k < 2) throw std::invalid_argument("gamma_star_bound: requires k >= 2");
  double disc = rho * rho - 4.0 * (k - 1);
  // Forgive float dust at the boundary rho = 2*sqrt(k-1), reject real gaps.
  if (disc < 0.0) {
    if (disc > -1e-9 * std::max(1.0, rho * rho))
      disc = 0.0;
    else
      throw std::domain_error(
          "gamma_star_bound: rho < 2*sqrt(k-1), transform not applicable");
  }
  BoundValue bound;
  bound.value = 0.5 * (rho + std::sqrt(disc));
  std::ostringstream prov, pre;
  prov << "gamma* transform of rho = " << rho;
  pre << "rho >= 2*sqrt(k-1) = " << 2.0 * std::sqrt(static_cast<double>(k - 1));
  bound.provenance = prov.str();
  bound.preconditions = pre.str();
  return bound;
}

TreeKernel tree_path_counts(int k, int n_max) {
  if (k < 2) throw std::invalid_argument("tree_path_counts: requires k >= 2");
  if (n_max < 0) throw std::invalid_argument("tree_path_counts: n_max must be >= 0");
  TreeKernel kernel;
  kernel.k = k;
  kernel.n_max = n_max;
  const std::size_t width = static_cast<std::size_t>(n_max) + 1;
  kernel.table.assign(width, std::vector<mpz_class>(width, 0));
  kernel.table[0][0] = 1;
  // Distance-to-target chain: from 0 there are k steps to 1; from d >= 1 one
  // step down and k-1 steps up.  c(n,d) = 0 whenever d > n, so reads past the
  // diagonal never contribute.
  for (int n = 1; n <= n_max; ++n) {
    for (int d = 0; d <= n_max; ++d) {
      if (d == 0) {
        kernel.table[n][0] = k * kernel.table[n - 1][1];
      } else {
        mpz_class acc = kernel.table[n - 1][d - 1];
        if (d + 1 <= n_max) acc += (k - 1) * kernel.table[n - 1][d + 1];
        kernel.table[n][d] = acc;
      }
    }
  }
  return kernel;
}

double tree_rho_tilde(int k) {
  if (k < 2) throw std::invalid_argument("tree_rho_tilde: requires k >= 2");
  return 2.0 * std::sqrt(static_cast<double>(k - 1));
}

double f_map(int k, double z) {
  if (k < 2) throw std::invalid_argument("f_map: requires k >= 2");
  const double z_max = 1.0 / (2.0 * std::sqrt(static_cast<double>(k - 1)));
  if (std::abs(z) > z_max * (1.0 + 1e-12))
    throw std::domain_error("f_map: |z| exceeds 1/(2*sqrt(k-1))");
  const double radicand = std::max(0.0, 1.0 - 4.0 * (k - 1) * z * z);
  const double root = std::sqrt(radicand);
  // The two algebraic forms of f agree; the second avoids 0/0 at z near 0.
  if (std::abs(z) < 1e-3) return 2.0 * z / (1.0 + root);
  return (1.0 - root) / (2.0 * (k - 1) * z);
}

double tree_green(int k, int d, double z) {
  if (d < 0) throw std::invalid_argument("tree_green: d must be >= 0");
  if (z == 0.0) return d == 0 ? 1.0 : 0.0;
  const double z_max = 1.0 / (2.0 * std::sqrt(static_cast<double>(k - 1)));
  if (std::abs(z) > z_max * (1.0 + 1e-12))
    throw std::domain_error("tree_green: |z| exceeds 1/(2*sqrt(k-1))");
  const double radicand = std::max(0.0, 1.0 - 4.0 * (k - 1) * z * z);
  const double root = std::sqrt(radicand);
  const double amplitude = 2.0 * (k - 1) / (k - 2 + k * root);
  return amplitude * std::pow(f_map(k, z), d);
}

DecompositionVerdict verify_cycle_decomposition(const RootedGraph& g, int k, int n_max) {
  DecompositionVerdict verdict;
  // Regularity must hold wherever a closed walk of length <= n_max can reach.
  const int horizon = (n_max + 1) / 2;
  for (std::uint32_t v = 0; v < g.num_vertices(); ++v) {
    if (g.distance[v] <= horizon && g.degree(v) != k) {
      std::ostringstream os;
      os << "graph is not " << k << "-regular within distance " << horizon << " (vertex " << v
         << " has degree " << g.degree(v) << ")";
      throw std::invalid_argument("verify_cycle_decomposition: " + os.str());
    }
  }

  const std::vector<mpz_class> closed = count_closed_walks(g, n_max);
  const std::vector<mpz_class> star = count_nonbacktracking_cycles(g, n_max);
  const TreeKernel kernel = tree_path_counts(k, n_max);

  verdict.holds = true;
  for (int n = 0; n <= n_max; ++n) {
    mpz_class rhs = 0;
    for (int d = 0; d <= n; ++d) rhs += star[static_cast<std::size_t>(d)] * kernel.count(n, d);
    if (closed[static_cast<std::size_t>(n)] != rhs) {
      verdict.holds = false;
      verdict.first_failure = n;
      std::ostringstream os;
      os << "mismatch at n = " << n << ": C_n = " << closed[static_cast<std::size_t>(n)].get_str()
         << ", decomposition = " << rhs.get_str();
      verdict.note = os.str();
      return verdict;
    }
    verdict.n_checked = n;
  }
  std::ostringstream os;
  os << "C_n = sum_d a*_d c(n,d) exactly for n = 0.." << n_max;
  verdict.note = os.str();
  return verdict;
}

}  // namespace coxperc
