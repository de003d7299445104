#pragma once

// Exact counting oracles on rooted graphs: closed walks C_n from the root,
// non-backtracking closed walks a*_n (immediate reversals forbidden along the
// walk; the wrap-around pair is not constrained), and self-avoiding cycles a_n
// (oriented, so each geometric cycle through the root counts twice).
// Conventions at the degenerate lengths: C_0 = a*_0 = 1, while a_0 = a_1 =
// a_2 = 0 and a*_1 = a*_2 = 0 on simple graphs.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "coxperc/cayley_ball.hpp"
#include "coxperc/rooted_graph.hpp"

namespace coxperc {

// C_n for n = 0..n_max by vector iteration of the adjacency operator.
std::vector<mpz_class> count_closed_walks(const RootedGraph& g, int n_max);

// a*_n for n = 0..n_max by dynamic programming on directed-edge states.
std::vector<mpz_class> count_nonbacktracking_cycles(const RootedGraph& g, int n_max);

// a_n for n = 0..n_max by depth-first enumeration with distance pruning.
// Exponential; intended for small n (the spectra wrapper caps it at 16).
std::vector<mpz_class> count_self_avoiding_cycles(const RootedGraph& g, int n_max);

struct WalkSpectra {
  std::uint32_t root = 0;
  std::vector<mpz_class> closed;           // C_n, n = 0..n_max
  std::vector<mpz_class> nonbacktracking;  // a*_n, n = 0..n_max
  std::vector<mpz_class> self_avoiding;    // a_n, n = 0..min(n_max, a_cap)
  std::string note;                        // validity radius note
};

// All three sequences on a Cayley ball.  Requires radius >= ceil(n_max/2)+1 so
// that no counted walk can feel the truncated boundary; throws otherwise.
WalkSpectra count_walk_spectra(const CayleyBall& ball, int n_max, int a_cap = 16);

}  // namespace coxperc
