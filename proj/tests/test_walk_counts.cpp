#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "coxperc/cayley_ball.hpp"
#include "coxperc/fixtures.hpp"
#include "coxperc/rooted_graph.hpp"
#include "coxperc/walk_counts.hpp"

using namespace coxperc;

namespace {

// Reference enumerators, deliberately naive: walk the graph step by step and
// count, so any indexing or recurrence bug in the DP implementations shows up
// as a mismatch on small instances.

long brute_closed(const RootedGraph& g, std::uint32_t v, int left) {
  if (left == 0) return v == g.root ? 1 : 0;
  long total = 0;
  for (std::uint32_t i = g.offsets[v]; i < g.offsets[v + 1]; ++i)
    total += brute_closed(g, g.neighbors[i], left - 1);
  return total;
}

long brute_nonbacktracking(const RootedGraph& g, std::uint32_t prev, std::uint32_t v,
                           int left) {
  if (left == 0) return v == g.root ? 1 : 0;
  long total = 0;
  for (std::uint32_t i = g.offsets[v]; i < g.offsets[v + 1]; ++i) {
    const std::uint32_t w = g.neighbors[i];
    if (w == prev) continue;
    total += brute_nonbacktracking(g, v, w, left - 1);
  }
  return total;
}

long brute_self_avoiding(const RootedGraph& g, std::vector<char>& on_path, std::uint32_t v,
                         int len, int target) {
  long total = 0;
  for (std::uint32_t i = g.offsets[v]; i < g.offsets[v + 1]; ++i) {
    const std::uint32_t w = g.neighbors[i];
    if (w == g.root) {
      if (len + 1 == target) ++total;
      continue;
    }
    if (len + 1 >= target || on_path[w]) continue;
    on_path[w] = 1;
    total += brute_self_avoiding(g, on_path, w, len + 1, target);
    on_path[w] = 0;
  }
  return total;
}

long brute_saw(const RootedGraph& g, int n) {
  if (n < 3) return 0;
  std::vector<char> on_path(g.num_vertices(), 0);
  on_path[g.root] = 1;
  return brute_self_avoiding(g, on_path, g.root, 0, n);
}

void cross_validate(const RootedGraph& g, int n_max) {
  const std::vector<mpz_class> closed = count_closed_walks(g, n_max);
  const std::vector<mpz_class> nb = count_nonbacktracking_cycles(g, n_max);
  const std::vector<mpz_class> saw = count_self_avoiding_cycles(g, n_max);
  REQUIRE(closed.size() == static_cast<std::size_t>(n_max) + 1);
  REQUIRE(nb.size() == closed.size());
  REQUIRE(saw.size() == closed.size());

  for (int n = 0; n <= n_max; ++n) {
    CHECK(closed[static_cast<std::size_t>(n)] == brute_closed(g, g.root, n));
    // A fresh walk has no previous vertex; use an impossible index.
    const std::uint32_t none = static_cast<std::uint32_t>(g.num_vertices());
    const long nb_expect = n == 0 ? 1 : brute_nonbacktracking(g, none, g.root, n);
    CHECK(nb[static_cast<std::size_t>(n)] == nb_expect);
    CHECK(saw[static_cast<std::size_t>(n)] == brute_saw(g, n));
    // Chain: every cycle is a nonbacktracking closed walk is a closed walk.
    if (n >= 3) {
      CHECK(saw[static_cast<std::size_t>(n)] <= nb[static_cast<std::size_t>(n)]);
      CHECK(nb[static_cast<std::size_t>(n)] <= closed[static_cast<std::size_t>(n)]);
    }
  }
}

}  // namespace

TEST_CASE("helper graphs have the advertised shape") {
  const RootedGraph k5 = complete_graph(5);
  CHECK(k5.num_vertices() == 5);
  CHECK(k5.num_edges() == 10);
  for (std::uint32_t v = 0; v < 5; ++v) CHECK(k5.degree(v) == 4);

  const RootedGraph tree = regular_tree_ball(3, 2);
  CHECK(tree.num_vertices() == 10);  // 1 + 3 + 6
  CHECK(tree.degree(tree.root) == 3);
  CHECK(tree.distance[9] == 2);
}

TEST_CASE("complete graph K5: frozen values") {
  const RootedGraph g = complete_graph(5);
  const std::vector<mpz_class> closed = count_closed_walks(g, 4);
  CHECK(closed[0] == 1);
  CHECK(closed[1] == 0);
  CHECK(closed[2] == 4);
  CHECK(closed[3] == 12);
  CHECK(closed[4] == 52);

  const std::vector<mpz_class> nb = count_nonbacktracking_cycles(g, 4);
  CHECK(nb[0] == 1);
  CHECK(nb[1] == 0);
  CHECK(nb[2] == 0);  // the immediate return is exactly a backtrack
  CHECK(nb[3] == 12);
  CHECK(nb[4] == 24);

  const std::vector<mpz_class> saw = count_self_avoiding_cycles(g, 5);
  CHECK(saw[2] == 0);
  CHECK(saw[3] == 12);  // ordered vertex pairs: 4*3
  CHECK(saw[4] == 24);
  CHECK(saw[5] == 24);
}

TEST_CASE("DP implementations match naive enumeration exhaustively") {
  cross_validate(complete_graph(4), 7);
  cross_validate(complete_graph(5), 6);
  cross_validate(regular_tree_ball(3, 3), 6);

  BallOptions opt;
  opt.radius = 3;
  cross_validate(from_ball(build_ball(lambert_cube_fixture(), opt)), 6);
  cross_validate(from_ball(build_ball(infinite_dihedral_fixture(), opt)), 6);
}

TEST_CASE("trees carry no cycles at all") {
  const RootedGraph tree = regular_tree_ball(4, 4);
  const std::vector<mpz_class> nb = count_nonbacktracking_cycles(tree, 8);
  const std::vector<mpz_class> saw = count_self_avoiding_cycles(tree, 8);
  for (int n = 1; n <= 8; ++n) {
    CHECK(nb[static_cast<std::size_t>(n)] == 0);
    CHECK(saw[static_cast<std::size_t>(n)] == 0);
  }
}

TEST_CASE("dodecahedron group ball: commuting pairs make the short cycles") {
  BallOptions opt;
  opt.radius = 3;
  const CayleyBall ball = build_ball(dodecahedron_fixture(), opt);
  const WalkSpectra spectra = count_walk_spectra(ball, 4);

  // Bipartite: nothing of odd length.
  CHECK(spectra.closed[1] == 0);
  CHECK(spectra.closed[3] == 0);
  CHECK(spectra.closed[2] == 12);

  // 30 adjacent (commuting) face pairs, each a geometric square through the
  // origin, counted once per orientation.
  CHECK(spectra.self_avoiding[4] == 60);
  CHECK(spectra.nonbacktracking[4] == 60);

  // C_4 = c(4,0) + a*_4 c(4,4) = (2k^2 - k) + 60 for k = 12.
  CHECK(spectra.closed[4] == 276 + 60);
}

TEST_CASE("finite group: spectra on a saturated ball need no radius slack") {
  Eigen::MatrixXi orders(3, 3);
  orders << 1, 2, 5, 2, 1, 3, 5, 3, 1;  // H3 again, any generator order works
  const CoxeterMatrix h3(orders, ClassFlags{});
  BallOptions opt;
  opt.radius = 30;
  const CayleyBall ball = build_ball(h3, opt);
  REQUIRE(ball.saturated);

  const WalkSpectra spectra = count_walk_spectra(ball, 6);
  const RootedGraph g = from_ball(ball);
  for (int n = 0; n <= 6; ++n)
    CHECK(spectra.closed[static_cast<std::size_t>(n)] == brute_closed(g, g.root, n));
}

TEST_CASE("walk spectra enforce the boundary-safety radius") {
  BallOptions opt;
  opt.radius = 2;
  const CayleyBall ball = build_ball(dodecahedron_fixture(), opt);
  CHECK_THROWS_AS(count_walk_spectra(ball, 4), std::invalid_argument);  // needs radius 3
  CHECK_NOTHROW(count_walk_spectra(ball, 2));
}
