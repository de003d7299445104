#pragma once

// A finite simple graph with a distinguished root, in compressed adjacency
// form, together with distances from the root.  This is the shared substrate
// for the exact walk-counting oracles and the percolation harness; Cayley
// balls convert into it, and two synthetic families (complete graphs, regular
// tree balls) exist for cross-checks against hand-countable cases.

#include <cstdint>
#include <vector>

namespace coxperc {

struct CayleyBall;

struct RootedGraph {
  std::uint32_t root = 0;
  std::vector<std::uint32_t> offsets;    // size num_vertices()+1
  std::vector<std::uint32_t> neighbors;  // concatenated adjacency lists
  std::vector<std::uint16_t> distance;   // BFS distance from root

  std::size_t num_vertices() const { return offsets.empty() ? 0 : offsets.size() - 1; }
  std::size_t num_edges() const { return neighbors.size() / 2; }
  int degree(std::uint32_t v) const {
    return static_cast<int>(offsets[v + 1] - offsets[v]);
  }
};

RootedGraph from_ball(const CayleyBall& ball);
RootedGraph complete_graph(int n);               // K_n rooted at 0, (n-1)-regular
RootedGraph regular_tree_ball(int k, int radius);  // ball of T_k around its root

}  // namespace coxperc
