#include "coxperc/walk_counts.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace coxperc {
namespace {

using u128 = unsigned __int128;

mpz_class u128_to_mpz(u128 x) {
  mpz_class hi = static_cast<unsigned long>(x >> 64);
  hi <<= 64;
  return hi + mpz_class(static_cast<unsigned long>(x));
}

// Whether all counts up to n_max are guaranteed to fit into u128: walk counts
// are bounded by (max degree)^n.
bool fits_u128(const RootedGraph& g, int n_max) {
  int max_deg = 0;
  for (std::uint32_t v = 0; v < g.num_vertices(); ++v) max_deg = std::max(max_deg, g.degree(v));
  if (max_deg <= 1) return true;
  return static_cast<double>(n_max) * std::log2(static_cast<double>(max_deg)) <= 120.0;
}

template <typename Int>
std::vector<Int> closed_walk_dp(const RootedGraph& g, int n_max) {
  const std::size_t nv = g.num_vertices();
  std::vector<Int> cur(nv, Int(0)), next(nv, Int(0)), out;
  cur[g.root] = 1;
  out.push_back(Int(1));
  for (int n = 1; n <= n_max; ++n) {
    for (std::size_t v = 0; v < nv; ++v) {
      Int acc = 0;
      for (std::uint32_t e = g.offsets[v]; e < g.offsets[v + 1]; ++e)
        acc += cur[g.neighbors[e]];
      next[v] = acc;
    }
    cur.swap(next);
    out.push_back(cur[g.root]);
  }
  return out;
}

// Directed-edge dynamic program: y_n[e] counts non-backtracking walks of
// length n from the root whose last step is the directed edge e; the update
// y_{n+1}[(v,w)] = T_n(v) - y_n[(w,v)] with T_n(v) the inbound total at v
// keeps each step linear in the number of directed edges.
template <typename Int>
std::vector<Int> nonbacktracking_dp(const RootedGraph& g, int n_max,
                                    const std::vector<std::uint32_t>& rev,
                                    const std::vector<std::uint32_t>& tail) {
  const std::size_t ne = g.neighbors.size();
  const std::size_t nv = g.num_vertices();
  std::vector<Int> y(ne, Int(0)), y_next(ne, Int(0)), inbound(nv, Int(0)), out;
  out.push_back(Int(1));  // a*_0 = 1 by convention
  if (n_max >= 1) {
    for (std::size_t e = 0; e < ne; ++e) y[e] = (tail[e] == g.root) ? 1 : 0;
    out.push_back(Int(0));  // a*_1 = 0 on simple graphs
  }
  for (int n = 2; n <= n_max; ++n) {
    std::fill(inbound.begin(), inbound.end(), Int(0));
    for (std::size_t e = 0; e < ne; ++e) inbound[g.neighbors[e]] += y[e];
    for (std::size_t e = 0; e < ne; ++e) y_next[e] = inbound[tail[e]] - y[rev[e]];
    y.swap(y_next);
    // a*_n = inbound total at the root for the new step.
    Int acc = 0;
    for (std::size_t e = 0; e < ne; ++e)
      if (g.neighbors[e] == g.root) acc += y[e];
    out.push_back(acc);
  }
  return out;
}

// Reverse directed edge: the slot in head's list pointing back at tail.
std::vector<std::uint32_t> reverse_edges(const RootedGraph& g) {
  const std::size_t ne = g.neighbors.size();
  std::vector<std::uint32_t> rev(ne, 0);
  for (std::uint32_t v = 0; v < g.num_vertices(); ++v) {
    for (std::uint32_t e = g.offsets[v]; e < g.offsets[v + 1]; ++e) {
      const std::uint32_t w = g.neighbors[e];
      bool found = false;
      for (std::uint32_t f = g.offsets[w]; f < g.offsets[w + 1]; ++f) {
        if (g.neighbors[f] == v) {
          rev[e] = f;
          found = true;
          break;
        }
      }
      if (!found) throw std::invalid_argument("walk counts: graph adjacency is not symmetric");
    }
  }
  return rev;
}

std::vector<std::uint32_t> edge_tails(const RootedGraph& g) {
  std::vector<std::uint32_t> tail(g.neighbors.size(), 0);
  for (std::uint32_t v = 0; v < g.num_vertices(); ++v)
    for (std::uint32_t e = g.offsets[v]; e < g.offsets[v + 1]; ++e) tail[e] = v;
  return tail;
}

}  // namespace

std::vector<mpz_class> count_closed_walks(const RootedGraph& g, int n_max) {
  if (n_max < 0) throw std::invalid_argument("count_closed_walks: n_max must be >= 0");
  std::vector<mpz_class> out;
  if (fits_u128(g, n_max)) {
    for (u128 c : closed_walk_dp<u128>(g, n_max)) out.push_back(u128_to_mpz(c));
  } else {
    out = closed_walk_dp<mpz_class>(g, n_max);
  }
  return out;
}

std::vector<mpz_class> count_nonbacktracking_cycles(const RootedGraph& g, int n_max) {
  if (n_max < 0)
    throw std::invalid_argument("count_nonbacktracking_cycles: n_max must be >= 0");
  const auto rev = reverse_edges(g);
  const auto tail = edge_tails(g);
  std::vector<mpz_class> out;
  if (fits_u128(g, n_max)) {
    for (u128 c : nonbacktracking_dp<u128>(g, n_max, rev, tail)) out.push_back(u128_to_mpz(c));
  } else {
    out = nonbacktracking_dp<mpz_class>(g, n_max, rev, tail);
  }
  return out;
}

std::vector<mpz_class> count_self_avoiding_cycles(const RootedGraph& g, int n_max) {
  if (n_max < 0)
    throw std::invalid_argument("count_self_avoiding_cycles: n_max must be >= 0");
  std::vector<unsigned long long> counts(static_cast<std::size_t>(n_max) + 1, 0);
  std::vector<char> on_path(g.num_vertices(), 0);
  on_path[g.root] = 1;

  // Iterative depth-first walk; a branch is cut as soon as the remaining
  // budget cannot cover the distance back to the root.
  struct Frame {
    std::uint32_t vertex;
    std::uint32_t next_slot;
  };
  std::vector<Frame> stack;
  stack.push_back({g.root, g.offsets[g.root]});
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next_slot == g.offsets[top.vertex + 1]) {
      if (top.vertex != g.root) on_path[top.vertex] = 0;
      stack.pop_back();
      continue;
    }
    const std::uint32_t w = g.neighbors[top.next_slot++];
    const int len = static_cast<int>(stack.size());  // length of walk if we step to w
    if (w == g.root) {
      if (len >= 3 && len <= n_max) ++counts[static_cast<std::size_t>(len)];
      continue;
    }
    if (on_path[w]) continue;
    if (len + g.distance[w] > n_max) continue;
    on_path[w] = 1;
    stack.push_back({w, g.offsets[w]});
  }

  std::vector<mpz_class> out;
  out.reserve(counts.size());
  for (auto c : counts) out.push_back(mpz_class(static_cast<unsigned long>(c)));
  return out;
}

WalkSpectra count_walk_spectra(const CayleyBall& ball, int n_max, int a_cap) {
  const int needed = (n_max + 1) / 2 + 1;
  if (!ball.saturated && ball.radius_reached < needed) {
    std::ostringstream os;
    os << "count_walk_spectra: ball radius " << ball.radius_reached << " insufficient for n_max "
       << n_max << " (need ceil(n_max/2)+1 = " << needed << ")";
    throw std::invalid_argument(os.str());
  }
  const RootedGraph g = from_ball(ball);
  WalkSpectra spectra;
  spectra.root = g.root;
  spectra.closed = count_closed_walks(g, n_max);
  spectra.nonbacktracking = count_nonbacktracking_cycles(g, n_max);
  spectra.self_avoiding = count_self_avoiding_cycles(g, std::min(n_max, a_cap));
  std::ostringstream os;
  if (ball.saturated)
    os << "saturated ball (entire group); all lengths exact";
  else
    os << "radius " << ball.radius_reached << " >= ceil(n_max/2)+1 = " << needed
       << "; counts agree with the infinite graph";
  if (a_cap < n_max) os << "; self-avoiding enumeration capped at n = " << a_cap;
  spectra.note = os.str();
  return spectra;
}

RootedGraph from_ball(const CayleyBall& ball) {
  RootedGraph g;
  g.root = 0;
  const std::size_t nv = ball.num_vertices();
  std::vector<std::uint32_t> degree(nv, 0);
  for (const auto& e : ball.edges) {
    ++degree[e.tail];
    ++degree[e.head];
  }
  g.offsets.assign(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) g.offsets[v + 1] = g.offsets[v] + degree[v];
  g.neighbors.assign(g.offsets[nv], 0);
  std::vector<std::uint32_t> cursor(g.offsets.begin(), g.offsets.end() - 1);
  for (const auto& e : ball.edges) {
    g.neighbors[cursor[e.tail]++] = e.head;
    g.neighbors[cursor[e.head]++] = e.tail;
  }
  g.distance.assign(ball.lengths.begin(), ball.lengths.end());
  return g;
}

RootedGraph complete_graph(int n) {
  if (n < 2) throw std::invalid_argument("complete_graph: need n >= 2");
  RootedGraph g;
  g.root = 0;
  g.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v)
    g.offsets[static_cast<std::size_t>(v) + 1] =
        g.offsets[static_cast<std::size_t>(v)] + static_cast<std::uint32_t>(n - 1);
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      if (w != v) g.neighbors.push_back(static_cast<std::uint32_t>(w));
  g.distance.assign(static_cast<std::size_t>(n), 1);
  g.distance[0] = 0;
  return g;
}

RootedGraph regular_tree_ball(int k, int radius) {
  if (k < 2 || radius < 0) throw std::invalid_argument("regular_tree_ball: need k >= 2, radius >= 0");
  // Layered construction: the root has k children, every other internal
  // vertex has k-1; adjacency is parent/child only.
  std::vector<std::vector<std::uint32_t>> adj(1);
  std::vector<std::uint16_t> dist(1, 0);
  std::vector<std::uint32_t> frontier{0};
  for (int d = 1; d <= radius; ++d) {
    std::vector<std::uint32_t> next_frontier;
    for (std::uint32_t v : frontier) {
      const int children = (v == 0) ? k : k - 1;
      for (int c = 0; c < children; ++c) {
        const auto w = static_cast<std::uint32_t>(adj.size());
        adj.emplace_back();
        dist.push_back(static_cast<std::uint16_t>(d));
        adj[v].push_back(w);
        adj[w].push_back(v);
        next_frontier.push_back(w);
      }
    }
    frontier.swap(next_frontier);
  }
  RootedGraph g;
  g.root = 0;
  g.offsets.assign(adj.size() + 1, 0);
  for (std::size_t v = 0; v < adj.size(); ++v)
    g.offsets[v + 1] = g.offsets[v] + static_cast<std::uint32_t>(adj[v].size());
  for (const auto& list : adj)
    g.neighbors.insert(g.neighbors.end(), list.begin(), list.end());
  g.distance = std::move(dist);
  return g;
}

}  // namespace coxperc
