#include "coxperc/nerve.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace coxperc {
namespace {

std::string join_vertices(const std::vector<int>& vs) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << vs[i];
  os << "}";
  return os.str();
}

// Breadth-first reachability over an adjacency-list graph restricted to
// `nodes`; returns true when every listed node is reached from the first.
bool connected_subgraph(const std::vector<int>& nodes,
                        const std::vector<std::vector<int>>& adj) {
  if (nodes.size() <= 1) return true;
  std::vector<char> in_set(adj.size(), 0), seen(adj.size(), 0);
  for (int v : nodes) in_set[static_cast<std::size_t>(v)] = 1;
  std::queue<int> q;
  q.push(nodes[0]);
  seen[static_cast<std::size_t>(nodes[0])] = 1;
  std::size_t reached = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (!in_set[static_cast<std::size_t>(w)] || seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      ++reached;
      q.push(w);
    }
  }
  return reached == nodes.size();
}

}  // namespace

bool Nerve::has_simplex(const std::vector<int>& sorted_vertices) const {
  if (sorted_vertices.empty()) return false;
  const std::size_t d = sorted_vertices.size() - 1;
  if (d >= simplices.size()) return false;
  const auto& level = simplices[d];
  // Levels are produced in lexicographic order, so binary search applies.
  auto it = std::lower_bound(level.begin(), level.end(), sorted_vertices);
  return it != level.end() && *it == sorted_vertices;
}

Nerve build_nerve(const CoxeterMatrix& m) {
  const int k = m.rank();
  Nerve nerve;
  nerve.k = k;
  nerve.adj.assign(static_cast<std::size_t>(k), {});

  nerve.simplices.emplace_back();
  for (int s = 0; s < k; ++s) nerve.simplices[0].push_back({s});
  if (k < 2) return nerve;

  // Edges: pairs generating a finite (dihedral) group.
  std::vector<char> adjacent(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0);
  nerve.simplices.emplace_back();
  for (int s = 0; s < k; ++s) {
    for (int t = s + 1; t < k; ++t) {
      if (m.is_infinite_order(s, t)) continue;
      nerve.simplices[1].push_back({s, t});
      nerve.edge_orders.push_back(m.order(s, t));
      nerve.adj[static_cast<std::size_t>(s)].push_back(t);
      nerve.adj[static_cast<std::size_t>(t)].push_back(s);
      adjacent[static_cast<std::size_t>(s) * static_cast<std::size_t>(k) + static_cast<std::size_t>(t)] = 1;
      adjacent[static_cast<std::size_t>(t) * static_cast<std::size_t>(k) + static_cast<std::size_t>(s)] = 1;
    }
  }
  for (int s = 0; s < k; ++s)
    nerve.max_vertex_degree =
        std::max(nerve.max_vertex_degree, static_cast<int>(nerve.adj[static_cast<std::size_t>(s)].size()));

  // Extend spherical cliques one vertex at a time.  A clique all of whose
  // proper subsets are spherical either is spherical (a new simplex) or is a
  // flag violation; cliques over an already non-spherical subset are skipped,
  // which loses nothing because the smaller violation was recorded first.
  while (!nerve.simplices.back().empty()) {
    const auto& prev = nerve.simplices.back();
    std::vector<std::vector<int>> next;
    for (const auto& simplex : prev) {
      for (int v = simplex.back() + 1; v < k; ++v) {
        bool clique = true;
        for (int u : simplex) {
          if (!adjacent[static_cast<std::size_t>(u) * static_cast<std::size_t>(k) + static_cast<std::size_t>(v)]) {
            clique = false;
            break;
          }
        }
        if (!clique) continue;
        std::vector<int> candidate = simplex;
        candidate.push_back(v);
        if (is_spherical(m, candidate)) {
          next.push_back(std::move(candidate));
        } else if (nerve.is_flag) {
          nerve.is_flag = false;
          nerve.flag_witness = std::move(candidate);
        }
      }
    }
    if (next.empty()) break;
    nerve.simplices.push_back(std::move(next));
  }
  return nerve;
}

NerveReport classify_nerve(const Nerve& nerve) {
  NerveReport rep;
  rep.f0 = nerve.f0();
  rep.f1 = nerve.f1();
  rep.f2 = nerve.f2();
  rep.delta = nerve.max_vertex_degree;
  rep.euler = static_cast<long>(rep.f0) - static_cast<long>(rep.f1) + static_cast<long>(rep.f2);
  rep.is_flag = nerve.is_flag;
  rep.has_3_simplex = nerve.simplices.size() > 3 && !nerve.simplices[3].empty();

  const int k = nerve.k;
  std::vector<int> all(static_cast<std::size_t>(k));
  for (int s = 0; s < k; ++s) all[static_cast<std::size_t>(s)] = s;
  rep.connected = connected_subgraph(all, nerve.adj);

  std::ostringstream detail;
  if (!rep.is_flag) detail << "non-flag clique " << join_vertices(nerve.flag_witness) << "; ";
  if (!rep.connected) detail << "1-skeleton disconnected; ";

  // Every edge must lie in exactly two triangles for a closed surface.
  if (rep.f2 > 0) {
    std::vector<int> tri_count(nerve.simplices[1].size(), 0);
    auto edge_index = [&](int a, int b) {
      const std::vector<int> e{std::min(a, b), std::max(a, b)};
      auto it = std::lower_bound(nerve.simplices[1].begin(), nerve.simplices[1].end(), e);
      return static_cast<std::size_t>(it - nerve.simplices[1].begin());
    };
    for (const auto& tri : nerve.simplices[2]) {
      ++tri_count[edge_index(tri[0], tri[1])];
      ++tri_count[edge_index(tri[0], tri[2])];
      ++tri_count[edge_index(tri[1], tri[2])];
    }
    rep.edges_in_two_triangles = true;
    for (std::size_t e = 0; e < tri_count.size(); ++e) {
      if (tri_count[e] != 2) {
        rep.edges_in_two_triangles = false;
        detail << "edge " << join_vertices(nerve.simplices[1][e]) << " lies in " << tri_count[e]
               << " triangles; ";
        break;
      }
    }

    // Vertex links must each be a single cycle: every link vertex of degree
    // two and the link connected with at least three vertices.
    rep.links_single_cycles = true;
    for (int v = 0; v < k && rep.links_single_cycles; ++v) {
      const auto& link = nerve.adj[static_cast<std::size_t>(v)];
      std::vector<std::vector<int>> link_adj(static_cast<std::size_t>(k));
      for (const auto& tri : nerve.simplices[2]) {
        if (std::find(tri.begin(), tri.end(), v) == tri.end()) continue;
        std::vector<int> rest;
        for (int u : tri)
          if (u != v) rest.push_back(u);
        link_adj[static_cast<std::size_t>(rest[0])].push_back(rest[1]);
        link_adj[static_cast<std::size_t>(rest[1])].push_back(rest[0]);
      }
      bool ok = link.size() >= 3 && connected_subgraph(link, link_adj);
      for (int u : link)
        if (link_adj[static_cast<std::size_t>(u)].size() != 2) ok = false;
      if (!ok) {
        rep.links_single_cycles = false;
        detail << "link of vertex " << v << " is not a single cycle; ";
      }
    }
  } else {
    rep.edges_in_two_triangles = false;
    rep.links_single_cycles = false;
    detail << "no triangles; ";
  }

  rep.is_sphere_triangulation = rep.connected && !rep.has_3_simplex && rep.edges_in_two_triangles &&
                                rep.links_single_cycles && rep.euler == 2;
  if (rep.has_3_simplex) detail << "contains a 3-simplex; ";
  if (!rep.is_sphere_triangulation && rep.euler != 2) detail << "Euler count " << rep.euler << "; ";
  rep.detail = detail.str();
  return rep;
}

std::vector<CheckResult> validate_right_angled_compact(const CoxeterMatrix& m, const Nerve& nerve,
                                                       const NerveReport& report) {
  std::vector<CheckResult> checks;
  const int k = m.rank();

  CheckResult orders{"orders", true, "all finite orders equal 2"};
  for (int s = 0; s < k && orders.passed; ++s) {
    for (int t = s + 1; t < k; ++t) {
      if (m.is_infinite_order(s, t) || m.order(s, t) == 2) continue;
      orders.passed = false;
      std::ostringstream os;
      os << "order(" << s << "," << t << ") = " << m.order(s, t);
      orders.detail = os.str();
      break;
    }
  }
  checks.push_back(std::move(orders));

  {
    CheckResult flag{"flag_sphere_triangulation", report.is_flag && report.is_sphere_triangulation,
                     ""};
    std::ostringstream os;
    os << "flag=" << (report.is_flag ? "yes" : "no") << ", S^2 triangulation="
       << (report.is_sphere_triangulation ? "yes" : "no");
    if (!flag.passed && !report.detail.empty()) os << " (" << report.detail << ")";
    flag.detail = os.str();
    checks.push_back(std::move(flag));
  }

  {
    CheckResult degree{"max_degree", 2 * report.delta <= k - 1, ""};
    std::ostringstream os;
    os << "Delta = " << report.delta << ", bound (k-1)/2 = " << (k - 1) << "/2";
    degree.detail = os.str();
    checks.push_back(std::move(degree));
  }

  {
    CheckResult rank{"rank", k >= 12, ""};
    std::ostringstream os;
    os << "k = " << k << ", required k >= 12";
    rank.detail = os.str();
    checks.push_back(std::move(rank));
  }
  return checks;
}

}  // namespace coxperc
