#include "coxperc/percolation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace coxperc {
namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Union-find over vertices with per-component size and open-boundary-vertex
// count; tracks the number of components holding at least one open boundary
// vertex as merges happen.
class ClusterForest {
public:
  explicit ClusterForest(std::size_t n)
      : parent_(n), size_(n, 1), boundary_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::uint32_t find(std::uint32_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  // Registers an open boundary vertex (its component gains one).
  void mark_boundary(std::uint32_t v) {
    const std::uint32_t r = find(v);
    if (boundary_[r] == 0) ++boundary_components_;
    ++boundary_[r];
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    std::uint32_t ra = find(a), rb = find(b);
    if (ra == rb) return;
    if (size_[ra] < size_[rb]) std::swap(ra, rb);
    if (boundary_[ra] > 0 && boundary_[rb] > 0) --boundary_components_;
    parent_[rb] = ra;
    size_[ra] += size_[rb];
    boundary_[ra] += boundary_[rb];
  }

  std::size_t component_size(std::uint32_t v) { return size_[find(v)]; }
  bool component_touches_boundary(std::uint32_t v) { return boundary_[find(v)] > 0; }
  std::size_t boundary_components() const { return boundary_components_; }

private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
  std::vector<std::uint32_t> boundary_;
  std::size_t boundary_components_ = 0;
};

struct Context {
  RootedGraph graph;
  std::vector<char> is_boundary;      // per vertex
  std::vector<std::uint32_t> edge_tail, edge_head;  // canonical undirected edges
  std::size_t num_items = 0;          // edges (bond) or vertices (site)
  std::size_t boundary_size = 0;
};

Context make_context(const CayleyBall& ball, PercMode mode) {
  Context ctx;
  ctx.graph = from_ball(ball);
  const std::size_t nv = ctx.graph.num_vertices();
  ctx.is_boundary.assign(nv, 0);
  if (!ball.saturated) {
    for (std::size_t v = 0; v < nv; ++v) {
      if (ball.lengths[v] == static_cast<std::uint16_t>(ball.radius_reached)) {
        ctx.is_boundary[v] = 1;
        ++ctx.boundary_size;
      }
    }
  }
  ctx.edge_tail.reserve(ball.edges.size());
  ctx.edge_head.reserve(ball.edges.size());
  for (const auto& e : ball.edges) {
    ctx.edge_tail.push_back(e.tail);
    ctx.edge_head.push_back(e.head);
  }
  ctx.num_items = (mode == PercMode::bond) ? ctx.edge_tail.size() : nv;
  return ctx;
}

struct PointSummary {
  char root_touches = 0;
  std::uint32_t boundary_clusters = 0;
  std::uint32_t root_size = 0;
};

// Evaluates one sample at every p in the (ascending) grid by activating items
// in increasing order of their uniforms.  Item 0 in site mode is the root and
// is open from the start.
std::vector<PointSummary> run_sample(const Context& ctx, PercMode mode,
                                     const std::vector<double>& grid, std::uint64_t seed,
                                     std::uint64_t sample,
                                     std::vector<std::uint32_t>* order_buf,
                                     std::vector<double>* u_buf) {
  const std::size_t nv = ctx.graph.num_vertices();
  std::vector<double>& u = *u_buf;
  u.resize(ctx.num_items);
  for (std::size_t item = 0; item < ctx.num_items; ++item)
    u[item] = percolation_u01(seed, sample, item);
  if (mode == PercMode::site) u[ctx.graph.root] = -1.0;  // root always open

  std::vector<std::uint32_t>& order = *order_buf;
  order.resize(ctx.num_items);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&u](std::uint32_t a, std::uint32_t b) {
    return u[a] != u[b] ? u[a] < u[b] : a < b;
  });

  ClusterForest forest(nv);
  std::vector<char> open(mode == PercMode::site ? nv : std::size_t(0), 0);
  if (mode == PercMode::bond) {
    // All vertices present; every boundary vertex counts from the start.
    for (std::size_t v = 0; v < nv; ++v)
      if (ctx.is_boundary[v]) forest.mark_boundary(static_cast<std::uint32_t>(v));
  }

  const auto activate = [&](std::uint32_t item) {
    if (mode == PercMode::bond) {
      forest.unite(ctx.edge_tail[item], ctx.edge_head[item]);
    } else {
      open[item] = 1;
      if (ctx.is_boundary[item]) forest.mark_boundary(item);
      for (std::uint32_t e = ctx.graph.offsets[item]; e < ctx.graph.offsets[item + 1]; ++e) {
        const std::uint32_t w = ctx.graph.neighbors[e];
        if (open[w]) forest.unite(item, w);
      }
    }
  };

  std::vector<PointSummary> out(grid.size());
  std::size_t cursor = 0;
  for (std::size_t gi = 0; gi < grid.size(); ++gi) {
    while (cursor < ctx.num_items && u[order[cursor]] < grid[gi]) activate(order[cursor++]);
    // In site mode the forest only ever unites open pairs and only open
    // boundary vertices are marked, so closed vertices stay invisible
    // singletons and these reads are correct in both modes.
    PointSummary& s = out[gi];
    s.boundary_clusters = static_cast<std::uint32_t>(forest.boundary_components());
    s.root_touches = forest.component_touches_boundary(ctx.graph.root) ? 1 : 0;
    s.root_size = static_cast<std::uint32_t>(forest.component_size(ctx.graph.root));
  }
  return out;
}

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("percolation: p must lie in [0,1]");
}

}  // namespace

const char* perc_mode_name(PercMode mode) { return mode == PercMode::bond ? "bond" : "site"; }

double percolation_u01(std::uint64_t seed, std::uint64_t sample, std::uint64_t item) {
  std::uint64_t h = splitmix(seed ^ splitmix(sample ^ 0x243F6A8885A308D3ull));
  h = splitmix(h ^ splitmix(item ^ 0x13198A2E03707344ull));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

PercolationSample percolation_sample(const CayleyBall& ball, double p, PercMode mode,
                                     std::uint64_t seed) {
  check_probability(p);
  const Context ctx = make_context(ball, mode);
  const std::size_t nv = ctx.graph.num_vertices();

  PercolationSample sample;
  sample.p = p;
  sample.mode = mode;
  sample.seed = seed;
  sample.open.assign(ctx.num_items, 0);
  for (std::size_t item = 0; item < ctx.num_items; ++item)
    sample.open[item] = percolation_u01(seed, 0, item) < p ? 1 : 0;
  if (mode == PercMode::site) sample.open[ctx.graph.root] = 1;

  ClusterForest forest(nv);
  if (mode == PercMode::bond) {
    for (std::size_t v = 0; v < nv; ++v)
      if (ctx.is_boundary[v]) forest.mark_boundary(static_cast<std::uint32_t>(v));
    for (std::size_t e = 0; e < ctx.edge_tail.size(); ++e)
      if (sample.open[e]) forest.unite(ctx.edge_tail[e], ctx.edge_head[e]);
  } else {
    for (std::size_t v = 0; v < nv; ++v)
      if (sample.open[v] && ctx.is_boundary[v]) forest.mark_boundary(static_cast<std::uint32_t>(v));
    for (std::size_t e = 0; e < ctx.edge_tail.size(); ++e) {
      const std::uint32_t a = ctx.edge_tail[e], b = ctx.edge_head[e];
      if (sample.open[a] && sample.open[b]) forest.unite(a, b);
    }
  }

  sample.cluster.assign(nv, -1);
  for (std::size_t v = 0; v < nv; ++v) {
    const bool present = (mode == PercMode::bond) || sample.open[v];
    if (present) sample.cluster[v] = static_cast<std::int32_t>(forest.find(static_cast<std::uint32_t>(v)));
  }
  sample.root_cluster_size = forest.component_size(ctx.graph.root);
  sample.root_touches_boundary = forest.component_touches_boundary(ctx.graph.root);
  sample.boundary_cluster_count = forest.boundary_components();
  return sample;
}

SweepResult percolation_sweep(const CayleyBall& ball, const std::vector<double>& p_grid,
                              int samples_per_p, PercMode mode, std::uint64_t seed,
                              int workers) {
  if (p_grid.empty()) throw std::invalid_argument("percolation_sweep: empty p grid");
  for (double p : p_grid) check_probability(p);
  if (samples_per_p < 1) throw std::invalid_argument("percolation_sweep: samples must be >= 1");
  if (workers < 1) throw std::invalid_argument("percolation_sweep: workers must be >= 1");
  if (!std::is_sorted(p_grid.begin(), p_grid.end()))
    throw std::invalid_argument("percolation_sweep: p grid must be ascending");

  const Context ctx = make_context(ball, mode);
  const std::size_t n_samples = static_cast<std::size_t>(samples_per_p);

  // One result slot per (sample, grid point); workers fill disjoint slots, so
  // the reduction below is identical for every worker count.
  std::vector<std::vector<PointSummary>> slots(n_samples);
  const int n_workers = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(workers), n_samples));
  const auto work = [&](int w) {
    std::vector<std::uint32_t> order_buf;
    std::vector<double> u_buf;
    for (std::size_t s = static_cast<std::size_t>(w); s < n_samples;
         s += static_cast<std::size_t>(n_workers))
      slots[s] = run_sample(ctx, mode, p_grid, seed, s, &order_buf, &u_buf);
  };
  if (n_workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_workers));
    for (int w = 0; w < n_workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  SweepResult result;
  result.mode = mode;
  result.seed = seed;
  result.boundary_size = ctx.boundary_size;
  result.points.resize(p_grid.size());
  for (std::size_t gi = 0; gi < p_grid.size(); ++gi) {
    SweepPoint& pt = result.points[gi];
    pt.p = p_grid[gi];
    pt.samples = samples_per_p;
    std::size_t touches = 0, clusters = 0;
    for (std::size_t s = 0; s < n_samples; ++s) {
      touches += slots[s][gi].root_touches;
      clusters += slots[s][gi].boundary_clusters;
    }
    pt.theta_hat = static_cast<double>(touches) / static_cast<double>(n_samples);
    pt.mean_boundary_clusters = static_cast<double>(clusters) / static_cast<double>(n_samples);
  }
  return result;
}

std::string sweep_csv(const SweepResult& sweep) {
  std::ostringstream os;
  os << "p,theta_hat,mean_boundary_clusters,samples\n";
  for (const auto& pt : sweep.points)
    os << pt.p << ',' << pt.theta_hat << ',' << pt.mean_boundary_clusters << ',' << pt.samples
       << '\n';
  return os.str();
}

}  // namespace coxperc
