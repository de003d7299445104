#pragma once

// Seeded Monte Carlo Bernoulli percolation on Cayley balls with free boundary
// conditions.  Bond mode keeps each edge open with probability p; site mode
// keeps each non-root vertex (the root is declared open).  The per-item
// uniform is a pure hash of (seed, sample, item), so sweeps are coupled across
// p (monotone sample-by-sample), repeated runs are bit-identical, and the
// worker count never changes the result.  "Boundary" means word length
// exactly the ball radius; a saturated ball has no boundary.

#include <cstdint>
#include <string>
#include <vector>

#include "coxperc/cayley_ball.hpp"
#include "coxperc/rooted_graph.hpp"

namespace coxperc {

enum class PercMode { bond, site };
const char* perc_mode_name(PercMode mode);

struct PercolationSample {
  double p = 0.0;
  PercMode mode = PercMode::bond;
  std::uint64_t seed = 0;
  std::vector<char> open;             // per edge (bond) or per vertex (site)
  std::vector<std::int32_t> cluster;  // per vertex: component id, -1 when absent
  std::size_t root_cluster_size = 0;
  bool root_touches_boundary = false;
  std::size_t boundary_cluster_count = 0;  // distinct clusters meeting the boundary
};

struct SweepPoint {
  double p = 0.0;
  double theta_hat = 0.0;                // fraction of samples root -> boundary
  double mean_boundary_clusters = 0.0;
  int samples = 0;
};

struct SweepResult {
  PercMode mode = PercMode::bond;
  std::uint64_t seed = 0;
  std::size_t boundary_size = 0;
  std::vector<SweepPoint> points;
};

// The canonical uniform for (seed, sample, item); exposed for tests.
double percolation_u01(std::uint64_t seed, std::uint64_t sample, std::uint64_t item);

PercolationSample percolation_sample(const CayleyBall& ball, double p, PercMode mode,
                                     std::uint64_t seed);

SweepResult percolation_sweep(const CayleyBall& ball, const std::vector<double>& p_grid,
                              int samples_per_p, PercMode mode, std::uint64_t seed,
                              int workers = 1);

// CSV with columns p, theta_hat, mean_boundary_clusters, samples.
std::string sweep_csv(const SweepResult& sweep);

}  // namespace coxperc
