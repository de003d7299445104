#pragma once

// Nerve of a Coxeter system: the simplicial complex on the generators whose
// simplices are the spherical subsets.  Simplices are enumerated by clique
// extension through spherical sets (sound and complete, since subsets of
// spherical sets are spherical); higher dimensions appear only when supported.
// Classification covers exactly the combinatorial checks needed downstream:
// flagness, presence of 3-simplices, and the S^2-triangulation test (the case
// where the Euler count f0 - f1 + f2 = 2 is decisive).

#include <cstddef>
#include <string>
#include <vector>

#include "coxperc/coxeter_matrix.hpp"

namespace coxperc {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Nerve {
  int k = 0;
  // simplices[d] = sorted (d+1)-element vertex sets, lexicographically ordered
  std::vector<std::vector<std::vector<int>>> simplices;
  std::vector<int> edge_orders;        // m(e) parallel to simplices[1]
  std::vector<std::vector<int>> adj;   // 1-skeleton adjacency lists
  int max_vertex_degree = 0;           // Delta
  bool is_flag = true;                 // every 1-skeleton clique spans a simplex
  std::vector<int> flag_witness;       // a violating clique when !is_flag

  std::size_t f0() const { return simplices.empty() ? 0 : simplices[0].size(); }
  std::size_t f1() const { return simplices.size() < 2 ? 0 : simplices[1].size(); }
  std::size_t f2() const { return simplices.size() < 3 ? 0 : simplices[2].size(); }
  bool has_simplex(const std::vector<int>& sorted_vertices) const;
};

struct NerveReport {
  std::size_t f0 = 0, f1 = 0, f2 = 0;
  int delta = 0;
  long euler = 0;  // f0 - f1 + f2
  bool is_flag = false;
  bool has_3_simplex = false;
  bool connected = false;
  bool edges_in_two_triangles = false;
  bool links_single_cycles = false;
  bool is_sphere_triangulation = false;
  std::string detail;
};

Nerve build_nerve(const CoxeterMatrix& m);
NerveReport classify_nerve(const Nerve& nerve);

// The four right-angled compact admissibility checks, all evaluated:
//   orders                    every finite off-diagonal order is 2
//   flag_sphere_triangulation nerve is a flag triangulation of S^2
//   max_degree                2*Delta <= k - 1
//   rank                      k >= 12
std::vector<CheckResult> validate_right_angled_compact(const CoxeterMatrix& m, const Nerve& nerve,
                                                       const NerveReport& report);

}  // namespace coxperc
