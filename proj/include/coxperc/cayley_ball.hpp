#pragma once

// Cayley-graph ball enumeration for a Coxeter system (G, S) via the geometric
// representation: each group element is a k x k matrix, deduplicated by a
// canonical serialized key.  Three backends:
//   - int: plain 64-bit integer entries when every finite order is 2 or 3
//     (couplings 0/1/2); exact and fastest, covers the bundled fixtures.
//   - exact: entries in Z[sqrt2, sqrt3, phi] when every finite order is in
//     {2,...,6}; element equality is decided exactly (the representation is
//     faithful).
//   - float: double entries quantized at 1e-9 for keys, with a collision
//     audit — any identification that would assign the same key two different
//     word lengths is a hard error.
//
// Edges are oriented from the shorter element to the longer (the standard
// orientation by word length); each undirected Cayley edge appears exactly
// once in `edges` with tail length + 1 == head length.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxperc/coxeter_matrix.hpp"

namespace coxperc {

struct BallOptions {
  int radius = 4;
  std::size_t max_vertices = 5'000'000;  // resource cap
  bool keep_keys = false;                // retain canonical keys (small balls only)
};

// Thrown when enumeration would exceed max_vertices; carries the last fully
// completed sphere radius.
class BallCapExceeded : public std::runtime_error {
public:
  BallCapExceeded(std::string msg, int radius_reached)
      : std::runtime_error(std::move(msg)), radius_reached(radius_reached) {}
  int radius_reached;
};

struct BallEdge {
  std::uint32_t tail;  // shorter word
  std::uint32_t head;  // longer word, head = tail * gen
  std::uint8_t gen;
};

class CayleyBall {
public:
  int k = 0;                  // rank = Cayley degree
  int radius = 0;             // requested radius
  int radius_reached = 0;     // max word length present
  bool saturated = false;     // whole group enumerated before reaching radius
  std::string backend;        // "int", "exact" or "float"
  std::vector<std::uint16_t> lengths;
  std::vector<std::uint32_t> parent;     // parent[v] * gen == v (v > 0)
  std::vector<std::uint8_t> parent_gen;
  std::vector<BallEdge> edges;
  std::vector<std::size_t> sphere_sizes;  // sphere_sizes[n] = #S(n)
  std::vector<std::string> keys;          // only when keep_keys

  std::size_t num_vertices() const { return lengths.size(); }
  int length(int v) const { return lengths[static_cast<std::size_t>(v)]; }

  // A vertex is interior when all k of its Cayley neighbors lie in the ball:
  // everything when the group saturated, otherwise word length < radius.
  bool interior(std::uint32_t v) const {
    return saturated || lengths[v] < static_cast<std::uint16_t>(radius);
  }

  // One reduced word per element (generator indices), reconstructed from the
  // BFS parent chain.  Diagnostic identity surrogate for the element.
  std::vector<int> reduced_word(std::uint32_t v) const;
};

// BFS enumeration of the ball of the given radius.  Rank is capped at 64
// (inbound-generator bookkeeping uses a 64-bit mask).  Throws BallCapExceeded
// past max_vertices and std::invalid_argument on bad options.
CayleyBall build_ball(const CoxeterMatrix& m, const BallOptions& options);

// Standard-orientation statistics on a ball.  r(v) = inbound edge count;
// q_i(v) = number of outbound edges whose head has r = i, stored densely for
// i = 0..k so any observed r is representable.  Complete (and flagged
// interior) exactly for interior vertices, where r(v) + sum_i q_i(v) = k.
class OrientationStats {
public:
  int k = 0;
  std::vector<std::uint16_t> r;
  std::vector<std::uint8_t> interior_flag;
  std::size_t num_interior = 0;

  int q(std::uint32_t v, int i) const {
    return q_[static_cast<std::size_t>(v) * static_cast<std::size_t>(k + 1) +
              static_cast<std::size_t>(i)];
  }
  bool interior(std::uint32_t v) const { return interior_flag[v] != 0; }

  friend OrientationStats orientation_stats(const CayleyBall& ball);

private:
  std::vector<std::uint16_t> q_;  // (k+1) columns per vertex
};

OrientationStats orientation_stats(const CayleyBall& ball);

}  // namespace coxperc
