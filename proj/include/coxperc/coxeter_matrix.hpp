#pragma once

// Coxeter matrix of a reflection group: symmetric order matrix m(s,t) with
// m(s,s) = 1 and off-diagonal entries in {2,3,...} or infinity, plus the
// geometric flags asserted by the input (whether the group is the reflection
// group of a finite-sided hyperbolic polyhedron, right-angled, compact).
// The flags are caller assertions about geometry the matrix alone cannot
// witness; everything checkable from the matrix is validated here or in the
// nerve module.

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace coxperc {

struct ClassFlags {
  bool hyperbolic_polyhedral = false;
  bool right_angled = false;
  bool compact = false;
};

class CoxeterMatrix {
public:
  // Off-diagonal infinite order sentinel.
  static constexpr int kInfinity = 0;

  CoxeterMatrix() = default;
  // Validates shape, symmetry, diagonal 1, off-diagonal >= 2 (or kInfinity),
  // and flag consistency (right_angled => every finite off-diagonal order is 2).
  // Throws std::invalid_argument on violation.
  CoxeterMatrix(Eigen::MatrixXi orders, ClassFlags flags);

  int rank() const { return static_cast<int>(orders_.rows()); }
  // Order m(s,t); kInfinity encodes infinity.
  int order(int s, int t) const { return orders_(s, t); }
  bool is_infinite_order(int s, int t) const { return orders_(s, t) == kInfinity; }
  const Eigen::MatrixXi& orders() const { return orders_; }
  const ClassFlags& flags() const { return flags_; }

  // True when the geometric representation has exactly representable entries:
  // every finite off-diagonal order lies in {2,3,4,5,6}.
  bool exact_backend_available() const;

  // Cosine (Gram) matrix with entries -cos(pi/m(s,t)), entry -1 for m infinite,
  // restricted to the generator subset `sub` (indices into 0..rank-1).
  Eigen::MatrixXd cosine_matrix(const std::vector<int>& sub) const;

private:
  Eigen::MatrixXi orders_;
  ClassFlags flags_;
};

// Parse the JSON input document:
//   { "rank": k, "orders": [[...]], "infinity_token": "inf", "flags": {...} }
// Order entries are integers or the infinity token string.  Throws
// std::invalid_argument with a specific message on any schema or matrix
// violation (asymmetry, bad diagonal, order below 2, rank mismatch,
// right_angled flag with a finite order != 2).
CoxeterMatrix parse_coxeter_input(const std::string& json_text);

// Serialize back to the same schema (used by the fixture dump command).
std::string coxeter_input_json(const CoxeterMatrix& m, int indent = 2);

// Sphericity of the standard parabolic subgroup generated by `sub`:
//  - singleton: always true
//  - pair: finite order
//  - triple: all orders finite and 1/m12 + 1/m13 + 1/m23 > 1 (exact integers)
//  - rank >= 4: every sub-triple spherical (exact) and all leading principal
//    minors of the cosine matrix > 1e-9
// The empty subset is rejected (std::invalid_argument).
bool is_spherical(const CoxeterMatrix& m, const std::vector<int>& sub);

}  // namespace coxperc
