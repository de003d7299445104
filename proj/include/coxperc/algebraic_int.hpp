#pragma once

// Exact arithmetic in the ring Z[sqrt2, sqrt3, phi] (phi = golden ratio,
// phi^2 = phi + 1), a free Z-module of rank 8 with basis
//
//     { 1, sqrt2, sqrt3, sqrt6 } x { 1, phi },  index = a + 2b + 4f
//
// where a, b, f are the exponents of sqrt2, sqrt3, phi.  This ring contains
// 2cos(pi/m) for every m in {2,3,4,5,6} as well as sqrt5 = 2*phi - 1, so the
// geometric-representation matrices of a Coxeter system whose finite orders
// all lie in {2,...,6} have entries here and group elements compare exactly.
//
// Coefficients are int64; every multiplication accumulates in __int128 and
// throws on overflow rather than wrapping.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <Eigen/Core>

namespace coxperc {

class AlgebraicInt {
public:
  AlgebraicInt() = default;
  AlgebraicInt(std::int64_t n) { c_[0] = n; }  // implicit: Scalar(0), Scalar(1)

  static AlgebraicInt sqrt2() { return basis(1); }
  static AlgebraicInt sqrt3() { return basis(2); }
  static AlgebraicInt sqrt6() { return basis(3); }
  static AlgebraicInt golden() { return basis(4); }

  // 2cos(pi/m) for the exactly-representable orders; m = 0 encodes infinity
  // (the standard bilinear form puts -1 there, i.e. 2cos "=" 2).
  // Returns false if m is not representable in this ring.
  static bool two_cos_pi_over(int m, AlgebraicInt& out);

  std::int64_t coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
  bool is_zero() const;
  double to_double() const;

  AlgebraicInt operator-() const;
  AlgebraicInt& operator+=(const AlgebraicInt& o);
  AlgebraicInt& operator-=(const AlgebraicInt& o);
  AlgebraicInt& operator*=(const AlgebraicInt& o);

  friend AlgebraicInt operator+(AlgebraicInt a, const AlgebraicInt& b) { return a += b; }
  friend AlgebraicInt operator-(AlgebraicInt a, const AlgebraicInt& b) { return a -= b; }
  friend AlgebraicInt operator*(AlgebraicInt a, const AlgebraicInt& b) { return a *= b; }
  friend bool operator==(const AlgebraicInt& a, const AlgebraicInt& b) { return a.c_ == b.c_; }
  friend bool operator!=(const AlgebraicInt& a, const AlgebraicInt& b) { return a.c_ != b.c_; }

  // Compact serialization: one nonzero-mask byte, then zigzag varints of the
  // nonzero coefficients.  Used for canonical BFS keys.
  void serialize_to(std::string& out) const;

  friend std::ostream& operator<<(std::ostream& os, const AlgebraicInt& x);

private:
  static AlgebraicInt basis(int i) {
    AlgebraicInt r;
    r.c_[static_cast<std::size_t>(i)] = 1;
    return r;
  }
  std::array<std::int64_t, 8> c_{};
};

using ExactMatrix = Eigen::Matrix<AlgebraicInt, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace coxperc

namespace Eigen {
template <>
struct NumTraits<coxperc::AlgebraicInt> : GenericNumTraits<coxperc::AlgebraicInt> {
  typedef coxperc::AlgebraicInt Real;
  typedef coxperc::AlgebraicInt NonInteger;
  typedef coxperc::AlgebraicInt Nested;
  typedef std::int64_t Literal;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 8,
    MulCost = 64
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
