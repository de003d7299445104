#include "coxperc/algebraic_int.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace coxperc {

namespace {

// Basis index decomposition: i = a + 2b + 4f with a,b,f in {0,1}.
struct MulRule {
  // product of basis i and basis j lands on one or two basis elements:
  // `factor * basis[target]`, plus for phi^2 the extra `factor * basis[target2]`.
  std::int64_t factor;
  int target;
  int target2;  // -1 if absent
};

// rule(i, j): (sqrt2^a1 sqrt3^b1 phi^f1)(sqrt2^a2 sqrt3^b2 phi^f2)
//   radical part: 2^((a1+a2)/2) * 3^((b1+b2)/2) * sqrt2^((a1+a2)%2) sqrt3^((b1+b2)%2)
//   phi part: phi^(f1+f2), with phi^2 = 1 + phi.
constexpr MulRule make_rule(int i, int j) {
  const int a1 = i & 1, b1 = (i >> 1) & 1, f1 = (i >> 2) & 1;
  const int a2 = j & 1, b2 = (j >> 1) & 1, f2 = (j >> 2) & 1;
  std::int64_t factor = 1;
  if (a1 + a2 == 2) factor *= 2;
  if (b1 + b2 == 2) factor *= 3;
  const int rad = ((a1 + a2) & 1) + 2 * ((b1 + b2) & 1);
  const int fs = f1 + f2;
  if (fs < 2) return MulRule{factor, rad + 4 * fs, -1};
  return MulRule{factor, rad, rad + 4};  // phi^2 = 1 + phi
}

struct MulTable {
  MulRule r[8][8];
  constexpr MulTable() : r{} {
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) r[i][j] = make_rule(i, j);
  }
};
constexpr MulTable kMul{};

inline std::int64_t checked_cast(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw std::overflow_error("AlgebraicInt: coefficient overflow (entry growth exceeded int64)");
  return static_cast<std::int64_t>(v);
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  return checked_cast(static_cast<__int128>(a) + b);
}

void put_varint_zigzag(std::string& out, std::int64_t v) {
  std::uint64_t u = (static_cast<std::uint64_t>(v) << 1) ^ static_cast<std::uint64_t>(v >> 63);
  while (u >= 0x80) {
    out.push_back(static_cast<char>(u | 0x80));
    u >>= 7;
  }
  out.push_back(static_cast<char>(u));
}

}  // namespace

bool AlgebraicInt::two_cos_pi_over(int m, AlgebraicInt& out) {
  switch (m) {
    case 0: out = AlgebraicInt(2); return true;  // infinite order
    case 2: out = AlgebraicInt(0); return true;
    case 3: out = AlgebraicInt(1); return true;
    case 4: out = sqrt2(); return true;
    case 5: out = golden(); return true;  // 2cos(pi/5) = (1+sqrt5)/2
    case 6: out = sqrt3(); return true;
    default: return false;
  }
}

bool AlgebraicInt::is_zero() const {
  for (auto v : c_)
    if (v != 0) return false;
  return true;
}

double AlgebraicInt::to_double() const {
  static const double basis_val[8] = {
      1.0,
      std::sqrt(2.0),
      std::sqrt(3.0),
      std::sqrt(6.0),
      (1.0 + std::sqrt(5.0)) / 2.0,
      std::sqrt(2.0) * (1.0 + std::sqrt(5.0)) / 2.0,
      std::sqrt(3.0) * (1.0 + std::sqrt(5.0)) / 2.0,
      std::sqrt(6.0) * (1.0 + std::sqrt(5.0)) / 2.0,
  };
  double v = 0.0;
  for (int i = 0; i < 8; ++i) v += static_cast<double>(c_[static_cast<std::size_t>(i)]) * basis_val[i];
  return v;
}

AlgebraicInt AlgebraicInt::operator-() const {
  AlgebraicInt r;
  for (std::size_t i = 0; i < 8; ++i) r.c_[i] = checked_cast(-static_cast<__int128>(c_[i]));
  return r;
}

AlgebraicInt& AlgebraicInt::operator+=(const AlgebraicInt& o) {
  for (std::size_t i = 0; i < 8; ++i) c_[i] = checked_add(c_[i], o.c_[i]);
  return *this;
}

AlgebraicInt& AlgebraicInt::operator-=(const AlgebraicInt& o) {
  for (std::size_t i = 0; i < 8; ++i)
    c_[i] = checked_cast(static_cast<__int128>(c_[i]) - o.c_[i]);
  return *this;
}

AlgebraicInt& AlgebraicInt::operator*=(const AlgebraicInt& o) {
  __int128 acc[8] = {};
  for (int i = 0; i < 8; ++i) {
    const std::int64_t xi = c_[static_cast<std::size_t>(i)];
    if (xi == 0) continue;
    for (int j = 0; j < 8; ++j) {
      const std::int64_t yj = o.c_[static_cast<std::size_t>(j)];
      if (yj == 0) continue;
      const MulRule& r = kMul.r[i][j];
      const __int128 p = static_cast<__int128>(xi) * yj * r.factor;
      acc[r.target] += p;
      if (r.target2 >= 0) acc[r.target2] += p;
    }
  }
  for (std::size_t i = 0; i < 8; ++i) c_[i] = checked_cast(acc[i]);
  return *this;
}

void AlgebraicInt::serialize_to(std::string& out) const {
  unsigned mask = 0;
  for (int i = 0; i < 8; ++i)
    if (c_[static_cast<std::size_t>(i)] != 0) mask |= (1u << i);
  out.push_back(static_cast<char>(mask));
  for (int i = 0; i < 8; ++i)
    if (c_[static_cast<std::size_t>(i)] != 0) put_varint_zigzag(out, c_[static_cast<std::size_t>(i)]);
}

std::ostream& operator<<(std::ostream& os, const AlgebraicInt& x) {
  static const char* names[8] = {"", "r2", "r3", "r6", "g", "g*r2", "g*r3", "g*r6"};
  bool any = false;
  for (int i = 0; i < 8; ++i) {
    const std::int64_t v = x.coeff(i);
    if (v == 0) continue;
    if (any) os << (v > 0 ? "+" : "");
    os << v;
    if (i > 0) os << "*" << names[i];
    any = true;
  }
  if (!any) os << 0;
  return os;
}

}  // namespace coxperc
