#pragma once

// Dense polynomials over arbitrary-precision integers (GMP mpz), plus the
// bracket family [n](z) = z^{n-1} + ... + 1 used by growth series of finite
// Coxeter groups.  [0] is the zero polynomial; [n1,...,nm] is the product of
// brackets.

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace coxperc {

class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }
  static IntPolynomial constant(long v);
  static IntPolynomial monomial(int degree, long v = 1);

  // degree of the zero polynomial is -1
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const mpz_class& coeff(int i) const;  // 0 outside stored range
  const std::vector<mpz_class>& coeffs() const { return c_; }

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

  double eval(double t) const;        // Horner
  mpq_class eval_exact(const mpq_class& t) const;

  // True when coefficients read the same in both directions (and nonzero);
  // equivalent to W(t) = t^deg * W(1/t).
  bool is_palindromic() const;

  std::string to_string(const std::string& var = "t") const;
  friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

private:
  void trim();
  std::vector<mpz_class> c_;  // c_[i] is the z^i coefficient
};

// [n](z) = 1 + z + ... + z^{n-1}; n = 0 gives the zero polynomial.
IntPolynomial bracket(int n);

// [n1,...,nm](z); empty list gives the constant 1.
IntPolynomial bracket_product(const std::vector<int>& ns);

// Exact power-series division num/den up to degree n_max inclusive.
// Requires den(0) = +-1 so the quotient stays integral; throws
// std::invalid_argument otherwise (zero or non-unit constant term).
std::vector<mpz_class> series_divide(const IntPolynomial& num, const IntPolynomial& den,
                                     int n_max);

}  // namespace coxperc
