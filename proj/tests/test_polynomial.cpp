#include <doctest.h>

#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "coxperc/int_polynomial.hpp"

using namespace coxperc;

TEST_CASE("brackets: shape and values") {
  CHECK(bracket(0).is_zero());
  CHECK(bracket(1) == IntPolynomial::constant(1));

  const IntPolynomial b2 = bracket(2);
  CHECK(b2.degree() == 1);
  CHECK(b2.coeff(0) == 1);
  CHECK(b2.coeff(1) == 1);

  // [n](1) = n.
  for (int n = 1; n <= 10; ++n) CHECK(bracket(n).eval_exact(1) == n);
}

TEST_CASE("bracket products give the classical finite growth polynomials") {
  // Triangle reflection groups on the sphere: W(1) = |W|.
  CHECK(bracket_product({2, 3, 4}).eval_exact(1) == 24);   // A3
  CHECK(bracket_product({2, 4, 6}).eval_exact(1) == 48);   // B3
  CHECK(bracket_product({2, 6, 10}).eval_exact(1) == 120); // H3

  const IntPolynomial h3 = bracket_product({2, 6, 10});
  REQUIRE(h3.degree() == 15);
  const long expect[16] = {1, 3, 5, 7, 9, 11, 12, 12, 12, 12, 11, 9, 7, 5, 3, 1};
  for (int i = 0; i <= 15; ++i) CHECK(h3.coeff(i) == expect[i]);
  CHECK(h3.is_palindromic());

  CHECK_THROWS_AS(bracket_product({2, 0, 3}), std::invalid_argument);
  CHECK(bracket_product({}) == IntPolynomial::constant(1));
}

TEST_CASE("arithmetic and evaluation are consistent") {
  const IntPolynomial p = bracket(2) * bracket(2) * bracket(2);  // (1+t)^3
  REQUIRE(p.degree() == 3);
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == 3);
  CHECK(p.coeff(2) == 3);
  CHECK(p.coeff(3) == 1);

  const IntPolynomial q = p - IntPolynomial::monomial(3, 1);  // drop the t^3 term
  CHECK(q.degree() == 2);
  CHECK(q.eval(2.0) == doctest::Approx(1 + 6 + 12));

  // Exact and floating evaluation agree where doubles are exact.
  const mpq_class half(1, 2);
  const mpq_class exact = p.eval_exact(half);
  CHECK(exact == mpq_class(27, 8));  // (3/2)^3
  CHECK(p.eval(0.5) == doctest::Approx(27.0 / 8.0).epsilon(1e-15));

  // coeff() outside the stored range is zero, degree of zero is -1.
  CHECK(q.coeff(17) == 0);
  CHECK((p - p).degree() == -1);
}

TEST_CASE("palindromicity detects symmetric coefficient lists only") {
  CHECK(bracket_product({2, 3}).is_palindromic());  // 1,2,2,1
  IntPolynomial skew = bracket(2) + IntPolynomial::monomial(2, 1);  // 1,1,1 + t^2 -> 1,1,2
  CHECK_FALSE(skew.is_palindromic());
  CHECK_FALSE(IntPolynomial().is_palindromic());  // zero polynomial
}

TEST_CASE("series division: geometric series and the dihedral ball") {
  // 1/(1-t) = 1 + t + t^2 + ...
  const IntPolynomial one = IntPolynomial::constant(1);
  IntPolynomial one_minus_t = one - IntPolynomial::monomial(1, 1);
  const std::vector<mpz_class> geo = series_divide(one, one_minus_t, 6);
  REQUIRE(geo.size() == 7);
  for (const auto& c : geo) CHECK(c == 1);

  // W(t) = (1+t)/(1-t) for the infinite dihedral group: 1,2,2,2,...
  const std::vector<mpz_class> dih = series_divide(bracket(2), one_minus_t, 6);
  CHECK(dih[0] == 1);
  for (std::size_t i = 1; i < dih.size(); ++i) CHECK(dih[i] == 2);

  // Alternating signs from 1/(1+t).
  const std::vector<mpz_class> alt = series_divide(one, bracket(2), 5);
  for (std::size_t i = 0; i < alt.size(); ++i) CHECK(alt[i] == (i % 2 == 0 ? 1 : -1));

  // Non-unit constant terms are rejected (quotient would leave Z[[t]]).
  IntPolynomial two = IntPolynomial::constant(2);
  CHECK_THROWS_AS(series_divide(one, two, 3), std::invalid_argument);
  CHECK_THROWS_AS(series_divide(one, IntPolynomial(), 3), std::invalid_argument);
}

TEST_CASE("to_string renders sparse polynomials readably") {
  const IntPolynomial p = IntPolynomial::constant(1) - IntPolynomial::monomial(3, 9);
  const std::string s = p.to_string();
  CHECK(s.find("t^3") != std::string::npos);
  CHECK(s.find("9") != std::string::npos);
}
