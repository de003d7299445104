#include <doctest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "coxperc/algebraic_int.hpp"

using coxperc::AlgebraicInt;

TEST_CASE("ring identities for the quadratic generators") {
  const AlgebraicInt r2 = AlgebraicInt::sqrt2();
  const AlgebraicInt r3 = AlgebraicInt::sqrt3();
  const AlgebraicInt r6 = AlgebraicInt::sqrt6();
  const AlgebraicInt phi = AlgebraicInt::golden();

  CHECK(r2 * r2 == AlgebraicInt(2));
  CHECK(r3 * r3 == AlgebraicInt(3));
  CHECK(r2 * r3 == r6);
  CHECK(r6 * r6 == AlgebraicInt(6));
  CHECK(r6 * r2 == AlgebraicInt(2) * r3);

  // phi^2 = phi + 1, and sqrt5 = 2 phi - 1 squares to 5.
  CHECK(phi * phi == phi + AlgebraicInt(1));
  const AlgebraicInt sqrt5 = AlgebraicInt(2) * phi - AlgebraicInt(1);
  CHECK(sqrt5 * sqrt5 == AlgebraicInt(5));

  // Mixed product stays in the module: (sqrt2 phi)(sqrt3 phi) = sqrt6 (phi+1).
  CHECK((r2 * phi) * (r3 * phi) == r6 * (phi + AlgebraicInt(1)));
}

TEST_CASE("two_cos_pi_over covers exactly the supported orders") {
  AlgebraicInt v;
  REQUIRE(AlgebraicInt::two_cos_pi_over(2, v));
  CHECK(v == AlgebraicInt(0));
  REQUIRE(AlgebraicInt::two_cos_pi_over(3, v));
  CHECK(v == AlgebraicInt(1));
  REQUIRE(AlgebraicInt::two_cos_pi_over(4, v));
  CHECK(v == AlgebraicInt::sqrt2());
  REQUIRE(AlgebraicInt::two_cos_pi_over(6, v));
  CHECK(v == AlgebraicInt::sqrt3());
  REQUIRE(AlgebraicInt::two_cos_pi_over(0, v));  // infinite order
  CHECK(v == AlgebraicInt(2));

  // 2cos(pi/5) = phi.
  REQUIRE(AlgebraicInt::two_cos_pi_over(5, v));
  CHECK(v == AlgebraicInt::golden());
  CHECK(v.to_double() == doctest::Approx(2.0 * std::cos(M_PI / 5.0)).epsilon(1e-15));

  CHECK_FALSE(AlgebraicInt::two_cos_pi_over(7, v));
  CHECK_FALSE(AlgebraicInt::two_cos_pi_over(12, v));
}

TEST_CASE("to_double tracks the embedded real value through arithmetic") {
  const AlgebraicInt x = AlgebraicInt::sqrt2() * AlgebraicInt(3) -
                         AlgebraicInt::golden() * AlgebraicInt::sqrt3() + AlgebraicInt(7);
  const double expect = 3.0 * std::sqrt(2.0) -
                        (1.0 + std::sqrt(5.0)) / 2.0 * std::sqrt(3.0) + 7.0;
  CHECK(x.to_double() == doctest::Approx(expect).epsilon(1e-14));

  const AlgebraicInt y = x * x * x;
  CHECK(y.to_double() == doctest::Approx(expect * expect * expect).epsilon(1e-13));
}

TEST_CASE("multiplication overflow throws instead of wrapping") {
  AlgebraicInt big(std::int64_t{1} << 40);
  // (2^40)^2 = 2^80 does not fit the int64 coefficient range.
  CHECK_THROWS_AS(big * big, std::overflow_error);

  // A value that fits keeps working after near-limit products.
  AlgebraicInt ok(std::int64_t{1} << 30);
  CHECK_NOTHROW(ok * ok);
}

TEST_CASE("serialization is injective on distinct small elements") {
  // Different elements must never share a key; identical elements must.
  const AlgebraicInt a = AlgebraicInt::sqrt2() + AlgebraicInt::golden();
  const AlgebraicInt b = AlgebraicInt::sqrt2() - AlgebraicInt::golden();
  const AlgebraicInt c = AlgebraicInt::sqrt2() + AlgebraicInt::golden();

  std::string ka, kb, kc;
  a.serialize_to(ka);
  b.serialize_to(kb);
  c.serialize_to(kc);
  CHECK(ka != kb);
  CHECK(ka == kc);

  // Zero serializes as the single empty-mask byte, appending to what's there.
  std::string kz = "prefix";
  AlgebraicInt().serialize_to(kz);
  CHECK(kz.size() == 7);
}

TEST_CASE("streaming gives a readable form") {
  std::ostringstream os;
  os << AlgebraicInt::sqrt2() * AlgebraicInt(2) + AlgebraicInt(1);
  CHECK(os.str() == "1+2*r2");
}
