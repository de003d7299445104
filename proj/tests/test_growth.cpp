#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "coxperc/coxeter_matrix.hpp"
#include "coxperc/fixtures.hpp"
#include "coxperc/growth_series.hpp"
#include "coxperc/nerve.hpp"

using namespace coxperc;

namespace {

CoxeterMatrix triangle_group(int m12, int m13, int m23) {
  Eigen::MatrixXi orders(3, 3);
  orders << 1, m12, m13, m12, 1, m23, m13, m23, 1;
  return CoxeterMatrix(orders, ClassFlags{});
}

InverseGrowth inverse_of(const CoxeterMatrix& m) {
  return steinberg_inverse_growth(m, build_nerve(m));
}

void check_coeffs(const IntPolynomial& p, const std::vector<long>& expect) {
  REQUIRE(p.degree() == static_cast<int>(expect.size()) - 1);
  for (std::size_t i = 0; i < expect.size(); ++i)
    CHECK(p.coeff(static_cast<int>(i)) == expect[i]);
}

}  // namespace

TEST_CASE("spherical subsets map to the classical bracket lists") {
  // Pair and singleton cases on the lambert cube (orders 2 and 3 present).
  const CoxeterMatrix lam = lambert_cube_fixture();
  CHECK(spherical_bracket_orders(lam, {0}) == std::vector<int>{2});
  CHECK(spherical_bracket_orders(lam, {0, 4}) == std::vector<int>{2, 2});
  CHECK(spherical_bracket_orders(lam, {0, 2}) == std::vector<int>{2, 3});

  // Triples by type: reducible (2,2,m), A3, B3, H3.
  CHECK(spherical_bracket_orders(triangle_group(2, 2, 5), {0, 1, 2}) ==
        std::vector<int>{2, 2, 5});
  CHECK(spherical_bracket_orders(triangle_group(2, 3, 3), {0, 1, 2}) ==
        std::vector<int>{2, 3, 4});
  CHECK(spherical_bracket_orders(triangle_group(2, 3, 4), {0, 1, 2}) ==
        std::vector<int>{2, 4, 6});
  CHECK(spherical_bracket_orders(triangle_group(2, 3, 5), {0, 1, 2}) ==
        std::vector<int>{2, 6, 10});

  // Non-spherical subsets are rejected.
  CHECK_THROWS_AS(spherical_bracket_orders(triangle_group(2, 3, 7), {0, 1, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(spherical_bracket_orders(lam, {0, 1}), std::invalid_argument);
}

TEST_CASE("dodecahedron inverse growth in closed form") {
  const InverseGrowth ig = inverse_of(dodecahedron_fixture());
  check_coeffs(ig.p, {1, -9, 9, -1});
  check_coeffs(ig.q, {1, 3, 3, 1});

  // 1 (unit) + 12 vertices + 30 edges + 20 triangles of the nerve.
  CHECK(ig.terms.size() == 63);

  // The two evaluation routes (term sum vs normal form) agree.
  for (double t : {0.01, 0.1, 0.12701665, 0.5, 0.9, 1.0})
    CHECK(ig.eval(t) == doctest::Approx(ig.eval_terms(t)).epsilon(1e-10));

  // p is anti-palindromic: t^3 p(1/t) = -p(t), the rational-function face of
  // the growth series' functional equation.
  for (double t : {0.3, 0.7}) {
    const double lhs = std::pow(t, 3) * ig.p.eval(1.0 / t);
    CHECK(lhs == doctest::Approx(-ig.p.eval(t)).epsilon(1e-12));
  }
}

TEST_CASE("frozen sphere sequences for the bundled polyhedra") {
  SUBCASE("dodecahedron") {
    const SeriesCoefficients s = ball_size_series(inverse_of(dodecahedron_fixture()), 6);
    const std::vector<long> expect{1, 12, 102, 812, 6402, 50412, 396902};
    REQUIRE(s.sphere.size() == expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i) CHECK(s.sphere[i] == expect[i]);
    CHECK(s.ball[2] == 115);
    CHECK(s.ball[6] == 1 + 12 + 102 + 812 + 6402 + 50412 + 396902);
  }
  SUBCASE("football") {
    const InverseGrowth ig = inverse_of(football_fixture());
    check_coeffs(ig.p, {1, -29, 29, -1});
    const SeriesCoefficients s = ball_size_series(ig, 4);
    const std::vector<long> expect{1, 32, 902, 25232, 705602};
    for (std::size_t i = 0; i < expect.size(); ++i) CHECK(s.sphere[i] == expect[i]);
  }
  SUBCASE("ideal dodecahedron") {
    const InverseGrowth ig = inverse_of(ideal_dodecahedron_fixture());
    check_coeffs(ig.p, {1, -10, -10, 19});
    check_coeffs(ig.q, {1, 2, 2, 1});  // (1+t)(1+t+t^2)
    const SeriesCoefficients s = ball_size_series(ig, 4);
    const std::vector<long> expect{1, 12, 132, 1422, 15312};
    for (std::size_t i = 0; i < expect.size(); ++i) CHECK(s.sphere[i] == expect[i]);
  }
  SUBCASE("lambert cube") {
    const InverseGrowth ig = inverse_of(lambert_cube_fixture());
    check_coeffs(ig.p, {1, -2, -2, 2, 2, -1});
    const SeriesCoefficients s = ball_size_series(ig, 2);
    CHECK(s.sphere[1] == 6);
    CHECK(s.sphere[2] == 21);
  }
}

TEST_CASE("finite input: the series terminates and has no pole in (0,1]") {
  const CoxeterMatrix h3 = triangle_group(2, 3, 5);
  const InverseGrowth ig = inverse_of(h3);

  // p/q must equal 1/[2,6,10] exactly: p * [2,6,10] == q.
  const IntPolynomial w = bracket_product({2, 6, 10});
  CHECK(ig.p * w == ig.q);

  const GrowthRateResult rate = growth_rate(ig);
  CHECK_FALSE(rate.has_root);
  CHECK(rate.method == "no root <= 1");

  // Ball sizes saturate at |W| = 120.
  const SeriesCoefficients s = ball_size_series(ig, 20);
  CHECK(s.ball[15] == 120);
  CHECK(s.ball[20] == 120);
  CHECK(s.sphere[16] == 0);
}

TEST_CASE("growth rates: dodecahedron closed form and dihedral boundary case") {
  const GrowthRateResult dodec = growth_rate(inverse_of(dodecahedron_fixture()));
  REQUIRE(dodec.has_root);
  CHECK(dodec.t_star == doctest::Approx(4.0 - std::sqrt(15.0)).epsilon(1e-10));
  CHECK(dodec.rate == doctest::Approx(4.0 + std::sqrt(15.0)).epsilon(1e-10));
  CHECK(dodec.bracket_hi - dodec.bracket_lo <= 1e-12);

  // Infinite dihedral: 1/W = (1-t)/(1+t), root exactly at t = 1.
  const GrowthRateResult dih = growth_rate(inverse_of(infinite_dihedral_fixture()));
  REQUIRE(dih.has_root);
  CHECK(dih.rate == doctest::Approx(1.0).epsilon(1e-9));

  // Free product of 13 involutions: W = (1+t)/(1-12t), growth rate 12.
  const GrowthRateResult fp = growth_rate(inverse_of(free_product_fixture(13)));
  REQUIRE(fp.has_root);
  CHECK(fp.rate == doctest::Approx(12.0).epsilon(1e-10));
}

TEST_CASE("right-angled reference formulas match the dodecahedron data") {
  CHECK(ra_reference_growth_rate(12) == doctest::Approx(4.0 + std::sqrt(15.0)).epsilon(1e-14));

  // ra_reference_inverse(k, .) is exactly the dodecahedron's 1/W at k = 12.
  const InverseGrowth ig = inverse_of(dodecahedron_fixture());
  for (double t : {0.05, 0.2, 0.5, 0.8, 1.0})
    CHECK(ra_reference_inverse(12, t) == doctest::Approx(ig.eval(t)).epsilon(1e-12));
}

TEST_CASE("growth lower bound: grid verdicts and the degenerate fallback") {
  const CoxeterMatrix dodec = dodecahedron_fixture();
  const Nerve nerve = build_nerve(dodec);
  const LowerBoundVerdict v = growth_lower_bound_check(inverse_of(dodec), nerve);
  CHECK_FALSE(v.tree_bound);
  CHECK(v.holds);
  CHECK(v.worst_margin >= -1e-12);

  const CoxeterMatrix lam = lambert_cube_fixture();
  const LowerBoundVerdict vl = growth_lower_bound_check(inverse_of(lam), build_nerve(lam));
  CHECK(vl.holds);

  const CoxeterMatrix fp = free_product_fixture(13);
  const LowerBoundVerdict vf = growth_lower_bound_check(inverse_of(fp), build_nerve(fp));
  CHECK(vf.tree_bound);
  CHECK(vf.holds);
  CHECK(vf.note.find("k-4") != std::string::npos);

  // k < 6 is outside the theorem's range.
  const CoxeterMatrix dih = infinite_dihedral_fixture();
  CHECK_THROWS_AS(growth_lower_bound_check(inverse_of(dih), build_nerve(dih)),
                  std::invalid_argument);
}

TEST_CASE("bracket inequality: instances and precondition guards") {
  // [a-d][b+d] <= [a][b] across representative shapes.
  for (double t : {0.0, 0.25, 1.0, 2.5, 10.0}) {
    CHECK(bracket_inequality_holds(3, 3, 1, t));
    CHECK(bracket_inequality_holds(2, 6, 2, t));
    CHECK(bracket_inequality_holds(7, 6, 3, t));  // a = b+1 boundary
    CHECK(bracket_inequality_holds(4, 9, 0, t));  // d = 0: equality
    CHECK(bracket_inequality_holds(5, 5, 5, t));  // d = a: left side vanishes
  }
  CHECK_THROWS_AS(bracket_inequality_holds(0, 3, 0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(bracket_inequality_holds(5, 3, 1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(bracket_inequality_holds(3, 3, 4, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(bracket_inequality_holds(3, 3, 1, -0.5), std::invalid_argument);
}
