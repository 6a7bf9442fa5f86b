#include <catch_amalgamated.hpp>

#include "qwc/errors.hpp"
#include "qwc/ifun.hpp"

using namespace qwc;

TEST_CASE("stability tokens parse and print", "[ifun]") {
  CHECK(Stability::parse("inf") == Stability::infinity());
  CHECK(Stability::parse("infinity") == Stability::infinity());
  CHECK(Stability::parse("0+") == Stability::zero_plus());
  CHECK(Stability::parse("1/2") == Stability::finite(Rat(1, 2)));
  CHECK(Stability::infinity().str() == "infinity");
  CHECK(Stability::zero_plus().str() == "0+");
  CHECK(Stability::finite(Rat(2, 5)).str() == "2/5");
  CHECK_THROWS_AS(Stability::parse("0"), Error);
  CHECK_THROWS_AS(Stability::parse("-1/2"), Error);
  CHECK_THROWS_AS(Stability::parse(""), Error);
}

TEST_CASE("chamber cutoff is exact floor arithmetic", "[ifun]") {
  CHECK(Stability::infinity().dmax(10) == 0);
  CHECK(Stability::zero_plus().dmax(10) == 10);
  // The wall d = 1/eps itself is kept.
  CHECK(Stability::finite(Rat(1, 2)).dmax(10) == 2);
  CHECK(Stability::finite(Rat(1, 3)).dmax(10) == 3);
  CHECK(Stability::finite(Rat(3, 10)).dmax(10) == 3);  // floor(10/3)
  CHECK(Stability::finite(Rat(2, 5)).dmax(10) == 2);   // floor(5/2)
  CHECK(Stability::finite(Rat(7)).dmax(10) == 0);      // eps > 1: no correction
  // The truncation order caps the cutoff.
  CHECK(Stability::finite(Rat(1, 9)).dmax(4) == 4);
}

TEST_CASE("quintic degree-one Laurent piece", "[ifun]") {
  CompleteIntersection quintic = parse_target("4:5");
  ZPolyClass p1 = i_degree_piece(quintic, 1);
  // prod_{j=1..5}(5H+jz) * (H+z)^{-5} expanded in Q[H]/(H^4):
  CHECK(p1.coeff(0).coeff(0) == Rat(120));   // z^0: 5! * 1
  CHECK(p1.coeff(-1).coeff(0) == Rat(0));    // no 1/z scalar part
  CHECK(p1.coeff(-1).coeff(1) == Rat(770));  // H/z
  CHECK(p1.coeff(-2).coeff(2) == Rat(575));  // H^2/z^2
  CHECK_THROWS_AS(i_degree_piece(quintic, 0), Error);
}

TEST_CASE("quintic correcting classes", "[ifun]") {
  CompleteIntersection quintic = parse_target("4:5");
  MuClass m1 = mu(quintic, 1);
  // mu_1 = 770 H + 120 z.
  CHECK(m1.value.coeff(0) == CohClass::h_power(3, 1) * Rat(770));
  CHECK(m1.value.coeff(1) == CohClass::unit(3) * Rat(120));
  CHECK(m1.value.max_exp() == 1);

  // Index 0: every term of mu_d is homogeneous of degree 1 (z weighs 1, H weighs 1).
  for (int d = 1; d <= 4; ++d) {
    MuClass md = mu(quintic, d);
    CHECK(md.value.is_homogeneous(MuClass::expected_degree(quintic, d)));
    CHECK_FALSE(md.value.empty());
  }
}

TEST_CASE("index two and higher has no corrections", "[ifun]") {
  CompleteIntersection quadric = parse_target("4:2");
  for (int d = 1; d <= 6; ++d) CHECK(mu(quadric, d).value.empty());

  CompleteIntersection x23 = parse_target("6:2,3");  // index 2
  for (int d = 1; d <= 4; ++d) CHECK(mu(x23, d).value.empty());
}

TEST_CASE("index one keeps only the scalar shift", "[ifun]") {
  // Cubic surface in P^3: mu_1 = 3! * 1, nothing deeper.
  CompleteIntersection cubic_surface = parse_target("3:3");
  MuClass m1 = mu(cubic_surface, 1);
  CHECK(m1.value.coeff(0) == CohClass::unit(2) * Rat(6));
  CHECK(m1.value.min_exp() == 0);
  CHECK(m1.value.max_exp() == 0);
  for (int d = 2; d <= 5; ++d) CHECK(mu(cubic_surface, d).value.empty());

  // Quartic threefold: mu_1 = 4! * 1.
  CompleteIntersection quartic = parse_target("4:4");
  CHECK(mu(quartic, 1).value.coeff(0) == CohClass::unit(3) * Rat(24));
  CHECK(mu(quartic, 2).value.empty());
}

TEST_CASE("homogeneity across the index range", "[ifun]") {
  // Degree 1 + d(sum l_i - n - 1); negative degree forces the empty class.
  for (const char* t : {"4:5", "4:6", "4:7", "4:4", "4:3", "5:3,3", "5:2,5", "6:2,2,3", "3:4"}) {
    CompleteIntersection X = parse_target(t);
    for (int d = 1; d <= 4; ++d) {
      MuClass m = mu(X, d);
      int expect = MuClass::expected_degree(X, d);
      if (expect < 0)
        CHECK(m.value.empty());
      else
        CHECK(m.value.is_homogeneous(expect));
    }
  }
}

TEST_CASE("chamber gating of the correction list", "[ifun]") {
  CompleteIntersection quintic = parse_target("4:5");
  CHECK(zj_plus(quintic, Stability::infinity(), 6).empty());
  CHECK(zj_plus(quintic, Stability::finite(Rat(1, 2)), 6).size() == 2);
  CHECK(zj_plus(quintic, Stability::zero_plus(), 6).size() == 6);

  // Same chamber, same data: 1/3 and 3/10 both keep d <= 3.
  SmallJ a = small_j(quintic, Stability::finite(Rat(1, 3)), 6);
  SmallJ b = small_j(quintic, Stability::finite(Rat(3, 10)), 6);
  CHECK(a.j0 == b.j0);
  CHECK(a.j1_h == b.j1_h);
  CHECK(a.j1_unit == b.j1_unit);

  // Finite chamber: coefficients beyond the cutoff stay zero.
  SmallJ half = small_j(quintic, Stability::finite(Rat(1, 2)), 4);
  CHECK(half.j0.coeff(1) == Rat(120));
  CHECK(half.j0.coeff(2) == Rat(113400));
  CHECK(half.j0.coeff(3) == Rat(0));
  CHECK(half.j0.coeff(4) == Rat(0));
}

TEST_CASE("two routes to the small J-series agree", "[ifun]") {
  for (const char* t : {"4:5", "5:3,3"}) {
    CompleteIntersection X = parse_target(t);
    SmallJ direct = small_j(X, Stability::zero_plus(), 6);
    SmallJ closed = small_j_cy_closed(X, Stability::zero_plus(), 6);
    CHECK(direct.j0 == closed.j0);
    CHECK(direct.j1_h == closed.j1_h);
    CHECK(direct.j1_unit == closed.j1_unit);
    CHECK(direct.j1_unit.is_zero());  // index 0: no scalar part in J1
  }
  CHECK_THROWS_AS(small_j_cy_closed(parse_target("4:2"), Stability::zero_plus(), 3), Error);
}

TEST_CASE("quintic J-series anchor values", "[ifun]") {
  SmallJ sj = small_j(parse_target("4:5"), Stability::zero_plus(), 3);
  CHECK(sj.j0.coeff(0) == Rat(1));
  CHECK(sj.j0.coeff(1) == Rat(120));
  CHECK(sj.j0.coeff(2) == Rat(113400));
  CHECK(sj.j0.coeff(3) == Rat(168168000));
  CHECK(sj.j1_h.coeff(1) == Rat(770));
  CHECK(sj.j1_h.coeff(2) == Rat(810225));
}

TEST_CASE("divisor exponent and mirror map", "[ifun]") {
  CompleteIntersection quintic = parse_target("4:5");
  RatSeries f = divisor_exponent(quintic, Stability::zero_plus(), 6);
  CHECK(f.coeff(0) == Rat(0));
  CHECK(f.coeff(1) == Rat(770));
  CHECK(f.coeff(2) == Rat(717825));

  RatSeries Q = mirror_map(quintic, 6);
  long expect[] = {0, 1, 770, 1014275, 1703916750};
  for (int k = 0; k <= 4; ++k) CHECK(Q.coeff(k) == Rat(expect[k]));
  CHECK(Q.coeff(5) == Rat::parse("3286569025625"));
  CHECK(Q.coeff(6) == Rat::parse("6927574106027654"));

  // An index-one shift contributes to the scalar part, which the divisor
  // route cannot absorb.
  CHECK_THROWS_AS(divisor_exponent(parse_target("4:4"), Stability::zero_plus(), 3), Error);
  // The mirror map is specific to Calabi-Yau threefolds.
  CHECK_THROWS_AS(mirror_map(parse_target("4:4"), 3), Error);
  CHECK_THROWS_AS(mirror_map(parse_target("3:4"), 3), Error);  // a K3, dim 2
}
