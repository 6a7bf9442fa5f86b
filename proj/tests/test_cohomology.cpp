#include <catch_amalgamated.hpp>

#include "qwc/cohomology.hpp"
#include "qwc/errors.hpp"
#include "qwc/target.hpp"

using namespace qwc;

TEST_CASE("target parsing and derived data", "[cohomology]") {
  CompleteIntersection quintic = parse_target("4:5");
  CHECK(quintic.n == 4);
  CHECK(quintic.degrees == std::vector<int>{5});
  CHECK(quintic.dim() == 3);
  CHECK(quintic.index() == 0);
  CHECK(quintic.degree() == Rat(5));
  CHECK(quintic.calabi_yau());
  CHECK(quintic.calabi_yau_threefold());
  CHECK(quintic.str() == "4:5");

  CompleteIntersection x33 = parse_target("5:3,3");
  CHECK(x33.dim() == 3);
  CHECK(x33.index() == 0);
  CHECK(x33.degree() == Rat(9));
  CHECK(x33.calabi_yau_threefold());

  CompleteIntersection quadric = parse_target("4:2");
  CHECK(quadric.index() == 3);
  CHECK_FALSE(quadric.calabi_yau());

  CHECK_THROWS_AS(parse_target("4"), Error);
  CHECK_THROWS_AS(parse_target("4:"), Error);
  CHECK_THROWS_AS(parse_target("4:0"), Error);  // degrees must be >= 1
  CHECK_THROWS_AS(parse_target(":5"), Error);
  CHECK_THROWS_AS(parse_target("4:5,"), Error);
  // dim >= 1 required: three hypersurfaces in P^3 leave a point.
  CHECK_THROWS_AS(parse_target("3:2,2,2"), Error);
}

TEST_CASE("cup products truncate above H^dim", "[cohomology]") {
  int dim = 3;
  CohClass h = CohClass::h_power(dim, 1);
  CohClass h2 = cup(h, h);
  CHECK(h2 == CohClass::h_power(dim, 2));
  CHECK(cup(h2, h2).is_zero());  // H^4 = 0 on a threefold
  CHECK(cup(h, CohClass::unit(dim)) == h);
  CHECK(CohClass::h_power(dim, 4).is_zero());
}

TEST_CASE("universal zero interacts with every context", "[cohomology]") {
  CohClass z = CohClass::zero();
  CHECK(z.is_universal_zero());
  CHECK(z.is_zero());
  CHECK(z.dim() == -1);

  CohClass h = CohClass::h_power(3, 1);
  CHECK(z + h == h);
  CHECK(h + z == h);
  CHECK((h - h).is_zero());
  CHECK(cup(z, h).is_universal_zero());
  CHECK((z * Rat(7)).is_universal_zero());
}

TEST_CASE("dimension mismatch is a context error", "[cohomology]") {
  CohClass a = CohClass::unit(2), b = CohClass::unit(3);
  CHECK_THROWS_AS(a + b, Error);
  try {
    cup(a, b);
    FAIL("expected context error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Context);
  }
}

TEST_CASE("division by H", "[cohomology]") {
  CohClass c = CohClass::h_power(3, 2) * Rat(5) + CohClass::h_power(3, 1);
  CohClass q = c.div_h();
  CHECK(q == CohClass::h_power(3, 1) * Rat(5) + CohClass::unit(3));
  // A nonzero constant term has no H-divisor.
  CHECK_THROWS_AS(CohClass::unit(3).div_h(), Error);
  CHECK(CohClass::zero().div_h().is_universal_zero());
}

TEST_CASE("inverse against the unit", "[cohomology]") {
  int dim = 3;
  CohClass c = CohClass::unit(dim) + CohClass::h_power(dim, 1);
  CohClass inv = c.inverse();
  // (1+H)^{-1} = 1 - H + H^2 - H^3 in Q[H]/(H^4).
  CohClass expect = CohClass::unit(dim) - CohClass::h_power(dim, 1) +
                    CohClass::h_power(dim, 2) - CohClass::h_power(dim, 3);
  CHECK(inv == expect);
  CHECK(cup(c, inv) == CohClass::unit(dim));

  CHECK_THROWS_AS(CohClass::h_power(dim, 1).inverse(), Error);
}

TEST_CASE("integration pairs the top class with the degree", "[cohomology]") {
  CompleteIntersection quintic = parse_target("4:5");
  CHECK(integrate(CohClass::h_power(3, 3), quintic) == Rat(5));
  CHECK(integrate(CohClass::h_power(3, 2), quintic) == Rat(0));
  CHECK(integrate(CohClass::zero(), quintic) == Rat(0));

  CompleteIntersection x33 = parse_target("5:3,3");
  CHECK(integrate(CohClass::h_power(3, 3), x33) == Rat(9));
}

TEST_CASE("tangent Chern classes of small targets", "[cohomology]") {
  // c(TX) = (1+H)^{n+1} / prod(1 + l_i H), truncated to dim X.
  CompleteIntersection quintic = parse_target("4:5");
  CohClass ct = tangent_chern(quintic);
  CHECK(ct.coeff(0) == Rat(1));
  CHECK(ct.coeff(1) == Rat(0));  // c_1 = 0: Calabi-Yau
  CHECK(ct.coeff(2) == Rat(10));
  CHECK(ct.coeff(3) == Rat(-40));

  CompleteIntersection quadric = parse_target("4:2");
  CohClass cq = tangent_chern(quadric);
  CHECK(cq.coeff(0) == Rat(1));
  CHECK(cq.coeff(1) == Rat(3));
  CHECK(cq.coeff(2) == Rat(4));
  CHECK(cq.coeff(3) == Rat(2));

  // A line in P^2: c(T) = (1+H)^3/(1+H) = 1 + 2H on the curve.
  CompleteIntersection line = parse_target("2:1");
  CohClass cl = tangent_chern(line);
  CHECK(cl.coeff(0) == Rat(1));
  CHECK(cl.coeff(1) == Rat(2));
}

TEST_CASE("Euler characteristics and c2 pairing", "[cohomology]") {
  CHECK(euler_characteristic(parse_target("4:5")) == Rat(-200));
  CHECK(euler_characteristic(parse_target("5:3,3")) == Rat(-144));
  CHECK(euler_characteristic(parse_target("4:2")) == Rat(4));
  CHECK(euler_characteristic(parse_target("2:1")) == Rat(2));   // a sphere
  CHECK(euler_characteristic(parse_target("3:3")) == Rat(9));   // cubic surface

  CHECK(second_chern_h_pairing(parse_target("4:5")) == Rat(50));
  CHECK(second_chern_h_pairing(parse_target("5:3,3")) == Rat(54));
}
