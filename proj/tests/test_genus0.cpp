#include <catch_amalgamated.hpp>

#include "qwc/errors.hpp"
#include "qwc/genus0.hpp"

using namespace qwc;

TEST_CASE("quintic coupling and instanton numbers", "[genus0]") {
  CompleteIntersection quintic = parse_target("4:5");
  RatSeries k = yukawa(quintic, 4);
  CHECK(k.coeff(0) == Rat(5));  // classical triple intersection
  CHECK(k.coeff(1) == Rat(2875));
  CHECK(k.coeff(2) == Rat(4876875));
  CHECK(k.coeff(3) == Rat::parse("8564575000"));
  CHECK(k.coeff(4) == Rat::parse("15517926796875"));

  std::vector<Rat> n = instanton_numbers(quintic, 4);
  REQUIRE(n.size() == 4);
  CHECK(n[0] == Rat(2875));
  CHECK(n[1] == Rat(609250));
  CHECK(n[2] == Rat(317206375));
  CHECK(n[3] == Rat::parse("242467530000"));
}

TEST_CASE("bicubic coupling and instanton numbers", "[genus0]") {
  CompleteIntersection x33 = parse_target("5:3,3");
  RatSeries k = yukawa(x33, 2);
  CHECK(k.coeff(0) == Rat(9));
  CHECK(k.coeff(1) == Rat(1053));

  std::vector<Rat> n = instanton_numbers(x33, 5);
  REQUIRE(n.size() == 5);
  CHECK(n[0] == Rat(1053));
  CHECK(n[1] == Rat(52812));
  CHECK(n[2] == Rat(6424326));
  CHECK(n[3] == Rat::parse("1139448384"));
  CHECK(n[4] == Rat::parse("249787892583"));
  for (const Rat& x : n) CHECK(x.is_integer());
}

TEST_CASE("multiple-cover inversion", "[genus0]") {
  // Coupling with no instanton part: all numbers vanish.
  RatSeries flat = RatSeries::constant(4, Rat(5));
  for (const Rat& x : instanton_from_coupling(flat)) CHECK(x == Rat(0));

  // Synthetic n_1 = 1, nothing else: K_d = sum_{e|d} n_e e^3 = 1 for all d.
  RatSeries k(4);
  k.set_coeff(0, Rat(5));
  for (int d = 1; d <= 4; ++d) k.set_coeff(d, Rat(1));
  std::vector<Rat> n = instanton_from_coupling(k);
  CHECK(n[0] == Rat(1));
  CHECK(n[1] == Rat(0));
  CHECK(n[2] == Rat(0));
  CHECK(n[3] == Rat(0));

  // n_1 = 1, n_2 = 1: K_2 = 1 + 8 and K_4 = 1 + 8 as well.
  k.set_coeff(2, Rat(9));
  k.set_coeff(4, Rat(9));
  n = instanton_from_coupling(k);
  CHECK(n[1] == Rat(1));
  CHECK(n[3] == Rat(0));

  // A non-integer solution signals a pipeline bug and must be loud.
  k.set_coeff(2, Rat(3, 2));
  CHECK_THROWS_AS(instanton_from_coupling(k), Error);
  try {
    instanton_from_coupling(k);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Integrality);
  }
}

TEST_CASE("both extraction routes produce the same three-point values", "[genus0]") {
  for (const char* t : {"4:5", "5:3,3"}) {
    CompleteIntersection X = parse_target(t);
    ExtractionReport rep = j_extraction_check(X, 3);
    INFO(t << ": " << rep.report.detail);
    CHECK(rep.report.pass);
    REQUIRE(rep.route_a.size() == rep.route_b.size());
    for (size_t i = 0; i < rep.route_a.size(); ++i)
      CHECK(rep.route_a[i] == rep.route_b[i]);
  }
}

TEST_CASE("the oracle gates its output on route agreement", "[genus0]") {
  CompleteIntersection quintic = parse_target("4:5");
  YukawaData y = genus0_oracle(quintic, 3);
  CHECK(y.coupling.coeff(1) == Rat(2875));
  REQUIRE(y.three_point.size() == 3);
  CHECK(y.three_point[0] == Rat(2875));
  CHECK(y.three_point[1] == Rat(4876875));
  REQUIRE(y.instanton.size() == 3);
  CHECK(y.instanton[2] == Rat(317206375));
}

TEST_CASE("unpointed table for downstream transforms", "[genus0]") {
  CompleteIntersection quintic = parse_target("4:5");
  InvariantTable t = genus0_table(quintic, 3);
  CHECK(t.genus == 0);
  CHECK(t.stability == Stability::infinity());
  // Three divisor insertions strip off d^3.
  CHECK(t.value(1) == Rat(2875));
  CHECK(t.value(2) == Rat(4876875, 8));
  CHECK(t.value(3) == Rat::parse("8564575000/27"));
}

TEST_CASE("genus-0 pipeline rejects non-CY3 targets", "[genus0]") {
  CHECK_THROWS_AS(yukawa(parse_target("4:2"), 3), Error);   // Fano threefold
  CHECK_THROWS_AS(yukawa(parse_target("3:4"), 3), Error);   // K3 surface
  CHECK_THROWS_AS(j_extraction_check(parse_target("3:3"), 3), Error);
  CHECK_THROWS_AS(genus0_table(parse_target("4:6"), 3), Error);
}
