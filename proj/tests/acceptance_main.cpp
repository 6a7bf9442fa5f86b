// Acceptance gate: eight criteria, one [PASS]/[FAIL] line each, nonzero exit
// if anything fails.  Every value is recomputed through the library; the
// expected constants are the classical anchors.  Criteria with a time budget
// fail when they blow it, even if the arithmetic was right.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "qwc/qwc.hpp"

using namespace qwc;

namespace {

int failures = 0;

// Runs one criterion body; the body returns an empty string on success and a
// short diagnosis on failure.  limit_s <= 0 means no time budget.
void criterion(const std::string& name, double limit_s,
               const std::function<std::string()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  try {
    detail = body();
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (detail.empty() && limit_s > 0 && secs > limit_s) {
    std::ostringstream os;
    os << "exceeded time budget (" << secs << " s > " << limit_s << " s)";
    detail = os.str();
  }
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(3);
  if (detail.empty()) {
    line << "[PASS] " << name << " (" << secs << " s)";
  } else {
    line << "[FAIL] " << name << ": " << detail << " (" << secs << " s)";
    ++failures;
  }
  std::cout << line.str() << "\n";
}

std::vector<Rat> random_values(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> num(-30, 30), den(1, 9);
  std::vector<Rat> v;
  v.reserve(static_cast<size_t>(depth));
  for (int d = 0; d < depth; ++d) v.emplace_back(num(rng), den(rng));
  return v;
}

// 1. Pinned correcting-class values across the three index regimes.
std::string mu_values() {
  MuClass q1 = mu(parse_target("4:5"), 1);
  ZPolyClass expect = ZPolyClass::term(0, CohClass::h_power(3, 1) * Rat(770)) +
                      ZPolyClass::term(1, CohClass::unit(3) * Rat(120));
  if (!(q1.value == expect)) return "quintic mu_1 != 770H + 120z";

  CompleteIntersection quadric = parse_target("4:2");
  for (int d = 1; d <= 6; ++d)
    if (!mu(quadric, d).value.empty())
      return "quadric threefold mu_" + std::to_string(d) + " is nonzero";

  CompleteIntersection cubic = parse_target("3:3");
  if (!(mu(cubic, 1).value == ZPolyClass::term(0, CohClass::unit(2) * Rat(6))))
    return "cubic surface mu_1 != 6*1";
  for (int d = 2; d <= 6; ++d)
    if (!mu(cubic, d).value.empty())
      return "cubic surface mu_" + std::to_string(d) + " is nonzero";
  return "";
}

// 2. Homogeneity of every mu_d term, ten targets spanning index -2..3.
std::string mu_homogeneity() {
  const char* targets[] = {"4:7", "4:6", "5:2,5", "4:5", "5:3,3",
                           "6:2,2,3", "3:4", "3:3", "4:3", "4:2"};
  for (const char* spec : targets) {
    CompleteIntersection X = parse_target(spec);
    // Recompute sum(l_i) - n - 1 from the raw data rather than trusting
    // index(), so the cross-check below is meaningful.
    int s = static_cast<int>(X.sum_degrees()) - X.n - 1;
    for (int d = 1; d <= 5; ++d) {
      int expect = 1 + d * s;
      MuClass m = mu(X, d);
      if (m.value.empty()) continue;  // vacuously homogeneous
      if (expect < 0)
        return std::string(spec) + " mu_" + std::to_string(d) +
               " nonzero at negative expected degree";
      if (!m.value.is_homogeneous(expect))
        return std::string(spec) + " mu_" + std::to_string(d) +
               " is not homogeneous of degree " + std::to_string(expect);
      if (expect != MuClass::expected_degree(X, d))
        return std::string(spec) + ": degree bookkeeping disagrees at d=" +
               std::to_string(d);
    }
  }
  return "";
}

// 3. Closed Calabi-Yau forms against direct Laurent extraction, to q^6.
std::string dual_route_j() {
  for (const char* spec : {"4:5", "5:3,3"}) {
    CompleteIntersection X = parse_target(spec);
    SmallJ a = small_j(X, Stability::zero_plus(), 6);
    SmallJ b = small_j_cy_closed(X, Stability::zero_plus(), 6);
    if (!(a.j0 == b.j0 && a.j1_h == b.j1_h && a.j1_unit == b.j1_unit))
      return std::string(spec) + ": routes disagree";
  }
  return "";
}

// 4. exp(d f(q)) q^d = Q(q)^d on the quintic, d <= 5, order 8.
std::string mirror_divisor_identity() {
  CompleteIntersection X = parse_target("4:5");
  RatSeries f = divisor_exponent(X, Stability::zero_plus(), 8);
  RatSeries Q = mirror_map(X, 8);
  for (int d = 1; d <= 5; ++d) {
    RatSeries lhs = exp(f.scaled(Rat(d))).shifted(d).truncate(8);
    RatSeries rhs = Q.pow(d).truncate(8);
    if (!(lhs == rhs)) return "mismatch at d = " + std::to_string(d);
  }
  return "";
}

// 5. Genus-0 oracle: dual routes agree, quintic instanton anchors, and
// integrality through degree 5 on both Calabi-Yau targets.
std::string genus0_anchors() {
  for (const char* spec : {"4:5", "5:3,3"}) {
    CompleteIntersection X = parse_target(spec);
    ExtractionReport ext = j_extraction_check(X, 5);
    if (!ext.report.pass) return std::string(spec) + ": " + ext.report.detail;
    if (!(ext.route_a == ext.route_b))
      return std::string(spec) + ": route vectors differ";
    YukawaData y = genus0_oracle(X, 5);  // throws Integrality if n_d breaks
    for (const Rat& n : y.instanton)
      if (!n.is_integer())
        return std::string(spec) + ": non-integer instanton number " + n.str();
  }
  YukawaData y = genus0_oracle(parse_target("4:5"), 3);
  if (!(y.instanton[0] == Rat(2875) && y.instanton[1] == Rat(609250) &&
        y.instanton[2] == Rat(317206375)))
    return "quintic n_1..n_3 != 2875, 609250, 317206375";
  return "";
}

// 6. Wall-crossing: identity at epsilon = infinity, forward-then-inverse on
// 100 random tables per genus, and the two pinned zero-table outputs.
std::string wallcross_identities() {
  CompleteIntersection X = parse_target("4:5");
  std::mt19937 rng(20240817);
  for (int g : {1, 2, 3}) {
    for (int trial = 0; trial < 100; ++trial) {
      InvariantTable t(X, g, Stability::infinity(), random_values(rng, 4));
      InvariantTable idt = quasimap_from_gw(t, Stability::infinity());
      if (!(idt == t))
        return "epsilon = infinity is not the identity at g = " + std::to_string(g);
      InvariantTable fwd = quasimap_from_gw(t, Stability::zero_plus());
      InvariantTable back = gw_from_quasimap(fwd, Stability::zero_plus());
      if (!(back.values == t.values))
        return "forward-inverse broke at g = " + std::to_string(g) +
               ", trial " + std::to_string(trial);
    }
  }
  // GW tables that are identically zero isolate the transform's own terms.
  InvariantTable z1(X, 1, Stability::infinity(), {Rat(0)});
  InvariantTable z2(X, 2, Stability::infinity(), {Rat(0)});
  Rat v1 = quasimap_from_gw(z1, Stability::zero_plus()).value(1);
  Rat v2 = quasimap_from_gw(z2, Stability::zero_plus()).value(1);
  if (!(v1 == Rat(-3625, 6))) return "<>_{1,0,1} at 0+ is " + v1.str() + ", want -3625/6";
  if (!(v2 == Rat(25, 3))) return "<>_{2,0,1} at 0+ is " + v2.str() + ", want 25/3";
  return "";
}

// 7. The two mechanical re-derivation suites at depth 3, g in {1,2,5}.
std::string rederivation_suites() {
  CompleteIntersection X = parse_target("4:5");
  std::mt19937 rng(991);
  for (int g : {1, 2, 5}) {
    CheckReport sp = semipositive_identity_check(X, g, Stability::zero_plus(), 3);
    if (!sp.pass)
      return "semipositive identity failed at g = " + std::to_string(g) + ": " + sp.detail;
    InvariantTable t(X, g, Stability::infinity(), random_values(rng, 3));
    CheckReport bc = bcov_identity_check(t, 3);
    if (!bc.pass)
      return "mirror restatement failed at g = " + std::to_string(g) + ": " + bc.detail;
  }
  return "";
}

// 8. Constant-map contributions via the exact Bernoulli recurrence.
std::string constant_maps() {
  BracketCalculus calc(parse_target("4:5"));
  Rat g2 = calc.constant_map_value(2);
  Rat g3 = calc.constant_map_value(3);
  if (!(g2 == Rat(-5, 144))) return "<>_{2,0,0} = " + g2.str() + ", want -5/144";
  if (!(g3 == Rat(5, 36288))) return "<>_{3,0,0} = " + g3.str() + ", want 5/36288";
  return "";
}

}  // namespace

int main() {
  criterion("1. correcting-class values", 1.0, mu_values);
  criterion("2. homogeneity suite", 5.0, mu_homogeneity);
  criterion("3. dual-route J-series", 10.0, dual_route_j);
  criterion("4. mirror/divisor identity", 0.0, mirror_divisor_identity);
  criterion("5. genus-0 oracle", 30.0, genus0_anchors);
  criterion("6. wall-crossing identities", 10.0, wallcross_identities);
  criterion("7. re-derivation suites", 30.0, rederivation_suites);
  criterion("8. constant maps", 0.0, constant_maps);
  if (failures != 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
