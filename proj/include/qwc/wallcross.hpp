#pragma once

#include <map>
#include <vector>

#include "qwc/brackets.hpp"
#include "qwc/ifun.hpp"
#include "qwc/invariant_table.hpp"
#include "qwc/report.hpp"

namespace qwc {

namespace detail {

/// Chamber data every transform needs: J0, f = (J1/H)/J0, exp(f), and the
/// powers exp(d*f) for d up to the working order.
struct ChamberSeries {
  RatSeries j0;
  RatSeries f;
  std::vector<RatSeries> ef_pow;  // ef_pow[d] = exp(f)^d, d = 0..order

  ChamberSeries(const CompleteIntersection& X, const Stability& eps, int order)
      : j0(order), f(order) {
    SmallJ sj = small_j(X, eps, order);
    j0 = sj.j0;
    if (!sj.j1_unit.is_zero())
      fail(ErrorKind::Domain,
           "transform needs J1 proportional to H; " + X.str() + " has a 1-part");
    f = sj.j1_h * sj.j0.inverse();
    RatSeries ef = exp(f);
    ef_pow.reserve(static_cast<size_t>(order) + 1);
    ef_pow.push_back(RatSeries::constant(order, Rat(1)));
    for (int d = 1; d <= order; ++d) ef_pow.push_back(ef_pow.back() * ef);
  }

  /// sum_{d=1..order} v_d q^d exp(d f).
  RatSeries dressed_sum(const std::vector<Rat>& v) const {
    RatSeries a(j0.order());
    for (int d = 1; d <= j0.order(); ++d)
      a += ef_pow[static_cast<size_t>(d)].shifted(d).scaled(v[static_cast<size_t>(d) - 1]);
    return a;
  }

  /// Solve sum_{d} v_d q^d exp(d f) = a for the v_d, degree by degree.
  std::vector<Rat> undress(const RatSeries& a) const {
    std::vector<Rat> v;
    for (int d = 1; d <= a.order(); ++d) {
      Rat x = a.coeff(d);
      for (int e = 1; e < d; ++e)
        x -= v[static_cast<size_t>(e) - 1] * ef_pow[static_cast<size_t>(e)].coeff(d - e);
      v.push_back(std::move(x));
    }
    return v;
  }
};

inline int resolve_depth(const InvariantTable& t, int depth) {
  if (depth < 0) return t.depth();
  if (depth > t.depth())
    fail(ErrorKind::Depth, "requested depth " + std::to_string(depth) +
                               " exceeds table depth " + std::to_string(t.depth()));
  return depth;
}

inline void require_cy3(const CompleteIntersection& X) {
  if (!X.calabi_yau_threefold())
    fail(ErrorKind::Domain,
         "wall-crossing transforms are implemented for Calabi-Yau threefolds, got " +
             X.str());
}

}  // namespace detail

/// Forward transform: from the unpointed potential at infinity stability to
/// the epsilon chamber.  Degree by degree,
///   genus >= 2 (and genus 0 with C = 0):
///     S_eps = J0^{2-2g} (C + sum_d q^d e^{d f} v_d) - C,   C = <>_{g,0,0}
///   genus 1:
///     S_eps = -(1/24)(int_X H c_2(T)) f - (chi/24) log J0 + sum_d q^d e^{d f} v_d
/// where v_d are the input values and J0, f are the chamber truncations.
inline InvariantTable quasimap_from_gw(const InvariantTable& gw,
                                       const Stability& eps, int depth = -1) {
  detail::require_cy3(gw.target);
  if (!(gw.stability == Stability::infinity()))
    fail(ErrorKind::Context,
         "forward transform expects an input table at infinity stability");
  int D = detail::resolve_depth(gw, depth);
  detail::ChamberSeries ch(gw.target, eps, D);
  std::vector<Rat> v(gw.values.begin(), gw.values.begin() + D);
  RatSeries a = ch.dressed_sum(v);
  RatSeries s(D);
  if (gw.genus == 1) {
    Rat c2h = second_chern_h_pairing(gw.target);
    Rat chi = euler_characteristic(gw.target);
    s = a - ch.f.scaled(c2h / Rat(24)) - log(ch.j0).scaled(chi / Rat(24));
  } else {
    Rat c = gw.genus == 0
                ? Rat(0)
                : BracketCalculus(gw.target).constant_map_value(gw.genus);
    s = (RatSeries::constant(D, c) + a) * ch.j0.pow(2 - 2 * gw.genus) -
        RatSeries::constant(D, c);
  }
  std::vector<Rat> out;
  for (int d = 1; d <= D; ++d) out.push_back(s.coeff(d));
  return InvariantTable(gw.target, gw.genus, eps, std::move(out));
}

/// Inverse transform: from an epsilon-chamber table back to infinity.  The
/// stated eps must match the table's stability; the forward formulas are
/// solved exactly (the dressed sum is triangular in the degree).
inline InvariantTable gw_from_quasimap(const InvariantTable& qm,
                                       const Stability& eps, int depth = -1) {
  detail::require_cy3(qm.target);
  if (!(qm.stability == eps))
    fail(ErrorKind::Context, "table stability " + qm.stability.str() +
                                 " does not match requested " + eps.str());
  if (qm.stability == Stability::infinity())
    fail(ErrorKind::Context, "table is already at infinity stability");
  int D = detail::resolve_depth(qm, depth);
  detail::ChamberSeries ch(qm.target, eps, D);
  RatSeries s = qm.series(D);
  RatSeries a(D);
  if (qm.genus == 1) {
    Rat c2h = second_chern_h_pairing(qm.target);
    Rat chi = euler_characteristic(qm.target);
    a = s + ch.f.scaled(c2h / Rat(24)) + log(ch.j0).scaled(chi / Rat(24));
  } else {
    Rat c = qm.genus == 0
                ? Rat(0)
                : BracketCalculus(qm.target).constant_map_value(qm.genus);
    a = (s + RatSeries::constant(D, c)) * ch.j0.pow(2 * qm.genus - 2) -
        RatSeries::constant(D, c);
  }
  return InvariantTable(qm.target, qm.genus, Stability::infinity(),
                        ch.undress(a));
}

/// Formal linear combination of brackets with q-series coefficients: the
/// carrier for identity checks that must hold with table values treated as
/// opaque symbols.
struct BracketSeries {
  int order;
  RatSeries scalar;
  std::map<Bracket, RatSeries> terms;

  explicit BracketSeries(int ord) : order(ord), scalar(ord) {}

  void add(const Bracket& b, const RatSeries& s) {
    if (s.is_zero()) return;
    auto [it, fresh] = terms.try_emplace(b, s);
    if (!fresh) {
      it->second += s;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  /// Remove every psi*1 insertion by the dilaton rule, converting anomaly
  /// brackets into the scalar channel.  Terminates because each step strictly
  /// lowers the insertion count.
  void eliminate_dilaton(const BracketCalculus& calc) {
    std::map<Bracket, RatSeries> work = std::move(terms);
    terms.clear();
    while (!work.empty()) {
      auto node = work.extract(work.begin());
      const Bracket& b = node.key();
      RatSeries s = std::move(node.mapped());
      if (s.is_zero()) continue;
      if (!b.contains(0, 1)) {
        add(b, s);
        continue;
      }
      if (b == BracketCalculus::anomaly_bracket()) {
        scalar += s.scaled(calc.anomaly_value());
        continue;
      }
      BracketExpression e = calc.dilaton_reduce(b);
      scalar += s.scaled(e.scalar);
      for (const auto& [c, b2] : e.terms) {
        auto [it, fresh] = work.try_emplace(b2, s.scaled(c));
        if (!fresh) it->second += s.scaled(c);
      }
    }
  }

  void scale(const RatSeries& w) {
    scalar *= w;
    for (auto it = terms.begin(); it != terms.end();) {
      it->second *= w;
      it = it->second.is_zero() ? terms.erase(it) : std::next(it);
    }
  }

  friend bool operator==(const BracketSeries& a, const BracketSeries& b) {
    return a.scalar == b.scalar && a.terms == b.terms;
  }

  /// Smallest q-order at which the two sides differ, or -1 if equal.
  static int first_mismatch(const BracketSeries& a, const BracketSeries& b) {
    int ord = std::min(a.order, b.order);
    for (int k = 0; k <= ord; ++k) {
      if (a.scalar.coeff(k) != b.scalar.coeff(k)) return k;
      for (const auto& [br, s] : a.terms) {
        auto it = b.terms.find(br);
        Rat other = it == b.terms.end() ? Rat(0) : it->second.coeff(k);
        if (s.coeff(k) != other) return k;
      }
      for (const auto& [br, s] : b.terms)
        if (a.terms.find(br) == a.terms.end() && !s.coeff(k).is_zero()) return k;
    }
    return -1;
  }
};

/// Re-executes, mechanically, the derivation that turns the chamber
/// potential with J-substituted insertions into the dressed potential at
/// infinity: expand
///   F_g^inf(q, J1 - (J0-1) psi)
/// symbolically, remove every psi-insertion with the dilaton rule (anomaly
/// included at genus 1), multiply by J0^{2g-2}, add the explicit
/// (chi/24) log J0 term at genus 1, and compare against the expansion of
///   F_g^inf(q, J1/J0).
/// Both sides are maps {bracket -> q-series}; equality is exact at every
/// order up to `depth`.  Works for any semi-positive target (index >= 0).
inline CheckReport semipositive_identity_check(const CompleteIntersection& X,
                                               int g, const Stability& eps,
                                               int depth) {
  if (X.index() < 0)
    fail(ErrorKind::Domain, "identity check needs a semi-positive target, got " + X.str());
  if (g < 0 || depth < 0) fail(ErrorKind::Domain, "need g >= 0 and depth >= 0");

  BracketCalculus calc(X);
  SmallJ sj = small_j(X, eps, depth);
  RatSeries j0inv = sj.j0.inverse();
  RatSeries one_minus_j0 = RatSeries::constant(depth, Rat(1)) - sj.j0;

  // Powers of the three insertion weights, up to the truncation bound; each
  // weight has positive q-valuation, so m+j beyond depth contributes nothing.
  auto powers = [&](const RatSeries& s) {
    std::vector<RatSeries> p{RatSeries::constant(depth, Rat(1))};
    for (int k = 1; k <= depth; ++k) p.push_back(p.back() * s);
    return p;
  };
  std::vector<RatSeries> th = powers(sj.j1_h);          // H-part of J1
  std::vector<RatSeries> tu = powers(sj.j1_unit);       // 1-part of J1
  std::vector<RatSeries> dj = powers(one_minus_j0);     // -(J0-1)
  std::vector<RatSeries> rh = powers(sj.j1_h * j0inv);  // H-part of J1/J0
  std::vector<RatSeries> ru = powers(sj.j1_unit * j0inv);

  auto insertions = [](int m1, int m2, int j) {
    std::vector<Insertion> ins;
    ins.insert(ins.end(), static_cast<size_t>(m1), Insertion{1, 0});
    ins.insert(ins.end(), static_cast<size_t>(m2), Insertion{0, 0});
    ins.insert(ins.end(), static_cast<size_t>(j), Insertion{0, 1});
    return ins;
  };

  BracketSeries lhs(depth), rhs(depth);
  for (int d = 0; d <= depth; ++d)
    for (int m1 = 0; d + m1 <= depth; ++m1)
      for (int m2 = 0; d + m1 + m2 <= depth; ++m2) {
        // Right side: no psi-insertions.
        if (d > 0 || 2 * g - 2 + m1 + m2 > 0) {
          RatSeries c = rh[static_cast<size_t>(m1)] * ru[static_cast<size_t>(m2)];
          c = c.scaled(Rat(1) / (factorial(m1) * factorial(m2)));
          rhs.add(Bracket(g, d, insertions(m1, m2, 0)), c.shifted(d));
        }
        // Left side: additionally j copies of -(J0-1) psi.
        for (int j = 0; d + m1 + m2 + j <= depth; ++j) {
          if (d == 0 && 2 * g - 2 + m1 + m2 + j <= 0) continue;
          RatSeries c = th[static_cast<size_t>(m1)] * tu[static_cast<size_t>(m2)] *
                        dj[static_cast<size_t>(j)];
          c = c.scaled(Rat(1) / (factorial(m1) * factorial(m2) * factorial(j)));
          lhs.add(Bracket(g, d, insertions(m1, m2, j)), c.shifted(d));
        }
      }

  lhs.eliminate_dilaton(calc);
  if (g == 1) lhs.scalar += log(sj.j0).scaled(calc.chi() / Rat(24));
  lhs.scale(sj.j0.pow(2 * g - 2));

  if (lhs == rhs) return CheckReport::ok();
  int bad = BracketSeries::first_mismatch(lhs, rhs);
  return CheckReport::failure("dilaton-engine expansion disagrees with the J1/J0 side",
                              bad);
}

/// Restatement check: push a table at infinity through the forward transform
/// at 0+, dress it back with J0^{2g-2} and the constant bookkeeping, and
/// re-expand in the mirror coordinate; the result must be the original table
/// read off in Q.  Valid for genus >= 1 (genus 1 uses its anomaly terms in
/// place of the constant-map value).
inline CheckReport bcov_identity_check(const InvariantTable& gw, int depth) {
  detail::require_cy3(gw.target);
  if (!(gw.stability == Stability::infinity()))
    fail(ErrorKind::Context, "restatement check expects a table at infinity");
  if (gw.genus < 1)
    fail(ErrorKind::Domain, "restatement check needs genus >= 1");
  int D = detail::resolve_depth(gw, depth);

  InvariantTable qm = quasimap_from_gw(gw, Stability::zero_plus(), D);
  RatSeries s = qm.series(D);
  SmallJ sj = small_j(gw.target, Stability::zero_plus(), D);
  RatSeries f = sj.j1_h * sj.j0.inverse();

  RatSeries dressed(D);
  Rat constant;
  if (gw.genus == 1) {
    Rat c2h = second_chern_h_pairing(gw.target);
    Rat chi = euler_characteristic(gw.target);
    dressed = s + f.scaled(c2h / Rat(24)) + log(sj.j0).scaled(chi / Rat(24));
  } else {
    constant = BracketCalculus(gw.target).constant_map_value(gw.genus);
    dressed = (s + RatSeries::constant(D, constant)) *
              sj.j0.pow(2 * gw.genus - 2);
  }

  RatSeries q_of_Q = revert(mirror_map(gw.target, D));
  RatSeries lhs = compose(dressed, q_of_Q);

  RatSeries rhs(D);
  rhs.set_coeff(0, constant);
  for (int d = 1; d <= D; ++d) rhs.set_coeff(d, gw.value(d));

  if (lhs == rhs) return CheckReport::ok();
  for (int k = 0; k <= D; ++k)
    if (lhs.coeff(k) != rhs.coeff(k))
      return CheckReport::failure("mirror re-expansion disagrees with the input table", k);
  return CheckReport::failure("order mismatch", -1);
}

/// Fano independence: for index >= 2 every correcting class vanishes, so the
/// chamber data is trivial and any transform is the identity; for index 1
/// the single surviving class is (prod l_i!) * 1 in degree 1, and the string
/// rule kills it against primary (psi-free) insertions.
inline CheckReport fano_independence_check(const CompleteIntersection& X,
                                           int g, int depth) {
  if (X.index() < 1)
    fail(ErrorKind::Domain, "independence check needs index >= 1, got " + X.str());
  if (g < 0 || depth < 1) fail(ErrorKind::Domain, "need g >= 0 and depth >= 1");

  SmallJ sj = small_j(X, Stability::zero_plus(), depth);
  bool trivial_chamber = sj.j0 == RatSeries::constant(depth, Rat(1)) &&
                         sj.j1_h.is_zero();

  if (X.index() >= 2) {
    for (int d = 1; d <= depth; ++d)
      if (!mu(X, d).value.empty())
        return CheckReport::failure("mu_" + std::to_string(d) + " nonzero at index >= 2", d);
    if (!trivial_chamber || !sj.j1_unit.is_zero())
      return CheckReport::failure("chamber series not trivial at index >= 2");
    return CheckReport::ok("all correcting classes vanish; transforms are the identity");
  }

  // Index 1: mu_1 = (prod l_i!) * 1, everything higher vanishes.
  Rat lfac(1);
  for (int l : X.degrees) lfac *= factorial(l);
  ZPolyClass expected = ZPolyClass::term(0, CohClass::unit(X.dim()) * lfac);
  if (!(mu(X, 1).value == expected))
    return CheckReport::failure("mu_1 is not (prod l_i!) * 1", 1);
  for (int d = 2; d <= depth; ++d)
    if (!mu(X, d).value.empty())
      return CheckReport::failure("mu_" + std::to_string(d) + " nonzero at index 1", d);
  if (!trivial_chamber)
    return CheckReport::failure("J0 or J1 H-part nontrivial at index 1");

  // The degree-1 shift is q (prod l_i!) 1; on primary brackets a plain
  // 1-insertion string-reduces to zero, so primary invariants cannot move.
  BracketCalculus calc(X);
  for (int d = 1; d <= depth; ++d)
    for (int extra = 0; extra <= 2; ++extra) {
      std::vector<Insertion> ins{{0, 0}};
      for (int t = 0; t < extra; ++t) ins.push_back({1 + t % X.dim(), 0});
      BracketExpression e = calc.string_reduce(Bracket(g, d, ins));
      if (!e.is_scalar() || !e.scalar.is_zero())
        return CheckReport::failure("string rule left residue on a primary bracket", d);
    }
  return CheckReport::ok("index-1 shift is string-exact on primary brackets");
}

}  // namespace qwc
