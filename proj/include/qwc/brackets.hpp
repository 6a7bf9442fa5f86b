#pragma once

#include <algorithm>
#include <map>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "qwc/bernoulli.hpp"
#include "qwc/cohomology.hpp"
#include "qwc/invariant_table.hpp"

namespace qwc {

/// One insertion H^h psi^a.  Ordered lexicographically so brackets can keep
/// a canonical sorted multiset.
struct Insertion {
  int h = 0;  // H-power, 0..dim
  int a = 0;  // psi-power, >= 0

  friend bool operator==(const Insertion&, const Insertion&) = default;
  friend auto operator<=>(const Insertion&, const Insertion&) = default;
};

/// Symbolic invariant <gamma_1 psi^{a_1}, ..., gamma_k psi^{a_k}>_{g,k,d}
/// with ambient insertions gamma = H^h.  Insertions are kept sorted; two
/// brackets with the same multiset compare equal.
struct Bracket {
  int genus = 0;
  int degree = 0;
  std::vector<Insertion> ins;

  Bracket(int g, int d, std::vector<Insertion> insertions)
      : genus(g), degree(d), ins(std::move(insertions)) {
    if (genus < 0 || degree < 0)
      fail(ErrorKind::Domain, "bracket needs genus >= 0 and degree >= 0");
    for (const Insertion& i : ins)
      if (i.h < 0 || i.a < 0)
        fail(ErrorKind::Domain, "insertion powers must be nonnegative");
    std::sort(ins.begin(), ins.end());
  }

  int points() const { return static_cast<int>(ins.size()); }

  /// Degree-0 brackets with 2g-2+k <= 0 have no underlying moduli and carry
  /// no value; everything else is a legitimate symbol.
  bool stable() const { return degree > 0 || 2 * genus - 2 + points() > 0; }

  bool contains(int h, int a) const {
    return std::find(ins.begin(), ins.end(), Insertion{h, a}) != ins.end();
  }

  Bracket without(size_t idx) const {
    std::vector<Insertion> rest = ins;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(idx));
    return Bracket(genus, degree, std::move(rest));
  }

  Bracket replaced(size_t idx, Insertion next) const {
    std::vector<Insertion> rest = ins;
    rest[idx] = next;
    return Bracket(genus, degree, std::move(rest));
  }

  friend bool operator==(const Bracket&, const Bracket&) = default;
  friend auto operator<=>(const Bracket&, const Bracket&) = default;

  std::string str() const {
    std::string s = "<";
    for (size_t i = 0; i < ins.size(); ++i) {
      if (i) s += ", ";
      const Insertion& t = ins[i];
      if (t.h == 0)
        s += "1";
      else if (t.h == 1)
        s += "H";
      else
        s += "H^" + std::to_string(t.h);
      if (t.a == 1)
        s += " psi";
      else if (t.a > 1)
        s += " psi^" + std::to_string(t.a);
    }
    s += ">_{" + std::to_string(genus) + "," + std::to_string(points()) + "," +
         std::to_string(degree) + "}";
    return s;
  }
};

/// Rational-linear combination of brackets plus an already-evaluated part.
/// Kept normalized: terms sorted by bracket, like terms merged, zeros gone.
struct BracketExpression {
  Rat scalar;
  std::vector<std::pair<Rat, Bracket>> terms;

  static BracketExpression of(Bracket b) {
    BracketExpression e;
    e.terms.emplace_back(Rat(1), std::move(b));
    return e;
  }
  static BracketExpression constant(Rat v) {
    BracketExpression e;
    e.scalar = std::move(v);
    return e;
  }

  void add(Rat c, Bracket b) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(
        terms.begin(), terms.end(), b,
        [](const auto& t, const Bracket& key) { return t.second < key; });
    if (it != terms.end() && it->second == b) {
      it->first += c;
      if (it->first.is_zero()) terms.erase(it);
    } else {
      terms.insert(it, {std::move(c), std::move(b)});
    }
  }

  BracketExpression& operator+=(const BracketExpression& o) {
    scalar += o.scalar;
    for (const auto& [c, b] : o.terms) add(c, b);
    return *this;
  }

  BracketExpression scaled(const Rat& s) const {
    BracketExpression e;
    if (s.is_zero()) return e;
    e.scalar = scalar * s;
    e.terms.reserve(terms.size());
    for (const auto& [c, b] : terms) e.terms.emplace_back(c * s, b);
    return e;
  }

  bool is_scalar() const { return terms.empty(); }
};

/// The three reduction rules of the ambient bracket calculus over a fixed
/// target, plus the closed degree-0 values.  All rules strictly decrease the
/// number of insertions, so any rule order terminates; evaluation order is
/// immaterial (the suite tests confluence by randomizing it).
class BracketCalculus {
 public:
  explicit BracketCalculus(CompleteIntersection X)
      : X_(std::move(X)), chi_(euler_characteristic(X_)) {}

  const CompleteIntersection& target() const { return X_; }
  const Rat& chi() const { return chi_; }

  /// The bracket whose dilaton reduction is anomalous: <1 psi>_{1,1,0}.
  static Bracket anomaly_bracket() { return Bracket(1, 0, {{0, 1}}); }
  Rat anomaly_value() const { return chi_ / Rat(24); }

  /// String rule: remove one plain 1-insertion, lower each remaining
  /// psi-power by one (summed over choices); no psi-powers means zero.
  BracketExpression string_reduce(const Bracket& b) const {
    size_t at = find_insertion(b, 0, 0, "string");
    Bracket rest = b.without(at);
    BracketExpression out;
    for (size_t j = 0; j < rest.ins.size(); ++j) {
      if (rest.ins[j].a == 0) continue;
      out.add(Rat(1), rest.replaced(j, {rest.ins[j].h, rest.ins[j].a - 1}));
    }
    return out;
  }

  /// Dilaton rule: remove one psi*1 insertion, multiply by 2g-2+k with k the
  /// remaining insertion count.  The single exception <1 psi>_{1,1,0} is the
  /// anomaly, which evaluates to chi/24 directly.
  BracketExpression dilaton_reduce(const Bracket& b) const {
    if (b == anomaly_bracket())
      return BracketExpression::constant(anomaly_value());
    size_t at = find_insertion(b, 0, 1, "dilaton");
    Bracket rest = b.without(at);
    // Sequence the factor before the move: argument evaluation order is
    // unspecified, so it must not read rest inside the same call.
    Rat factor(2 * b.genus - 2 + rest.points());
    BracketExpression out;
    out.add(factor, std::move(rest));
    return out;
  }

  /// Divisor rule: remove one plain H-insertion; d times the remainder plus
  /// the psi-lowered terms with H cupped into each remaining insertion.
  /// Insertions pushed above H^dim vanish.
  BracketExpression divisor_reduce(const Bracket& b) const {
    size_t at = find_insertion(b, 1, 0, "divisor");
    Bracket rest = b.without(at);
    BracketExpression out;
    for (size_t j = 0; j < rest.ins.size(); ++j) {
      if (rest.ins[j].a == 0) continue;
      if (rest.ins[j].h + 1 > X_.dim()) continue;
      out.add(Rat(1), rest.replaced(j, {rest.ins[j].h + 1, rest.ins[j].a - 1}));
    }
    out.add(Rat(b.degree), std::move(rest));
    return out;
  }

  /// Degree-0 unpointed value for g >= 2 on a threefold:
  ///   <>_{g,0,0} = ((-1)^g / 2) chi * (|B_{2g}|/2g) (|B_{2g-2}|/(2g-2)) / (2g-2)!
  Rat constant_map_value(int g) const {
    if (g < 2) fail(ErrorKind::Domain, "constant-map formula needs g >= 2");
    if (X_.dim() != 3)
      fail(ErrorKind::Domain, "constant-map formula is for threefolds, got " + X_.str());
    Rat v = chi_ / Rat(2);
    if (g % 2) v = -v;
    v *= abs(bernoulli(2 * g)) / Rat(2 * g);
    v *= abs(bernoulli(2 * g - 2)) / Rat(2 * g - 2);
    v /= factorial(2 * g - 2);
    return v;
  }

  /// Full evaluation: apply rules until every surviving bracket is either
  /// table-valued (unpointed, d >= 1, matching genus), the degree-0
  /// constant-map value, or the anomaly.  Anything else is an error naming
  /// the offending bracket.
  Rat reduce(const BracketExpression& expr, const InvariantTable* table) const {
    Rat acc = expr.scalar;
    for (const auto& [c, b] : expr.terms) acc += c * value_of(b, table);
    return acc;
  }
  Rat reduce(const Bracket& b, const InvariantTable* table) const {
    return value_of(b, table);
  }

  /// Memoized single-bracket evaluation.  The memo is keyed by bracket and
  /// assumes a fixed table, so the calculus keeps one memo per table
  /// identity; passing a different table object clears it.
  Rat value_of(const Bracket& b, const InvariantTable* table) const {
    {
      std::shared_lock lock(memo_mutex_);
      if (table == memo_table_) {
        auto it = memo_.find(b);
        if (it != memo_.end()) return it->second;
      }
    }
    Rat v = compute(b, table);
    {
      std::unique_lock lock(memo_mutex_);
      if (table != memo_table_) {
        memo_.clear();
        memo_table_ = table;
      }
      memo_.emplace(b, v);
    }
    return v;
  }

 private:
  static size_t find_insertion(const Bracket& b, int h, int a,
                               const char* rule) {
    for (size_t i = 0; i < b.ins.size(); ++i)
      if (b.ins[i].h == h && b.ins[i].a == a) return i;
    fail(ErrorKind::Domain, std::string(rule) + " rule does not apply to " + b.str());
  }

  Rat compute(const Bracket& b, const InvariantTable* table) const {
    if (!b.stable())
      fail(ErrorKind::Unresolved,
           b.str() + " has no defined moduli; supply or avoid it");
    if (b.contains(0, 0)) return reduce(string_reduce(b), table);
    if (b == anomaly_bracket()) return anomaly_value();
    if (b.contains(0, 1)) return reduce(dilaton_reduce(b), table);
    if (b.contains(1, 0)) return reduce(divisor_reduce(b), table);
    if (b.ins.empty()) {
      if (b.degree == 0) return constant_map_value(b.genus);
      if (table == nullptr || table->genus != b.genus ||
          !(table->target == X_) ||
          !(table->stability == Stability::infinity()))
        fail(ErrorKind::Unresolved,
             b.str() + " needs a genus-" + std::to_string(b.genus) +
                 " table at infinity for " + X_.str());
      return table->value(b.degree);  // Depth error past the table's maximum
    }
    fail(ErrorKind::Unresolved,
         b.str() + " has insertions outside the reducible span");
  }

  CompleteIntersection X_;
  Rat chi_;

  mutable std::shared_mutex memo_mutex_;
  mutable std::map<Bracket, Rat> memo_;
  mutable const InvariantTable* memo_table_ = nullptr;
};

}  // namespace qwc
