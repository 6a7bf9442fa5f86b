#pragma once

#include <map>

#include "qwc/cohomology.hpp"

namespace qwc {

/// Finite Laurent polynomial in z with cohomology-class coefficients: the
/// shape of one q-degree piece of the hypergeometric series and of its
/// truncations.  Zero coefficients are not stored.
class ZPolyClass {
 public:
  ZPolyClass() = default;

  static ZPolyClass term(int z_exp, CohClass c) {
    ZPolyClass p;
    p.add(z_exp, std::move(c));
    return p;
  }

  void add(int z_exp, CohClass c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(z_exp, std::move(c));
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  bool empty() const { return t_.empty(); }

  /// Coefficient of z^e (universal zero if absent).
  CohClass coeff(int z_exp) const {
    auto it = t_.find(z_exp);
    return it == t_.end() ? CohClass() : it->second;
  }

  int min_exp() const {
    if (t_.empty()) fail(ErrorKind::Domain, "empty z-polynomial has no exponents");
    return t_.begin()->first;
  }
  int max_exp() const {
    if (t_.empty()) fail(ErrorKind::Domain, "empty z-polynomial has no exponents");
    return t_.rbegin()->first;
  }

  ZPolyClass& operator+=(const ZPolyClass& o) {
    for (const auto& [e, c] : o.t_) add(e, c);
    return *this;
  }
  ZPolyClass& operator-=(const ZPolyClass& o) {
    for (const auto& [e, c] : o.t_) add(e, -c);
    return *this;
  }
  friend ZPolyClass operator+(ZPolyClass a, const ZPolyClass& b) { return a += b; }
  friend ZPolyClass operator-(ZPolyClass a, const ZPolyClass& b) { return a -= b; }

  ZPolyClass scaled(const Rat& s) const {
    if (s.is_zero()) return ZPolyClass();
    ZPolyClass r;
    for (const auto& [e, c] : t_) r.t_.emplace(e, c * s);
    return r;
  }

  /// Multiply by z^k (k may be negative).
  ZPolyClass z_shifted(int k) const {
    ZPolyClass r;
    for (const auto& [e, c] : t_) r.t_.emplace(e + k, c);
    return r;
  }

  friend ZPolyClass operator*(const ZPolyClass& a, const ZPolyClass& b) {
    ZPolyClass r;
    for (const auto& [ea, ca] : a.t_)
      for (const auto& [eb, cb] : b.t_) r.add(ea + eb, cup(ca, cb));
    return r;
  }

  /// Multiply by the linear factor (a H + b z) in the ring of dimension dim.
  ZPolyClass times_linear(const Rat& a, const Rat& b, int dim) const {
    ZPolyClass h_part;
    if (!a.is_zero()) h_part = ZPolyClass::term(0, CohClass::h_power(dim, 1) * a);
    ZPolyClass lin = h_part;
    if (!b.is_zero()) lin += ZPolyClass::term(1, CohClass::unit(dim) * b);
    return *this * lin;
  }

  /// Terms with nonnegative z-exponent: the "[...]_+" truncation.
  ZPolyClass plus_part() const {
    ZPolyClass r;
    for (const auto& [e, c] : t_)
      if (e >= 0) r.t_.emplace(e, c);
    return r;
  }

  /// True when every monomial H^k z^e present has k + e equal to `total`,
  /// grading z with weight 1.
  bool is_homogeneous(int total) const {
    for (const auto& [e, c] : t_)
      for (int k = 0; k <= c.dim(); ++k)
        if (!c.coeff(k).is_zero() && k + e != total) return false;
    return true;
  }

  friend bool operator==(const ZPolyClass& a, const ZPolyClass& b) {
    // Stored maps never hold zero classes, so structural equality works.
    if (a.t_.size() != b.t_.size()) return false;
    auto ia = a.t_.begin();
    for (auto ib = b.t_.begin(); ib != b.t_.end(); ++ia, ++ib) {
      if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    }
    return true;
  }
  friend bool operator!=(const ZPolyClass& a, const ZPolyClass& b) {
    return !(a == b);
  }

  const std::map<int, CohClass>& terms() const { return t_; }

 private:
  std::map<int, CohClass> t_;
};

}  // namespace qwc
