#pragma once

#include <vector>

#include "qwc/target.hpp"

namespace qwc {

/// Element of the ambient-restricted even cohomology Q[H]/(H^{dim+1}) of a
/// complete intersection, stored as coefficients of 1, H, ..., H^dim.
///
/// A default-constructed class is the "universal zero": it has no recorded
/// dimension and combines with classes of any dimension.  This lets series
/// code use value-initialized coefficients without threading the target
/// through every temporary.  Mixing two nonempty classes of different
/// dimensions is a Context error.
class CohClass {
 public:
  CohClass() = default;
  explicit CohClass(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {}

  static CohClass zero() { return CohClass(); }
  static CohClass unit(int dim) {
    std::vector<Rat> c(static_cast<size_t>(dim) + 1);
    c[0] = Rat(1);
    return CohClass(std::move(c));
  }
  /// H^k, truncated to zero when k exceeds the dimension.
  static CohClass h_power(int dim, int k) {
    std::vector<Rat> c(static_cast<size_t>(dim) + 1);
    if (k >= 0 && k <= dim) c[static_cast<size_t>(k)] = Rat(1);
    return CohClass(std::move(c));
  }

  /// Dimension of the context, or -1 for the universal zero.
  int dim() const { return static_cast<int>(c_.size()) - 1; }
  bool is_universal_zero() const { return c_.empty(); }

  bool is_zero() const {
    for (const Rat& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }

  /// Coefficient of H^k; zero beyond the stored range.
  const Rat& coeff(int k) const {
    static const Rat zero;
    if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<size_t>(k)];
  }

  void set_coeff(int k, Rat v) {
    if (k < 0 || k >= static_cast<int>(c_.size()))
      fail(ErrorKind::Domain, "coefficient index out of range");
    c_[static_cast<size_t>(k)] = std::move(v);
  }

  CohClass& operator+=(const CohClass& o) {
    if (o.is_universal_zero()) return *this;
    if (is_universal_zero()) return *this = o;
    require_same_dim(o);
    for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  CohClass& operator-=(const CohClass& o) {
    if (o.is_universal_zero()) return *this;
    if (is_universal_zero()) {
      *this = o;
      for (Rat& x : c_) x = -x;
      return *this;
    }
    require_same_dim(o);
    for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  CohClass& operator*=(const Rat& s) {
    for (Rat& x : c_) x *= s;
    return *this;
  }

  friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
  friend CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
  friend CohClass operator*(CohClass a, const Rat& s) { return a *= s; }
  friend CohClass operator*(const Rat& s, CohClass a) { return a *= s; }
  CohClass operator-() const {
    CohClass r = *this;
    for (Rat& x : r.c_) x = -x;
    return r;
  }

  /// Cup product, truncating powers above H^dim.
  friend CohClass cup(const CohClass& a, const CohClass& b) {
    if (a.is_universal_zero() || b.is_universal_zero()) return CohClass();
    a.require_same_dim(b);
    std::vector<Rat> r(a.c_.size());
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (size_t j = 0; i + j < r.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return CohClass(std::move(r));
  }
  friend CohClass operator*(const CohClass& a, const CohClass& b) {
    return cup(a, b);
  }

  /// Divide by H.  Requires the H^0 part to vanish; the top degree of the
  /// quotient is set to zero (information above H^dim was never stored).
  CohClass div_h() const {
    if (is_universal_zero()) return *this;
    if (!c_[0].is_zero())
      fail(ErrorKind::Domain, "div_h needs a class with no H^0 part");
    std::vector<Rat> r(c_.size());
    for (size_t k = 0; k + 1 < c_.size(); ++k) r[k] = c_[k + 1];
    return CohClass(std::move(r));
  }

  /// Multiplicative inverse; Singular error when the H^0 part vanishes.
  CohClass inverse() const {
    if (is_universal_zero() || c_[0].is_zero())
      fail(ErrorKind::Singular, "class with zero H^0 part is not invertible");
    // Write a = a0 (1 + x) with x nilpotent; invert by the finite geometric
    // series 1 - x + x^2 - ...
    int m = dim();
    CohClass x = *this * (Rat(1) / c_[0]);
    x.c_[0] = Rat(0);
    CohClass acc = CohClass::unit(m);
    CohClass pw = CohClass::unit(m);
    for (int k = 1; k <= m; ++k) {
      pw = cup(pw, x);
      acc += (k % 2 ? -pw : pw);
    }
    return acc * (Rat(1) / c_[0]);
  }

  friend bool operator==(const CohClass& a, const CohClass& b) {
    if (a.is_universal_zero()) return b.is_zero();
    if (b.is_universal_zero()) return a.is_zero();
    if (a.c_.size() != b.c_.size()) return false;
    return a.c_ == b.c_;
  }
  friend bool operator!=(const CohClass& a, const CohClass& b) {
    return !(a == b);
  }

  const std::vector<Rat>& coeffs() const { return c_; }

 private:
  void require_same_dim(const CohClass& o) const {
    if (c_.size() != o.c_.size())
      fail(ErrorKind::Context, "mixing cohomology classes of dimensions " +
                                   std::to_string(dim()) + " and " +
                                   std::to_string(o.dim()));
  }

  std::vector<Rat> c_;
};

/// Integral over X of a class: top coefficient times deg X = prod(l_i),
/// because H^dim evaluates to the degree.  The universal zero integrates
/// to zero; otherwise the class must live in X's ring.
inline Rat integrate(const CohClass& a, const CompleteIntersection& X) {
  if (a.is_universal_zero()) return Rat(0);
  if (a.dim() != X.dim())
    fail(ErrorKind::Context, "integrating a class of dimension " +
                                 std::to_string(a.dim()) + " over " + X.str());
  return a.coeff(X.dim()) * X.degree();
}

/// Total Chern class of the tangent bundle, c(T_X) = (1+H)^{n+1} /
/// prod_i (1 + l_i H), truncated to H^dim.
inline CohClass tangent_chern(const CompleteIntersection& X) {
  int m = X.dim();
  std::vector<Rat> num(static_cast<size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) num[static_cast<size_t>(k)] = binomial(X.n + 1, k);
  CohClass c(std::move(num));
  for (int l : X.degrees) {
    std::vector<Rat> f(static_cast<size_t>(m) + 1);
    f[0] = Rat(1);
    if (m >= 1) f[1] = Rat(l);
    c = cup(c, CohClass(std::move(f)).inverse());
  }
  return c;
}

/// Topological Euler characteristic: integral of the top Chern class.
inline Rat euler_characteristic(const CompleteIntersection& X) {
  return integrate(tangent_chern(X), X);
}

/// Integral of H * c_{dim-1}(T_X), the pairing that enters the genus-one
/// transform on threefolds.
inline Rat second_chern_h_pairing(const CompleteIntersection& X) {
  return tangent_chern(X).coeff(X.dim() - 1) * X.degree();
}

}  // namespace qwc
