#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qwc/cohomology.hpp"
#include "qwc/rational.hpp"

namespace qwc {

// Coefficient-ring hooks for QSeries<T>.  Rat and CohClass are the two
// instantiations used here; anything with these four overloads works.
inline bool ring_is_zero(const Rat& x) { return x.is_zero(); }
inline bool ring_is_one(const Rat& x) { return x.is_one(); }
inline Rat ring_one_like(const Rat&) { return Rat(1); }
inline Rat ring_inverse(const Rat& x) {
  if (x.is_zero()) fail(ErrorKind::Singular, "constant term is not invertible");
  return Rat(1) / x;
}

inline bool ring_is_zero(const CohClass& x) { return x.is_zero(); }
inline bool ring_is_one(const CohClass& x) {
  if (x.is_universal_zero()) return false;
  return x == CohClass::unit(x.dim());
}
inline CohClass ring_one_like(const CohClass& x) {
  return x.is_universal_zero() ? CohClass() : CohClass::unit(x.dim());
}
inline CohClass ring_inverse(const CohClass& x) { return x.inverse(); }

// Whether one_like(x) is meaningful: the universal-zero cohomology class
// carries no ring dimension, so it cannot produce a unit.
inline bool ring_has_context(const Rat&) { return true; }
inline bool ring_has_context(const CohClass& x) { return !x.is_universal_zero(); }

/// Truncated power series in q with exact coefficients.  The truncation
/// `order` is explicit and inclusive: a series of order D stores the
/// coefficients of q^0 through q^D and asserts nothing beyond.  Binary
/// operations on series of different orders return the smaller order; no
/// operation ever invents coefficients it cannot know.
template <class T>
class QSeries {
 public:
  explicit QSeries(int order) : order_(check_order(order)) {
    c_.resize(static_cast<size_t>(order_) + 1);
  }
  QSeries(int order, std::vector<T> coeffs) : order_(check_order(order)) {
    if (coeffs.size() > static_cast<size_t>(order_) + 1)
      fail(ErrorKind::Domain, "more coefficients than the order admits");
    c_ = std::move(coeffs);
    c_.resize(static_cast<size_t>(order_) + 1);
  }

  static QSeries constant(int order, T v) {
    QSeries s(order);
    s.c_[0] = std::move(v);
    return s;
  }
  /// v * q^k (zero series if k exceeds the order).
  static QSeries monomial(int order, int k, T v) {
    QSeries s(order);
    if (k < 0) fail(ErrorKind::Domain, "monomial exponent must be >= 0");
    if (k <= order) s.c_[static_cast<size_t>(k)] = std::move(v);
    return s;
  }

  int order() const { return order_; }

  const T& coeff(int k) const {
    if (k < 0 || k > order_)
      fail(ErrorKind::Depth, "coefficient q^" + std::to_string(k) +
                                 " beyond stored order " +
                                 std::to_string(order_));
    return c_[static_cast<size_t>(k)];
  }
  void set_coeff(int k, T v) {
    if (k < 0 || k > order_)
      fail(ErrorKind::Depth, "coefficient q^" + std::to_string(k) +
                                 " beyond stored order " +
                                 std::to_string(order_));
    c_[static_cast<size_t>(k)] = std::move(v);
  }

  bool is_zero() const {
    for (const T& x : c_)
      if (!ring_is_zero(x)) return false;
    return true;
  }

  /// Restriction to a smaller order.  Growing the order would fabricate
  /// coefficients, so that direction is refused.
  QSeries truncate(int new_order) const {
    if (new_order > order_)
      fail(ErrorKind::Depth, "cannot extend a series of order " +
                                 std::to_string(order_) + " to order " +
                                 std::to_string(new_order));
    QSeries r(new_order);
    for (int k = 0; k <= new_order; ++k) r.c_[static_cast<size_t>(k)] = c_[static_cast<size_t>(k)];
    return r;
  }

  QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
  QSeries& operator-=(const QSeries& o) { return *this = *this - o; }
  QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

  friend QSeries operator+(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.order_, b.order_));
    for (int k = 0; k <= r.order_; ++k)
      r.c_[static_cast<size_t>(k)] = a.c_[static_cast<size_t>(k)] + b.c_[static_cast<size_t>(k)];
    return r;
  }
  friend QSeries operator-(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.order_, b.order_));
    for (int k = 0; k <= r.order_; ++k)
      r.c_[static_cast<size_t>(k)] = a.c_[static_cast<size_t>(k)] - b.c_[static_cast<size_t>(k)];
    return r;
  }
  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.order_, b.order_));
    for (int i = 0; i <= r.order_; ++i) {
      if (ring_is_zero(a.c_[static_cast<size_t>(i)])) continue;
      for (int j = 0; i + j <= r.order_; ++j)
        r.c_[static_cast<size_t>(i + j)] +=
            a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
    }
    return r;
  }

  QSeries operator-() const {
    QSeries r(order_);
    for (int k = 0; k <= order_; ++k) r.c_[static_cast<size_t>(k)] = -c_[static_cast<size_t>(k)];
    return r;
  }

  /// Scalar action of Rat on the coefficient ring.
  QSeries scaled(const Rat& s) const {
    QSeries r(order_);
    for (int k = 0; k <= order_; ++k) r.c_[static_cast<size_t>(k)] = c_[static_cast<size_t>(k)] * s;
    return r;
  }

  /// Multiplication by q^k at fixed order: coefficients shift up, the top k
  /// drop off, the bottom k are exactly zero.
  QSeries shifted(int k) const {
    if (k < 0) fail(ErrorKind::Domain, "shift exponent must be >= 0");
    QSeries r(order_);
    for (int j = 0; j + k <= order_; ++j) r.c_[static_cast<size_t>(j + k)] = c_[static_cast<size_t>(j)];
    return r;
  }

  /// d/dq; the top coefficient is no longer known, so the order drops by 1.
  QSeries derivative() const {
    if (order_ == 0)
      fail(ErrorKind::Depth, "derivative of an order-0 series has no content");
    QSeries r(order_ - 1);
    for (int k = 1; k <= order_; ++k)
      r.c_[static_cast<size_t>(k - 1)] = c_[static_cast<size_t>(k)] * Rat(k);
    return r;
  }

  /// q d/dq, which preserves the truncation order.
  QSeries theta() const {
    QSeries r(order_);
    for (int k = 1; k <= order_; ++k) r.c_[static_cast<size_t>(k)] = c_[static_cast<size_t>(k)] * Rat(k);
    return r;
  }

  /// Multiplicative inverse: b_0 = a_0^{-1}, b_n = -a_0^{-1} sum_{k>=1} a_k b_{n-k}.
  QSeries inverse() const {
    T inv0 = ring_inverse(c_[0]);
    QSeries r(order_);
    r.c_[0] = inv0;
    for (int n = 1; n <= order_; ++n) {
      T acc{};
      for (int k = 1; k <= n; ++k)
        acc += c_[static_cast<size_t>(k)] * r.c_[static_cast<size_t>(n - k)];
      r.c_[static_cast<size_t>(n)] = -(inv0 * acc);
    }
    return r;
  }

  QSeries pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    QSeries r = QSeries::constant(order_, ring_one_like(c_[0]));
    QSeries base = *this;
    while (e > 0) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }
  friend bool operator!=(const QSeries& a, const QSeries& b) {
    return !(a == b);
  }

  const std::vector<T>& coeffs() const { return c_; }

 private:
  static int check_order(int order) {
    if (order < 0) fail(ErrorKind::Domain, "series order must be >= 0");
    return order;
  }

  int order_;
  std::vector<T> c_;
};

/// exp of a series with zero constant term, via the ODE y' = a' y:
/// y_n = (1/n) sum_{k=1}^{n} k a_k y_{n-k}.
template <class T>
QSeries<T> exp(const QSeries<T>& a) {
  if (!ring_is_zero(a.coeff(0)))
    fail(ErrorKind::Domain, "exp needs a series with zero constant term");
  int D = a.order();
  QSeries<T> y(D);
  T unit{};
  bool have_context = false;
  for (int k = 0; k <= D && !have_context; ++k)
    if (ring_has_context(a.coeff(k))) {
      unit = ring_one_like(a.coeff(k));
      have_context = true;
    }
  if (!have_context)
    fail(ErrorKind::Domain, "exp cannot infer a coefficient ring context");
  y.set_coeff(0, std::move(unit));
  for (int n = 1; n <= D; ++n) {
    T acc{};
    for (int k = 1; k <= n; ++k) acc += (a.coeff(k) * Rat(k)) * y.coeff(n - k);
    y.set_coeff(n, acc * (Rat(1) / Rat(n)));
  }
  return y;
}

/// log of a series with constant term 1:
/// y_n = a_n - (1/n) sum_{k=1}^{n-1} k y_k a_{n-k}.
template <class T>
QSeries<T> log(const QSeries<T>& a) {
  if (!ring_is_one(a.coeff(0)))
    fail(ErrorKind::Domain, "log needs a series with constant term 1");
  int D = a.order();
  QSeries<T> y(D);
  for (int n = 1; n <= D; ++n) {
    T acc{};
    for (int k = 1; k < n; ++k) acc += (y.coeff(k) * Rat(k)) * a.coeff(n - k);
    y.set_coeff(n, a.coeff(n) - acc * (Rat(1) / Rat(n)));
  }
  return y;
}

/// f(g(q)) for g with zero constant term, by Horner evaluation.
template <class T>
QSeries<T> compose(const QSeries<T>& f, const QSeries<T>& g) {
  if (!ring_is_zero(g.coeff(0)))
    fail(ErrorKind::Domain, "composition needs an inner series vanishing at 0");
  int D = std::min(f.order(), g.order());
  QSeries<T> gD = g.truncate(D);
  QSeries<T> r(D);
  for (int k = f.order() < D ? f.order() : D; k >= 0; --k) {
    r = r * gD;
    r += QSeries<T>::constant(D, f.coeff(k));
  }
  return r;
}

/// Compositional inverse of f = a_1 q + ...  with a_1 invertible: returns g
/// with f(g(q)) = q to the stored order.  Solved coefficient by coefficient;
/// each step evaluates f on the partial answer and corrects the next term.
template <class T>
QSeries<T> revert(const QSeries<T>& f) {
  if (!ring_is_zero(f.coeff(0)))
    fail(ErrorKind::Domain, "reversion needs zero constant term");
  int D = f.order();
  if (D < 1 || ring_is_zero(f.coeff(1)))
    fail(ErrorKind::Singular, "reversion needs an invertible linear term");
  T inv1 = ring_inverse(f.coeff(1));
  QSeries<T> g(D);
  g.set_coeff(1, inv1);
  for (int n = 2; n <= D; ++n) {
    // With g correct through q^{n-1} and g_n = 0, the q^n coefficient of
    // f(g) is a_1 g_n + (known); solve for g_n.
    T err = compose(f, g).coeff(n);
    g.set_coeff(n, -(inv1 * err));
  }
  return g;
}

using RatSeries = QSeries<Rat>;

}  // namespace qwc
