#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdlib>
#include <iosfwd>
#include <ostream>
#include <string>
#include <string_view>

#include "qwc/errors.hpp"

namespace qwc {

/// Exact rational number.  Thin wrapper over GMP's mpq_class that pins down
/// the textual format used everywhere in this library: canonical "p/q" with
/// q > 0 and gcd(|p|, q) = 1, collapsing to plain "p" for integers.  All
/// arithmetic is exact; there is no floating point anywhere downstream.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long n) : v_(static_cast<signed long>(n)) {}
  explicit Rat(const mpz_class& n) : v_(n) {}
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// p/q with arbitrary integer operands; q must be nonzero.
  Rat(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (den == 0) fail(ErrorKind::Singular, "rational with zero denominator");
    v_.canonicalize();
  }
  Rat(long num, long den) : Rat(mpz_class(num), mpz_class(den)) {}

  /// Accepts optional leading '-', digits, optionally "/digits" with a
  /// positive denominator after canonicalization.  Whitespace is not allowed:
  /// the grammar here is exactly what str() emits.
  static Rat parse(std::string_view s) {
    auto bad = [&] {
      fail(ErrorKind::Parse, "malformed rational '" + std::string(s) + "'");
    };
    if (s.empty()) bad();
    std::string_view num = s, den;
    if (auto pos = s.find('/'); pos != std::string_view::npos) {
      num = s.substr(0, pos);
      den = s.substr(pos + 1);
      if (den.empty()) bad();
    }
    auto digits_ok = [](std::string_view t, bool allow_sign) {
      if (allow_sign && !t.empty() && t.front() == '-') t.remove_prefix(1);
      if (t.empty()) return false;
      for (char c : t)
        if (c < '0' || c > '9') return false;
      return true;
    };
    if (!digits_ok(num, true)) bad();
    if (!den.empty() && !digits_ok(den, false)) bad();
    mpz_class n(std::string(num), 10);
    if (den.empty()) return Rat(n);
    mpz_class d(std::string(den), 10);
    if (d == 0) fail(ErrorKind::Parse, "zero denominator in '" + std::string(s) + "'");
    return Rat(n, d);
  }

  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  /// Integer value; Domain error if not an integer.
  mpz_class to_integer() const {
    if (!is_integer()) fail(ErrorKind::Domain, "expected integer, got " + str());
    return v_.get_num();
  }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) fail(ErrorKind::Singular, "division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  friend Rat abs(const Rat& a) { return Rat(mpq_class(abs(a.v_))); }

  friend std::ostream& operator<<(std::ostream& os, const Rat& a) {
    return os << a.str();
  }

 private:
  mpq_class v_;
};

inline Rat factorial(long n) {
  if (n < 0) fail(ErrorKind::Domain, "factorial of negative argument");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rat(r);
}

inline Rat binomial(long n, long k) {
  if (k < 0) return Rat(0);
  if (n >= 0 && k > n) return Rat(0);
  if (n < 0) {
    // C(n,k) = (-1)^k C(k-n-1, k) for integer n < 0.
    Rat c = binomial(k - n - 1, k);
    return (k % 2 == 0) ? c : -c;
  }
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Rat(r);
}

}  // namespace qwc
