#pragma once

#include <string>
#include <vector>

#include "qwc/series.hpp"
#include "qwc/zpoly.hpp"

namespace qwc {

/// Stability parameter for the quasimap chamber structure.  What matters
/// computationally is which q-degrees survive: degree d survives at epsilon
/// when d <= 1/epsilon, with the wall d = 1/epsilon included (the excluded
/// ideal is generated by strictly larger degrees).
struct Stability {
  enum class Kind { Infinity, ZeroPlus, Finite };

  Kind kind = Kind::ZeroPlus;
  Rat eps;  // meaningful only for Finite; always > 0

  static Stability infinity() { return {Kind::Infinity, Rat()}; }
  static Stability zero_plus() { return {Kind::ZeroPlus, Rat()}; }
  static Stability finite(Rat e) {
    if (e.sign() <= 0)
      fail(ErrorKind::Domain, "finite stability needs a positive rational");
    return {Kind::Finite, std::move(e)};
  }

  /// Largest surviving degree, capped by the working order.  Infinity keeps
  /// nothing; ZeroPlus keeps everything up to the cap; finite epsilon keeps
  /// d <= floor(1/eps), the floor taken exactly on rationals.
  int dmax(int order) const {
    switch (kind) {
      case Kind::Infinity:
        return 0;
      case Kind::ZeroPlus:
        return order;
      case Kind::Finite: {
        mpz_class fl;
        // floor(1/eps) = floor(den/num) for eps = num/den > 0.
        mpz_fdiv_q(fl.get_mpz_t(), eps.den().get_mpz_t(), eps.num().get_mpz_t());
        if (fl > order) return order;
        return static_cast<int>(fl.get_si());
      }
    }
    return 0;
  }

  /// Accepts "inf", "infinity", "0+", or a positive rational "p/q".
  static Stability parse(std::string_view s) {
    if (s == "inf" || s == "infinity") return infinity();
    if (s == "0+") return zero_plus();
    Rat e = Rat::parse(s);
    if (e.sign() <= 0)
      fail(ErrorKind::Parse, "stability must be positive, got '" + std::string(s) + "'");
    return finite(std::move(e));
  }

  std::string str() const {
    switch (kind) {
      case Kind::Infinity: return "infinity";
      case Kind::ZeroPlus: return "0+";
      case Kind::Finite: return eps.str();
    }
    return "";
  }

  friend bool operator==(const Stability& a, const Stability& b) {
    if (a.kind != b.kind) return false;
    return a.kind != Kind::Finite || a.eps == b.eps;
  }
};

/// The q^d coefficient of the hypergeometric series
///   I(q,z) = 1 + sum_d q^d  prod_i prod_{j=1}^{l_i d} (l_i H + j z)
///                          / prod_{j=1}^{d} (H + j z)^{n+1}
/// as an exact Laurent polynomial in z over Q[H]/(H^{dim+1}).  Each inverse
/// factor expands finitely:
///   (H + jz)^{-(n+1)} = sum_{k=0}^{dim} (-1)^k C(n+k, k) H^k / (jz)^{n+1+k},
/// using the nilpotency of H, so the whole computation is exact.
inline ZPolyClass i_degree_piece(const CompleteIntersection& X, int d) {
  if (d < 1) fail(ErrorKind::Domain, "degree piece needs d >= 1");
  int m = X.dim();
  ZPolyClass acc = ZPolyClass::term(0, CohClass::unit(m));
  for (int l : X.degrees)
    for (int j = 1; j <= l * d; ++j) acc = acc.times_linear(Rat(l), Rat(j), m);
  for (int j = 1; j <= d; ++j) {
    ZPolyClass inv_factor;
    Rat inv_j = Rat(1) / Rat(j);
    Rat scale = inv_j;
    for (int t = 0; t < X.n; ++t) scale *= inv_j;  // now 1/j^{n+1}
    for (int k = 0; k <= m; ++k) {
      Rat c = binomial(X.n + k, k) * scale;
      if (k % 2) c = -c;
      inv_factor.add(-(X.n + 1 + k), CohClass::h_power(m, k) * c);
      scale *= inv_j;
    }
    acc = acc * inv_factor;
  }
  return acc;
}

/// Correcting class of degree d: the q^d coefficient of [z(I - 1)]_+, a
/// polynomial in z with cohomology coefficients.  Homogeneous of total degree
/// 1 - d * index(X) (z and H both graded 1); identically zero when that
/// degree is negative.
struct MuClass {
  int d = 0;
  ZPolyClass value;

  /// The homogeneity degree 1 + d(sum l_i - n - 1).
  static int expected_degree(const CompleteIntersection& X, int d) {
    return 1 - d * static_cast<int>(X.index());
  }
};

inline MuClass mu(const CompleteIntersection& X, int d) {
  if (d < 1) fail(ErrorKind::Domain, "mu needs d >= 1");
  return MuClass{d, i_degree_piece(X, d).z_shifted(1).plus_part()};
}

/// The classes [zJ^eps - z]_+ degree by degree: mu_d for every degree that
/// survives the chamber, up to the working order.  Empty at Infinity.
inline std::vector<MuClass> zj_plus(const CompleteIntersection& X,
                                    const Stability& eps, int order) {
  if (order < 0) fail(ErrorKind::Domain, "order must be >= 0");
  std::vector<MuClass> out;
  int top = eps.dmax(order);
  out.reserve(static_cast<size_t>(top));
  for (int d = 1; d <= top; ++d) out.push_back(mu(X, d));
  return out;
}

/// The z^0 and z^{-1} data of the chamber-truncated series: J0 (unit
/// constant term), the H-part of J1 divided by H, and the 1-part of J1.
/// Extracted from the degree pieces, so valid for any index.
struct SmallJ {
  RatSeries j0;
  RatSeries j1_h;     // coefficient series of H in J1
  RatSeries j1_unit;  // coefficient series of 1 in J1

  explicit SmallJ(int order) : j0(order), j1_h(order), j1_unit(order) {
    j0.set_coeff(0, Rat(1));
  }
};

inline SmallJ small_j(const CompleteIntersection& X, const Stability& eps,
                      int order) {
  SmallJ out(order);
  int top = eps.dmax(order);
  for (int d = 1; d <= top; ++d) {
    ZPolyClass piece = i_degree_piece(X, d);
    out.j0.set_coeff(d, piece.coeff(0).coeff(0));
    out.j1_h.set_coeff(d, piece.coeff(-1).coeff(1));
    out.j1_unit.set_coeff(d, piece.coeff(-1).coeff(0));
  }
  return out;
}

/// Closed forms for Calabi-Yau targets:
///   J0_d = prod_i (l_i d)! / (d!)^{n+1}
///   (J1/H)_d = J0_d * ( sum_i sum_{k=1}^{l_i d} l_i/k  -  (n+1) sum_{k=1}^{d} 1/k )
/// Domain error off the Calabi-Yau locus; there the z^{-1} data is not pure H
/// and these formulas do not apply.
inline SmallJ small_j_cy_closed(const CompleteIntersection& X,
                                const Stability& eps, int order) {
  if (!X.calabi_yau())
    fail(ErrorKind::Domain, "closed J-forms need a Calabi-Yau target, got " + X.str());
  SmallJ out(order);
  int top = eps.dmax(order);
  for (int d = 1; d <= top; ++d) {
    Rat j0 = Rat(1);
    for (int l : X.degrees) j0 *= factorial(static_cast<long>(l) * d);
    Rat dfac = factorial(d);
    for (int t = 0; t <= X.n; ++t) j0 /= dfac;
    Rat harmonic;
    for (int l : X.degrees)
      for (int k = 1; k <= l * d; ++k) harmonic += Rat(l, k);
    for (int k = 1; k <= d; ++k) harmonic -= Rat(X.n + 1, k);
    out.j0.set_coeff(d, j0);
    out.j1_h.set_coeff(d, j0 * harmonic);
  }
  return out;
}

/// f(q) = (J1/H)/J0 for the given chamber: the exponent of the mirror-type
/// coordinate change and the divisor weight in the transforms.  Requires the
/// 1-part of J1 to vanish (true whenever index(X) = 0).
inline RatSeries divisor_exponent(const CompleteIntersection& X,
                                  const Stability& eps, int order) {
  SmallJ sj = small_j(X, eps, order);
  if (!sj.j1_unit.is_zero())
    fail(ErrorKind::Domain,
         "J1 has a nonzero 1-component for " + X.str() +
             "; the divisor exponent needs a purely H-proportional J1");
  return sj.j1_h * sj.j0.inverse();
}

/// Mirror coordinate Q(q) = q * exp(f(q)) for a Calabi-Yau threefold, as a
/// series with zero constant term and unit linear term.
inline RatSeries mirror_map(const CompleteIntersection& X, int order) {
  if (!X.calabi_yau_threefold())
    fail(ErrorKind::Domain,
         "mirror map needs a Calabi-Yau threefold, got " + X.str());
  RatSeries f = divisor_exponent(X, Stability::zero_plus(), order);
  return exp(f).shifted(1);
}

}  // namespace qwc
