#pragma once

#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "qwc/rational.hpp"

namespace qwc {

/// A smooth complete intersection X in P^n cut out by hypersurfaces of the
/// given degrees.  Everything downstream is parameterized by this: the
/// cohomology ring truncation, the hypergeometric series, Euler numbers.
struct CompleteIntersection {
  int n = 0;                 // ambient projective dimension
  std::vector<int> degrees;  // hypersurface degrees, each >= 1

  CompleteIntersection(int ambient, std::vector<int> degs)
      : n(ambient), degrees(std::move(degs)) {
    if (degrees.empty())
      fail(ErrorKind::Domain, "target needs at least one hypersurface degree");
    for (int l : degrees)
      if (l < 1) fail(ErrorKind::Domain, "hypersurface degrees must be >= 1");
    if (dim() < 1)
      fail(ErrorKind::Domain,
           "target dimension must be positive (n = " + std::to_string(n) +
               ", " + std::to_string(degrees.size()) + " equations)");
  }

  int dim() const { return n - static_cast<int>(degrees.size()); }

  long sum_degrees() const {
    return std::accumulate(degrees.begin(), degrees.end(), 0L);
  }

  /// Fano index shift: n + 1 - sum(l_i).  Zero means Calabi-Yau.
  long index() const { return n + 1 - sum_degrees(); }

  bool calabi_yau() const { return index() == 0; }
  bool calabi_yau_threefold() const { return calabi_yau() && dim() == 3; }

  /// Degree of X in P^n: product of the l_i.
  Rat degree() const {
    Rat d(1);
    for (int l : degrees) d *= Rat(l);
    return d;
  }

  /// Flag syntax used by the CLI: "n:l1,l2,...", e.g. "4:5" or "5:3,3".
  std::string str() const {
    std::string s = std::to_string(n) + ":";
    for (size_t i = 0; i < degrees.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(degrees[i]);
    }
    return s;
  }

  friend bool operator==(const CompleteIntersection& a,
                         const CompleteIntersection& b) {
    return a.n == b.n && a.degrees == b.degrees;
  }
};

inline CompleteIntersection parse_target(std::string_view s) {
  auto bad = [&] {
    fail(ErrorKind::Parse, "malformed target '" + std::string(s) +
                               "', expected n:l1,l2,...");
  };
  auto colon = s.find(':');
  if (colon == std::string_view::npos || colon == 0) bad();
  auto to_int = [&](std::string_view t) {
    if (t.empty() || t.size() > 6) bad();
    int v = 0;
    for (char c : t) {
      if (c < '0' || c > '9') bad();
      v = v * 10 + (c - '0');
    }
    return v;
  };
  int n = to_int(s.substr(0, colon));
  std::vector<int> degs;
  std::string_view rest = s.substr(colon + 1);
  if (rest.empty()) bad();
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view piece =
        comma == std::string_view::npos ? rest : rest.substr(0, comma);
    degs.push_back(to_int(piece));
    rest = comma == std::string_view::npos ? std::string_view{}
                                           : rest.substr(comma + 1);
    if (comma != std::string_view::npos && rest.empty()) bad();
  }
  return CompleteIntersection(n, std::move(degs));
}

}  // namespace qwc
