#pragma once

#include <vector>

#include "qwc/ifun.hpp"
#include "qwc/target.hpp"

namespace qwc {

/// Unpointed invariants of one target at one stability and genus: the value
/// of <>_{g,0,d} for d = 1..depth, contiguous.  Degrees beyond the stored
/// depth are unknown, and asking for them is a Depth error, never a zero.
struct InvariantTable {
  CompleteIntersection target;
  int genus = 0;
  Stability stability = Stability::infinity();
  std::vector<Rat> values;  // values[i] is the degree-(i+1) invariant

  InvariantTable(CompleteIntersection X, int g, Stability stab,
                 std::vector<Rat> vals)
      : target(std::move(X)),
        genus(g),
        stability(std::move(stab)),
        values(std::move(vals)) {
    if (genus < 0) fail(ErrorKind::Domain, "table genus must be >= 0");
  }

  int depth() const { return static_cast<int>(values.size()); }

  const Rat& value(int d) const {
    if (d < 1 || d > depth())
      fail(ErrorKind::Depth, "table for " + target.str() + " holds degrees 1.." +
                                 std::to_string(depth()) + ", asked for d=" +
                                 std::to_string(d));
    return values[static_cast<size_t>(d) - 1];
  }

  /// The values as a q-series with zero constant term.
  RatSeries series(int order) const {
    if (order > depth())
      fail(ErrorKind::Depth, "table depth " + std::to_string(depth()) +
                                 " cannot support order " + std::to_string(order));
    RatSeries s(order);
    for (int d = 1; d <= order; ++d) s.set_coeff(d, value(d));
    return s;
  }

  friend bool operator==(const InvariantTable& a, const InvariantTable& b) {
    return a.target == b.target && a.genus == b.genus &&
           a.stability == b.stability && a.values == b.values;
  }
};

}  // namespace qwc
