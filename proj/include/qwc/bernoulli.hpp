#pragma once

#include <mutex>
#include <vector>

#include "qwc/rational.hpp"

namespace qwc {

/// Bernoulli number B_m (convention B_1 = -1/2), computed exactly by the
/// defining recurrence  B_m = -1/(m+1) * sum_{k=0}^{m-1} C(m+1,k) B_k  and
/// cached.  Safe to call concurrently.
inline Rat bernoulli(int m) {
  if (m < 0) fail(ErrorKind::Domain, "Bernoulli index must be nonnegative");
  static std::mutex mu;
  static std::vector<Rat> cache{Rat(1)};  // B_0
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= m) {
    int n = static_cast<int>(cache.size());
    Rat acc;
    for (int k = 0; k < n; ++k) acc += binomial(n + 1, k) * cache[k];
    cache.push_back(-acc / Rat(n + 1));
  }
  return cache[m];
}

}  // namespace qwc
