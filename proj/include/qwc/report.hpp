#pragma once

#include <string>

namespace qwc {

/// Outcome of an identity or property suite.  `failed_order` is the first
/// q-order exhibiting a mismatch when that is meaningful, else -1.
struct CheckReport {
  bool pass = true;
  std::string detail;
  int failed_order = -1;

  static CheckReport ok(std::string note = "") { return {true, std::move(note), -1}; }
  static CheckReport failure(std::string why, int order = -1) {
    return {false, std::move(why), order};
  }
};

}  // namespace qwc
