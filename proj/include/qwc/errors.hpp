#pragma once

#include <stdexcept>
#include <string>

namespace qwc {

/// Machine-readable failure categories.  The CLI maps these to exit codes and
/// to the "kind" field of its error JSON, so the set is part of the public
/// interface: extend it, don't repurpose entries.
enum class ErrorKind {
  Parse,        // malformed textual input (rationals, targets, JSON payloads)
  Flag,         // bad command-line usage
  Domain,       // precondition violated (wrong index, negative order, ...)
  Context,      // mixing objects from incompatible targets or truncations
  Depth,        // requested order exceeds what the input data supports
  Singular,     // inversion/division by a non-unit
  Unresolved,   // bracket reduction hit a symbol with no supplied value
  Integrality,  // a quantity that must be an integer is not
  Identity,     // an internal cross-check (dual route, identity test) failed
  Cache,        // cache directory unusable
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Flag: return "flag";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Context: return "context";
    case ErrorKind::Depth: return "depth";
    case ErrorKind::Singular: return "singular";
    case ErrorKind::Unresolved: return "unresolved";
    case ErrorKind::Integrality: return "integrality";
    case ErrorKind::Identity: return "identity";
    case ErrorKind::Cache: return "cache";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace qwc
