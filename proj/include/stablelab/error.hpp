#pragma once

#include <stdexcept>
#include <string>

namespace stablelab {

enum class ErrorKind {
  InvalidInput,   // malformed group/module/class-set data
  NotNormal,      // a normal subgroup was required
  NotSubgroup,
  CapExceeded,    // a configured size cap would be exceeded
  Ramified,       // prime divides the cyclotomic modulus
  UnknownName,    // unknown preset or scenario
};

/// Kebab-case name used in structured error output.
inline const char* kind_name(ErrorKind kind) {
  static const char* names[] = {"invalid-input", "not-normal", "not-subgroup",
                                "cap-exceeded",  "ramified",   "unknown-name"};
  return names[static_cast<int>(kind)];
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) throw Error(kind, what);
}

}  // namespace stablelab
