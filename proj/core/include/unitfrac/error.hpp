#pragma once

#include <stdexcept>
#include <string>

namespace unitfrac {

// Every failure the library reports deliberately goes through this type, so
// callers (notably the CLI) can map failures to process exit codes without
// string matching.
class Error : public std::runtime_error {
public:
  enum class Kind {
    invalid_input,  // bad arguments, parse failures, domain violations
    cap_exceeded,   // a configured resource cap stopped the computation
    verification,   // an internal identity or claimed invariant failed to hold
  };

  Error(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

  static Error invalid(const std::string& what) {
    return Error(Kind::invalid_input, what);
  }
  static Error cap(const std::string& what) {
    return Error(Kind::cap_exceeded, what);
  }
  static Error verification(const std::string& what) {
    return Error(Kind::verification, what);
  }

private:
  Kind kind_;
};

}  // namespace unitfrac
