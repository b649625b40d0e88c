#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypersimplex {

enum class ErrorKind {
  parameter,               // malformed or out-of-range input
  unsupported_parameters,  // valid input outside the supported (full-dimensional) range
  invalid_composition,
  not_labelable,
  resource,                // budget exceeded
  structural,              // a combinatorial premise failed (e.g. face family not a flag complex)
  internal_inconsistency,  // two independent routes disagree
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail) {
  throw Error(kind, detail);
}

inline void require(bool condition, ErrorKind kind, const std::string& detail) {
  if (!condition) fail(kind, detail);
}

}  // namespace hypersimplex
