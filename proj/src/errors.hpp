#pragma once

#include <stdexcept>
#include <string>

namespace lindef {

// Error codes surfaced through the C API; each maps to a distinct lde_status.
enum class Err {
  parse,
  field,
  relation_order,
  cap_mismatch,
  dimension_mismatch,
  contract,
  not_graded,
  power_vanishes,
  truncation_forced,
  resource_limit,
  crosscheck,
  argument,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what) : std::runtime_error(what), code(code) {}
  Err code;
};

// Parse failures carry a position (1-based line/column).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int col)
      : Error(Err::parse, what + " (line " + std::to_string(line) + ", col " +
                              std::to_string(col) + ")"),
        line(line),
        col(col) {}
  int line;
  int col;
};

}  // namespace lindef
