#pragma once

#include "resolution.hpp"

namespace lindef {

// Parsed ring spec file. Grammar (line oriented, '#' starts a comment):
//   field: <p>
//   vars: <comma-separated identifiers>
//   relations: <semicolon-separated polynomials>
//   truncate: <N | auto>
//   cap: <W | auto>
//   depth: <D>            (optional, default 8)
struct RingSpecFile {
  std::uint32_t p{101};
  std::vector<std::string> vars;
  std::vector<std::string> relation_texts;
  std::vector<TruncatedPoly> relations;  // parsed at a provisional cap
  bool truncate_auto{true};
  int truncate{0};
  bool cap_auto{true};
  int cap{0};
  int depth{8};
  std::string raw;
};

// Validates and parses; throws ParseError / Err::field / Err::relation_order.
RingSpecFile parse_ring_spec(const std::string& text);

// Resolves auto truncation/cap and re-truncates the relations. The socle
// bound detection only accepts membership certificates built from full
// generator products, so a quotient that is not actually finite-dimensional
// is reported instead of silently mis-truncated.
AlgebraPresentation make_presentation(const RingSpecFile& spec);

// User module file: one line per row of the presentation matrix, entries
// separated by ';'. The module is the cokernel of the resulting map.
FreeMap parse_module_matrix(const std::string& text, const LocalAlgebra& A);

}  // namespace lindef
