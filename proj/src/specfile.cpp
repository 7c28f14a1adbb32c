#include "specfile.hpp"

#include <algorithm>
#include <sstream>

namespace lindef {

namespace {

constexpr int kParseCap = 32;       // provisional cap for relation parsing
constexpr int kDetectCapLimit = 16; // search window for the socle bound

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

bool valid_identifier(const std::string& s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

}  // namespace

RingSpecFile parse_ring_spec(const std::string& text) {
  RingSpecFile spec;
  spec.raw = text;
  bool saw_field = false, saw_vars = false, saw_relations = false;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::vector<std::pair<std::string, int>> relation_sources;  // text, line
  while (std::getline(in, line)) {
    ++lineno;
    std::string stripped = trim(line.substr(0, line.find('#')));
    if (stripped.empty()) continue;
    size_t colon = stripped.find(':');
    if (colon == std::string::npos)
      throw ParseError("expected 'key: value'", lineno, 1);
    std::string key = trim(stripped.substr(0, colon));
    std::string value = trim(stripped.substr(colon + 1));

    if (key == "field") {
      long long p = -1;
      try {
        p = std::stoll(value);
      } catch (...) {
        throw ParseError("field characteristic must be an integer", lineno, 1);
      }
      if (p < 2 || p >= (1LL << 31) || !PrimeField::is_prime(static_cast<std::uint32_t>(p)))
        throw Error(Err::field, "field characteristic " + value + " is not prime (line " +
                                    std::to_string(lineno) + ")");
      spec.p = static_cast<std::uint32_t>(p);
      saw_field = true;
    } else if (key == "vars") {
      for (std::string v : split(value, ',')) {
        v = trim(v);
        if (!valid_identifier(v))
          throw ParseError("bad variable name '" + v + "'", lineno, 1);
        if (std::find(spec.vars.begin(), spec.vars.end(), v) != spec.vars.end())
          throw ParseError("duplicate variable '" + v + "'", lineno, 1);
        spec.vars.push_back(v);
      }
      if (spec.vars.empty()) throw ParseError("no variables given", lineno, 1);
      saw_vars = true;
    } else if (key == "relations") {
      for (std::string r : split(value, ';')) {
        r = trim(r);
        if (r.empty()) continue;
        relation_sources.emplace_back(r, lineno);
      }
      saw_relations = true;
    } else if (key == "truncate") {
      if (value == "auto") {
        spec.truncate_auto = true;
      } else {
        spec.truncate_auto = false;
        try {
          spec.truncate = std::stoi(value);
        } catch (...) {
          throw ParseError("truncate must be an integer or 'auto'", lineno, 1);
        }
        if (spec.truncate < 1) throw ParseError("truncate must be >= 1", lineno, 1);
      }
    } else if (key == "cap") {
      if (value == "auto") {
        spec.cap_auto = true;
      } else {
        spec.cap_auto = false;
        try {
          spec.cap = std::stoi(value);
        } catch (...) {
          throw ParseError("cap must be an integer or 'auto'", lineno, 1);
        }
      }
    } else if (key == "depth") {
      try {
        spec.depth = std::stoi(value);
      } catch (...) {
        throw ParseError("depth must be an integer", lineno, 1);
      }
      if (spec.depth < 1) throw ParseError("depth must be >= 1", lineno, 1);
    } else {
      throw ParseError("unknown key '" + key + "'", lineno, 1);
    }
  }
  if (!saw_field) throw ParseError("missing 'field:' line", lineno, 1);
  if (!saw_vars) throw ParseError("missing 'vars:' line", lineno, 1);
  if (!saw_relations) throw ParseError("missing 'relations:' line", lineno, 1);

  for (auto& [rtext, rline] : relation_sources) {
    TruncatedPoly poly =
        parse_polynomial(rtext, spec.vars, spec.p, kParseCap, rline, 1, /*strict_cap=*/true);
    if (!poly.is_zero() && poly.order() < 2)
      throw Error(Err::relation_order, "relation '" + rtext + "' has a term of degree < 2 (line " +
                                           std::to_string(rline) + ")");
    if (!poly.is_zero()) {
      spec.relation_texts.push_back(rtext);
      spec.relations.push_back(std::move(poly));
    }
  }
  return spec;
}

namespace {

// Least s >= 2 with all degree-s monomials inside the ideal, or -1. Only
// full-product rows certify membership, so a hit is sound; the cap grows
// until one is found or the window is exhausted.
int detect_socle_bound(const RingSpecFile& spec, int maxreldeg) {
  for (int cap = std::max(3, maxreldeg + 1); cap <= kDetectCapLimit; ++cap) {
    MonomialTable table(static_cast<int>(spec.vars.size()), cap);
    std::vector<TruncatedPoly> rels;
    for (const TruncatedPoly& r : spec.relations) rels.push_back(retruncate(r, cap));
    Subspace span = ideal_span_exact(rels, table);
    for (int s = 2; s <= cap; ++s) {
      bool all = true;
      for (const Monomial& m : monomials_of_degree(table.nvars(), s)) {
        std::vector<std::uint32_t> v(table.size(), 0);
        v[table.index_of(m)] = 1;
        if (!span.contains_vector(v)) {
          all = false;
          break;
        }
      }
      if (all) return s;
    }
  }
  return -1;
}

}  // namespace

AlgebraPresentation make_presentation(const RingSpecFile& spec) {
  int maxreldeg = 0;
  for (const TruncatedPoly& r : spec.relations)
    maxreldeg = std::max(maxreldeg, r.degree());

  int N;
  if (spec.truncate_auto) {
    int s = detect_socle_bound(spec, maxreldeg);
    if (s < 0)
      throw Error(Err::argument,
                  "cannot detect a socle bound: the quotient may not be finite-dimensional; "
                  "set 'truncate: N' explicitly");
    N = s - 1;
  } else {
    N = spec.truncate;
  }

  int W = std::max(N + 2, maxreldeg + 1);
  if (!spec.cap_auto) {
    if (spec.cap < W)
      throw Error(Err::argument, "cap must be at least max(truncate + 2, relation degree + 1) = " +
                                     std::to_string(W));
    W = spec.cap;
  }

  AlgebraPresentation pres;
  pres.p = spec.p;
  pres.vars = spec.vars;
  pres.truncation_degree = N;
  pres.cap = W;
  for (const TruncatedPoly& r : spec.relations) pres.relations.push_back(retruncate(r, W));
  return pres;
}

FreeMap parse_module_matrix(const std::string& text, const LocalAlgebra& A) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::vector<std::vector<TruncatedPoly>> rows;
  while (std::getline(in, line)) {
    ++lineno;
    std::string stripped = trim(line.substr(0, line.find('#')));
    if (stripped.empty()) continue;
    std::vector<TruncatedPoly> row;
    for (std::string cell : split(stripped, ';')) {
      cell = trim(cell);
      if (cell.empty()) cell = "0";
      if (cell == "0") {
        row.push_back(TruncatedPoly{A.pres.p, static_cast<int>(A.pres.vars.size()),
                                    A.pres.cap, {}});
      } else {
        row.push_back(parse_polynomial(cell, A.pres.vars, A.pres.p, A.pres.cap, lineno));
      }
    }
    if (!rows.empty() && rows.back().size() != row.size())
      throw ParseError("ragged module matrix", lineno, 1);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty module matrix", 1, 1);

  const int L = A.dim;
  FreeMap f;
  f.dst_rank = static_cast<int>(rows.size());
  f.src_rank = static_cast<int>(rows[0].size());
  for (int j = 0; j < f.src_rank; ++j) {
    std::vector<std::uint32_t> col(static_cast<size_t>(f.dst_rank) * L, 0);
    for (int i = 0; i < f.dst_rank; ++i) {
      std::vector<std::uint32_t> coords = A.normal_form(to_dense(rows[i][j], *A.table));
      std::copy(coords.begin(), coords.end(), col.begin() + static_cast<size_t>(i) * L);
    }
    f.columns.push_back(std::move(col));
  }
  return f;
}

}  // namespace lindef
