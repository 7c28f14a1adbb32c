#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fpmatrix.hpp"

namespace lindef {

// Exponent vector; the number of variables is fixed by context.
struct Monomial {
  std::vector<int> exps;

  int degree() const;
  bool operator==(const Monomial&) const = default;
};

// Global order: total degree first, ties broken lexicographically on the
// exponent vector with earlier variables weighted first (x^2 < x*y < y^2).
bool monomial_less(const Monomial& a, const Monomial& b);

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return monomial_less(a, b); }
};

// All monomials of total degree d in the global order.
std::vector<Monomial> monomials_of_degree(int nvars, int d);

// Index table for the coefficient space of all monomials of degree <= cap.
class MonomialTable {
 public:
  MonomialTable(int nvars, int cap);

  int nvars() const { return nvars_; }
  int cap() const { return cap_; }
  int size() const { return static_cast<int>(monomials_.size()); }
  const Monomial& monomial(int idx) const { return monomials_[idx]; }
  int degree_of(int idx) const { return degrees_[idx]; }
  // -1 when the monomial exceeds the cap.
  int index_of(const Monomial& m) const;
  // First index of the given degree; size() when past the cap.
  int degree_start(int d) const;

 private:
  int nvars_;
  int cap_;
  std::vector<Monomial> monomials_;
  std::vector<int> degrees_;
  std::map<std::vector<int>, int> index_;
  std::vector<int> degree_start_;
};

// Polynomial over F_p with all terms of degree <= cap; higher terms are
// discarded by every operation.
struct TruncatedPoly {
  std::uint32_t p{101};
  int nvars{0};
  int cap{0};
  std::map<Monomial, std::uint32_t, MonomialLess> coeffs;  // nonzero only

  bool is_zero() const { return coeffs.empty(); }
  // Smallest/largest total degree of a term; -1 on the zero polynomial.
  int order() const;
  int degree() const;
  bool is_homogeneous() const;

  void set(const Monomial& m, std::uint32_t c);
  std::uint32_t coeff(const Monomial& m) const;
};

TruncatedPoly poly_mul(const TruncatedPoly& a, const TruncatedPoly& b);
TruncatedPoly poly_add(const TruncatedPoly& a, const TruncatedPoly& b);
TruncatedPoly monomial_poly(std::uint32_t p, int cap, const Monomial& m, std::uint32_t c = 1);
// Re-truncates to a new cap (dropping higher terms).
TruncatedPoly retruncate(const TruncatedPoly& a, int cap);

std::vector<std::uint32_t> to_dense(const TruncatedPoly& a, const MonomialTable& table);
TruncatedPoly from_dense(std::span<const std::uint32_t> v, const MonomialTable& table,
                         std::uint32_t p);

// Span of { g*m : g in gens, m monomial, truncated at the table cap } inside
// the coefficient space. This is the image of the ideal (gens) + n^{cap+1}.
Subspace ideal_span(const std::vector<TruncatedPoly>& gens, const MonomialTable& table);

// Same, but keeps only products whose full (untruncated) degree fits under the
// cap. The result is contained in the honest image of the ideal (gens), which
// makes it usable for sound membership certificates.
Subspace ideal_span_exact(const std::vector<TruncatedPoly>& gens, const MonomialTable& table);

// order_filtration(table)[s] = span of all monomials of degree >= s, for
// s = 0..cap+1; the last entry is the zero subspace.
std::vector<Subspace> order_filtration(PrimeField f, const MonomialTable& table);

// Parses "c1*m1 +/- c2*m2 ..." where a term is an optional integer coefficient
// and var^e factors joined by '*'. Terms above the cap are discarded, or
// rejected when strict_cap is set. Throws ParseError with position info.
TruncatedPoly parse_polynomial(const std::string& text, const std::vector<std::string>& vars,
                               std::uint32_t p, int cap, int line_offset = 1,
                               int col_offset = 1, bool strict_cap = false);

std::string poly_to_string(const TruncatedPoly& a, const std::vector<std::string>& vars);
std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& vars);

}  // namespace lindef
