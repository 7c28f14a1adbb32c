#pragma once

#include "lindefect.hpp"

namespace lindef {

// Smallest i >= 1 with span(a) ∩ (monomials of degree >= i+2) contained in
// span(n*a), computed at the presentation cap; at_least(W-1) when none works
// in range. When the truncation was forced the presentation ideal includes the
// degree-(N+1) monomials.
BoundedVerdict s_invariant(const AlgebraPresentation& pres, bool truncation_forced);

// Resolves k over gr(a) to the given depth and tests for a diagonal graded
// Betti table.
bool koszul_check(const LocalAlgebra& a, int depth, const ResolveOptions& opts = {});

struct CiResult {
  bool is_ci{false};
  int mu{0};     // minimal number of generators of the presentation ideal
  int codim{0};  // number of variables (Artinian: codim = edim)
};

// Artinian criterion: mu(a) equals the number of variables. Requires the
// honesty flag (throws Err::truncation_forced otherwise).
CiResult is_complete_intersection(const LocalAlgebra& a);

bool minimal_multiplicity_ci(const LocalAlgebra& a, int codim);
bool minimal_multiplicity_cm(const LocalAlgebra& a);

// dims[i] = dim H_i of the exterior-algebra complex on the minimal generators
// of m, for 0 <= i <= edim.
std::vector<int> koszul_complex_homology(const LocalAlgebra& a);

// Coefficients 0..upto of num(t)/den(t); den must have constant term 1.
std::vector<long long> expand_rational_series(const std::vector<long long>& num,
                                              const std::vector<long long>& den, int upto);

// Series bound (1+t)^edim / (1 - sum_i dims[i] t^(i+1)) truncated at `upto`.
std::vector<long long> golod_series(int edim, const std::vector<int>& kh, int upto);

// Equality of the Betti numbers of k with the series bound, up to depth.
bool golod_check(const LocalAlgebra& a, const std::vector<int>& betti_k, int depth);

enum class YonedaKind { equals_dual, generated_in_degrees_le, no_finite_generation_detected };

struct YonedaVerdict {
  YonedaKind kind{YonedaKind::equals_dual};
  int r{0};       // last nonvanishing row of the n=1 column
  int margin{2};  // clean rows required between r and the table edge

  std::string str() const;
};

// Reads the generation degree of the cohomology operator algebra over its
// degree-one part off the n=1 column of the nu table.
YonedaVerdict yoneda_report(const NuTable& nu, int depth);

}  // namespace lindef
