#pragma once

#include "resolution.hpp"

namespace lindef {

// h[j][s] = dim of the homology of the three-term subquotient complex of F at
// homological degree j and filtration offset s, for 0 <= j <= depth-1 and
// 0 <= s <= N. Row 0 carries the associated graded module of M, not defect.
struct LinHomologyTable {
  int depth{0};
  int smax{0};
  std::vector<std::vector<int>> h;

  bool row_zero(int j) const;
};

LinHomologyTable lin_homology(const MinimalResolution& res);

// Either a definite value or a lower bound "at_least(value)".
struct BoundedVerdict {
  bool definite{true};
  int value{0};

  bool operator==(const BoundedVerdict&) const = default;
  std::string str() const {
    return definite ? std::to_string(value) : "at_least(" + std::to_string(value) + ")";
  }
};

// Rank table of the comparison maps on Tor against the m-adic quotients:
// cell (i, n) for 1 <= i <= imax, 1 <= n <= nmax. Zero rank == vanishing.
struct NuTable {
  int imax{0};
  int nmax{0};
  std::vector<std::vector<int>> rank;  // rank[i-1][n-1]

  bool zero(int i, int n) const { return rank[i - 1][n - 1] == 0; }
  bool row_zero(int i) const;
};

// Vanishing of the map H_i(F/m^(n+1)F) -> H_i(F/m^n F); returns (zero, rank).
std::pair<bool, int> nu_vanishes_homology(const MinimalResolution& res, int i, int n);

// Same question decided by the cycle criterion: every x with dx in m^(n+1)F
// lies in ker(d) + m^n F. Independent of the homology route.
bool nu_vanishes_cycle_criterion(const MinimalResolution& res, int i, int n);

// Full table from the homology route, cross-checked cell by cell against the
// cycle criterion. A disagreement is an engine bug (Err::crosscheck).
NuTable nu_table(const MinimalResolution& res, int depth, int nmax);

// Row-i biconditional: H row i vanishes iff nu rows i and i+1 vanish.
bool theorem_mu_crosscheck(const LinHomologyTable& lin, const NuTable& nu, int i);

// Defect verdict over rows j >= 1 of the lin table. Definite only when the
// rows above the last nonzero row are clean and, when a nu table is supplied,
// its rows above d corroborate.
BoundedVerdict linearity_defect(const LinHomologyTable& lin, const NuTable* nu = nullptr);

}  // namespace lindef
