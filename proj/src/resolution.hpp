#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace lindef {

// Map of free modules R^src -> R^dst. Column j is the image of the jth
// generator, stored as a k-vector of length dst_rank*L with coordinate
// (g, t) = g*L + t in the algebra basis.
struct FreeMap {
  int src_rank{0};
  int dst_rank{0};
  std::vector<std::vector<std::uint32_t>> columns;

  // Entry (i, j) as an algebra element (L coordinates).
  std::vector<std::uint32_t> entry(const LocalAlgebra& A, int i, int j) const;
  // All entries lie in m, i.e. no entry has a constant term.
  bool entries_in_m(const LocalAlgebra& A) const;
  // The k-linear realization, of shape (dst*L) x (src*L).
  FpMatrix k_matrix(const LocalAlgebra& A) const;
  // Image of an element of R^src under the map.
  std::vector<std::uint32_t> apply(const LocalAlgebra& A,
                                   std::span<const std::uint32_t> v) const;
};

// b_t * v for v in R^rank (componentwise module action of a basis element).
std::vector<std::uint32_t> act_basis(const LocalAlgebra& A, int t,
                                     std::span<const std::uint32_t> v);

FreeMap freemap_compose(const LocalAlgebra& A, const FreeMap& f, const FreeMap& g);

// One syzygy step: a map whose image is ker(f), with columns a minimal
// generating set (their classes form a basis of ker(f) / m*ker(f)).
FreeMap syzygy_step(const LocalAlgebra& A, const FreeMap& f);

enum class ModuleKind { residue_field, quotient_power, power, cokernel };

struct FinModule {
  ModuleKind kind{ModuleKind::residue_field};
  int n{0};                          // for power / quotient_power
  std::optional<FreeMap> presentation;  // for cokernel
  std::string name{"k"};
};

FinModule residue_field_module();
FinModule quotient_power_module(const LocalAlgebra& A, int n);
// Throws Err::power_vanishes when m^n = 0.
FinModule power_module(const LocalAlgebra& A, int n);
FinModule cokernel_module(FreeMap presentation, std::string name = "coker");

struct ResolveOptions {
  long long max_entries{2'000'000};  // abort when beta_i * L exceeds this
  bool verify{true};                 // d.d = 0, minimality, exactness checks
};

struct MinimalResolution {
  const LocalAlgebra* A{nullptr};
  FinModule module;
  int depth{0};
  std::vector<FreeMap> maps;               // d_1..d_depth
  std::vector<int> betti;                  // beta_0..beta_depth
  bool graded{false};
  std::vector<std::vector<int>> degrees;   // generator degrees of F_0..F_depth
  // kernels[i] = ker k(d_{i+1}) for 0 <= i <= depth-2 (reused by nu checks);
  // ranks[i] = rank k(d_{i+1}) for 0 <= i <= depth-1.
  std::vector<Subspace> kernels;
  std::vector<int> ranks;

  const FreeMap& map(int i) const { return maps[i - 1]; }  // d_i, 1-based
};

MinimalResolution resolve(const LocalAlgebra& A, const FinModule& M, int depth,
                          const ResolveOptions& opts = {});
// Deepens an existing resolution in place, reusing computed steps.
void extend_resolution(MinimalResolution& res, int depth, const ResolveOptions& opts = {});

// beta_{i,j} for graded modules; throws Err::not_graded otherwise.
std::map<std::pair<int, int>, int> graded_betti(const MinimalResolution& res);
// max{ j - i : beta_{i,j} != 0 }; throws Err::not_graded in local mode.
int regularity_up_to(const MinimalResolution& res);

}  // namespace lindef
