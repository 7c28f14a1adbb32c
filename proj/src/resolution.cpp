#include "resolution.hpp"

#include <algorithm>

namespace lindef {

std::vector<std::uint32_t> FreeMap::entry(const LocalAlgebra& A, int i, int j) const {
  const int L = A.dim;
  return {columns[j].begin() + static_cast<size_t>(i) * L,
          columns[j].begin() + static_cast<size_t>(i + 1) * L};
}

bool FreeMap::entries_in_m(const LocalAlgebra& A) const {
  const int L = A.dim;
  for (const auto& col : columns)
    for (int g = 0; g < dst_rank; ++g)
      if (col[static_cast<size_t>(g) * L] != 0) return false;
  return true;
}

std::vector<std::uint32_t> act_basis(const LocalAlgebra& A, int t,
                                     std::span<const std::uint32_t> v) {
  const int L = A.dim;
  const int blocks = static_cast<int>(v.size()) / L;
  std::vector<std::uint32_t> out(v.size(), 0);
  const std::uint64_t p = A.F.p;
  for (int g = 0; g < blocks; ++g) {
    for (int u = 0; u < L; ++u) {
      std::uint64_t c = v[static_cast<size_t>(g) * L + u];
      if (c == 0) continue;
      auto m = A.mult(t, u);
      for (int r = 0; r < L; ++r)
        if (m[r]) {
          auto& o = out[static_cast<size_t>(g) * L + r];
          o = static_cast<std::uint32_t>((o + c * m[r]) % p);
        }
    }
  }
  return out;
}

FpMatrix FreeMap::k_matrix(const LocalAlgebra& A) const {
  const int L = A.dim;
  FpMatrix out(A.F, dst_rank * L, src_rank * L);
  for (int j = 0; j < src_rank; ++j) {
    for (int t = 0; t < L; ++t) {
      std::vector<std::uint32_t> col = act_basis(A, t, columns[j]);
      for (int i = 0; i < dst_rank * L; ++i)
        if (col[i]) out.at(i, j * L + t) = col[i];
    }
  }
  return out;
}

std::vector<std::uint32_t> FreeMap::apply(const LocalAlgebra& A,
                                          std::span<const std::uint32_t> v) const {
  const int L = A.dim;
  std::vector<std::uint32_t> out(static_cast<size_t>(dst_rank) * L, 0);
  const std::uint64_t p = A.F.p;
  for (int j = 0; j < src_rank; ++j) {
    std::span<const std::uint32_t> r{v.data() + static_cast<size_t>(j) * L,
                                     static_cast<size_t>(L)};
    bool nz = std::any_of(r.begin(), r.end(), [](std::uint32_t x) { return x != 0; });
    if (!nz) continue;
    for (int g = 0; g < dst_rank; ++g) {
      std::vector<std::uint32_t> e = entry(A, g, j);
      std::vector<std::uint32_t> prod = A.mult_elems(e, r);
      for (int t = 0; t < L; ++t)
        if (prod[t]) {
          auto& o = out[static_cast<size_t>(g) * L + t];
          o = static_cast<std::uint32_t>((o + std::uint64_t(prod[t])) % p);
        }
    }
  }
  return out;
}

FreeMap freemap_compose(const LocalAlgebra& A, const FreeMap& f, const FreeMap& g) {
  if (f.src_rank != g.dst_rank) throw Error(Err::dimension_mismatch, "freemap_compose");
  FreeMap out;
  out.src_rank = g.src_rank;
  out.dst_rank = f.dst_rank;
  for (int j = 0; j < g.src_rank; ++j) out.columns.push_back(f.apply(A, g.columns[j]));
  return out;
}

namespace {

// Span of m*K inside the ambient space of K.
Subspace m_times(const LocalAlgebra& A, const Subspace& K) {
  FpMatrix rows(A.F, 0, K.ambient_dim);
  for (int t : A.gens_of_m())
    for (int i = 0; i < K.dim(); ++i) rows.append_row(act_basis(A, t, K.basis.row(i)));
  return Subspace::from_rows(rows);
}

FreeMap mingens_to_map(const Subspace& K, const Subspace& mK, int dst_rank) {
  FreeMap g;
  g.dst_rank = dst_rank;
  auto reps = quotient_representatives(K, mK);
  g.src_rank = static_cast<int>(reps.size());
  g.columns = std::move(reps);
  return g;
}

}  // namespace

FreeMap syzygy_step(const LocalAlgebra& A, const FreeMap& f) {
  Subspace K = kernel_basis(f.k_matrix(A));
  Subspace mK = m_times(A, K);
  return mingens_to_map(K, mK, f.src_rank);
}

FinModule residue_field_module() { return FinModule{ModuleKind::residue_field, 0, {}, "k"}; }

FinModule quotient_power_module(const LocalAlgebra& A, int n) {
  if (n < 1) throw Error(Err::argument, "quotient power needs n >= 1");
  (void)A;
  return FinModule{ModuleKind::quotient_power, n, {}, "R/m^" + std::to_string(n)};
}

FinModule power_module(const LocalAlgebra& A, int n) {
  if (n < 1) throw Error(Err::argument, "power module needs n >= 1");
  if (n > A.socle_degree())
    throw Error(Err::power_vanishes, "m^" + std::to_string(n) + " = 0");
  return FinModule{ModuleKind::power, n, {},
                   n == 1 ? std::string("m") : "m^" + std::to_string(n)};
}

FinModule cokernel_module(FreeMap presentation, std::string name) {
  FinModule m;
  m.kind = ModuleKind::cokernel;
  m.presentation = std::move(presentation);
  m.name = std::move(name);
  return m;
}

namespace {

struct F0Data {
  int rank{0};
  Subspace relations;       // R-submodule of R^rank, as a k-subspace
  std::vector<int> degs;    // generator degrees (graded mode)
  bool degs_valid{true};
};

// Degree of a homogeneous vector of R^r given generator degrees; nullopt when
// the vector is not homogeneous.
std::optional<int> row_degree(const LocalAlgebra& A, std::span<const std::uint32_t> v,
                              const std::vector<int>& gen_degs) {
  const int L = A.dim;
  std::optional<int> deg;
  for (size_t c = 0; c < v.size(); ++c) {
    if (v[c] == 0) continue;
    int d = gen_degs[c / L] + A.basis_degree[c % L];
    if (!deg)
      deg = d;
    else if (*deg != d)
      return std::nullopt;
  }
  return deg ? deg : std::optional<int>(0);
}

F0Data start_module(const LocalAlgebra& A, const FinModule& M) {
  const int L = A.dim;
  F0Data out;
  switch (M.kind) {
    case ModuleKind::residue_field:
      out.rank = 1;
      out.relations = A.filtration(1);
      out.degs = {0};
      return out;
    case ModuleKind::quotient_power:
      out.rank = 1;
      out.relations = M.n <= A.socle_degree() ? A.filtration(M.n)
                                              : Subspace::zero(A.F, L);
      out.degs = {0};
      return out;
    case ModuleKind::power: {
      std::vector<int> gens;
      for (int i = 0; i < L; ++i)
        if (A.basis_degree[i] == M.n) gens.push_back(i);
      out.rank = static_cast<int>(gens.size());
      if (out.rank == 0) throw Error(Err::power_vanishes, "power module vanishes");
      // kernel of R^g -> R, e_j -> basis[gens[j]]
      FpMatrix k(A.F, L, out.rank * L);
      for (int j = 0; j < out.rank; ++j)
        for (int t = 0; t < L; ++t) {
          auto m = A.mult(gens[j], t);
          for (int r = 0; r < L; ++r)
            if (m[r]) k.at(r, j * L + t) = m[r];
        }
      out.relations = kernel_basis(k);
      out.degs.assign(out.rank, M.n);
      return out;
    }
    case ModuleKind::cokernel: {
      const FreeMap& f = *M.presentation;
      const int g = f.dst_rank;
      // column R-span of f
      FpMatrix vrows(A.F, 0, g * L);
      for (const auto& col : f.columns)
        for (int t = 0; t < L; ++t) vrows.append_row(act_basis(A, t, col));
      Subspace V = Subspace::from_rows(vrows);
      std::vector<int> mcoords;
      for (int c = 0; c < g * L; ++c)
        if (A.basis_degree[c % L] >= 1) mcoords.push_back(c);
      Subspace W = sum(V, Subspace::coordinates(A.F, g * L, mcoords));
      // minimal generators of coker(f): unit vectors away from pivots of W
      std::vector<bool> wpiv(g * L, false);
      for (int c : W.pivots) wpiv[c] = true;
      std::vector<int> reps;
      for (int c = 0; c < g * L; ++c)
        if (!wpiv[c]) reps.push_back(c);
      out.rank = static_cast<int>(reps.size());
      out.degs.clear();
      for (int c : reps) out.degs.push_back(A.basis_degree[c % L]);
      // relations: x in R^rank with sum x_u * rep_u in V
      FpMatrix T(A.F, g * L, out.rank * L);
      std::vector<std::uint32_t> e(static_cast<size_t>(g) * L);
      for (int u = 0; u < out.rank; ++u) {
        std::fill(e.begin(), e.end(), 0);
        e[reps[u]] = 1;
        for (int t = 0; t < L; ++t) {
          std::vector<std::uint32_t> col = act_basis(A, t, e);
          V.reduce_in_place(col);
          for (int r = 0; r < g * L; ++r)
            if (col[r]) T.at(r, u * L + t) = col[r];
        }
      }
      out.relations = kernel_basis(T);
      return out;
    }
  }
  throw Error(Err::internal, "unknown module kind");
}

}  // namespace

void extend_resolution(MinimalResolution& res, int depth, const ResolveOptions& opts) {
  const LocalAlgebra& A = *res.A;
  const int L = A.dim;
  if (res.betti.empty()) {
    F0Data f0 = start_module(A, res.module);
    res.betti.push_back(f0.rank);
    res.graded = A.graded && f0.degs_valid;
    res.degrees.push_back(f0.degs);
    // d_1 from the minimal generators of the relation submodule
    Subspace mK = m_times(A, f0.relations);
    FreeMap d1 = mingens_to_map(f0.relations, mK, f0.rank);
    res.kernels.push_back(std::move(f0.relations));
    res.maps.push_back(std::move(d1));
    res.betti.push_back(res.maps[0].src_rank);
    res.ranks.push_back(-1);  // rank of k(d_1), filled when computed
    res.depth = 1;
  }
  while (res.depth < depth) {
    const FreeMap& last = res.maps.back();
    long long cols = static_cast<long long>(last.src_rank) * L;
    long long entries = cols * last.dst_rank * L;
    if (cols > opts.max_entries || entries > 200 * opts.max_entries)
      throw Error(Err::resource_limit,
                  "resolution of " + res.module.name + " exceeds the memory guard at step " +
                      std::to_string(res.depth) + " (beta*L = " + std::to_string(cols) + ")");
    RrefResult r = rref(last.k_matrix(A));
    res.ranks[res.depth - 1] = r.rank;
    // kernel from the reduced form
    const PrimeField f = A.F;
    std::vector<bool> is_pivot(last.src_rank * L, false);
    for (int c : r.pivots) is_pivot[c] = true;
    FpMatrix kerrows(f, 0, last.src_rank * L);
    std::vector<std::uint32_t> v(static_cast<size_t>(last.src_rank) * L);
    for (int c = 0; c < last.src_rank * L; ++c) {
      if (is_pivot[c]) continue;
      std::fill(v.begin(), v.end(), 0);
      v[c] = 1;
      for (int i = 0; i < r.rank; ++i) v[r.pivots[i]] = f.neg(r.reduced.at(i, c));
      kerrows.append_row(v);
    }
    Subspace K = Subspace::from_rows(kerrows);
    Subspace mK = m_times(A, K);
    FreeMap next = mingens_to_map(K, mK, last.src_rank);
    res.kernels.push_back(std::move(K));
    res.betti.push_back(next.src_rank);
    res.maps.push_back(std::move(next));
    res.ranks.push_back(-1);
    ++res.depth;
  }

  // generator degrees (graded mode)
  while (res.graded && res.degrees.size() < res.maps.size() + 1) {
    size_t i = res.degrees.size();  // degrees of F_i from map d_i
    const FreeMap& d = res.maps[i - 1];
    std::vector<int> degs;
    for (const auto& col : d.columns) {
      auto deg = row_degree(A, col, res.degrees[i - 1]);
      if (!deg) {
        if (res.module.kind == ModuleKind::cokernel) {
          res.graded = false;
          res.degrees.clear();
          break;
        }
        throw Error(Err::internal, "inhomogeneous syzygy over a graded algebra");
      }
      degs.push_back(*deg);
    }
    if (res.graded) res.degrees.push_back(std::move(degs));
  }

  if (opts.verify) {
    // minimality: all differentials have entries in m
    for (const FreeMap& d : res.maps)
      if (!d.entries_in_m(A))
        throw Error(Err::internal, "non-minimal differential produced");
    // exactness at computed spots: rank k(d_{i+1}) == dim ker k(d_i); at i = 0
    // the kernel entry holds the relation submodule of F_0.
    for (int i = 0; i < res.depth; ++i) {
      if (res.ranks[i] < 0) res.ranks[i] = rref(res.map(i + 1).k_matrix(A)).rank;
      if (res.ranks[i] != res.kernels[i].dim())
        throw Error(Err::internal, "resolution not exact at step " + std::to_string(i));
    }
    // d_i . d_{i+1} = 0: columns of d_{i+1} die under d_i
    for (int i = 1; i < res.depth; ++i) {
      for (const auto& col : res.map(i + 1).columns) {
        auto img = res.map(i).apply(A, col);
        if (!std::all_of(img.begin(), img.end(), [](std::uint32_t x) { return x == 0; }))
          throw Error(Err::internal, "d.d != 0 at step " + std::to_string(i));
      }
    }
  }
}

MinimalResolution resolve(const LocalAlgebra& A, const FinModule& M, int depth,
                          const ResolveOptions& opts) {
  if (depth < 1) throw Error(Err::argument, "depth must be >= 1");
  MinimalResolution res;
  res.A = &A;
  res.module = M;
  extend_resolution(res, depth, opts);
  return res;
}

std::map<std::pair<int, int>, int> graded_betti(const MinimalResolution& res) {
  if (!res.graded) throw Error(Err::not_graded, "graded Betti numbers need a graded module");
  std::map<std::pair<int, int>, int> out;
  for (size_t i = 0; i < res.degrees.size(); ++i)
    for (int j : res.degrees[i]) ++out[{static_cast<int>(i), j}];
  return out;
}

int regularity_up_to(const MinimalResolution& res) {
  if (!res.graded) throw Error(Err::not_graded, "regularity needs a graded module");
  int reg = 0;
  for (size_t i = 0; i < res.degrees.size(); ++i)
    for (int j : res.degrees[i]) reg = std::max(reg, j - static_cast<int>(i));
  return reg;
}

}  // namespace lindef
