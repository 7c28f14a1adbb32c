#include "lindefect.hpp"

#include <algorithm>

namespace lindef {

bool LinHomologyTable::row_zero(int j) const {
  return std::all_of(h[j].begin(), h[j].end(), [](int x) { return x == 0; });
}

bool NuTable::row_zero(int i) const {
  return std::all_of(rank[i - 1].begin(), rank[i - 1].end(), [](int x) { return x == 0; });
}

namespace {

// m^s F_i as a coordinate subspace of k^(beta_i * L); full space for s <= 0.
Subspace module_filtration(const MinimalResolution& res, int i, int s) {
  const LocalAlgebra& A = *res.A;
  const int L = A.dim;
  const int beta = res.betti[i];
  if (s <= 0) return Subspace::full(A.F, beta * L);
  std::vector<int> coords;
  int lo = A.filtration_start(s);
  for (int g = 0; g < beta; ++g)
    for (int t = lo; t < L; ++t) coords.push_back(g * L + t);
  return Subspace::coordinates(A.F, beta * L, coords);
}

std::vector<FpMatrix> cache_k_matrices(const MinimalResolution& res) {
  std::vector<FpMatrix> k;
  for (int i = 1; i <= res.depth; ++i) k.push_back(res.map(i).k_matrix(*res.A));
  return k;
}

struct HomologyPair {
  Subspace cycles;
  Subspace boundaries;
  int ambient;  // dim of F_i/m^c F_i
};

// Cycles/boundaries of F/m^c F at spot i, inside the quotient coordinates.
HomologyPair tor_spaces(const MinimalResolution& res, const std::vector<FpMatrix>& k,
                        int i, int c) {
  FpMatrix din = induced_map_on_subquotients(k[i - 1], module_filtration(res, i, 0),
                                             module_filtration(res, i, c),
                                             module_filtration(res, i - 1, 0),
                                             module_filtration(res, i - 1, c));
  FpMatrix dout = induced_map_on_subquotients(k[i], module_filtration(res, i + 1, 0),
                                              module_filtration(res, i + 1, c),
                                              module_filtration(res, i, 0),
                                              module_filtration(res, i, c));
  HomologyPair h;
  h.ambient = din.cols();
  h.cycles = kernel_basis(din);
  h.boundaries = Subspace::from_rows(dout.transpose());
  return h;
}

// Projection F_i/m^(n+1)F_i -> F_i/m^n F_i between quotient coordinates.
FpMatrix quotient_projection(const MinimalResolution& res, int i, int n) {
  const LocalAlgebra& A = *res.A;
  const int beta = res.betti[i];
  const int hi = A.filtration_start(n + 1);
  const int lo = A.filtration_start(n);
  FpMatrix P(A.F, beta * lo, beta * hi);
  for (int g = 0; g < beta; ++g)
    for (int t = 0; t < lo; ++t) P.at(g * lo + t, g * hi + t) = 1;
  return P;
}

std::pair<bool, int> nu_homology_impl(const MinimalResolution& res,
                                      const std::vector<FpMatrix>& k, int i, int n) {
  const LocalAlgebra& A = *res.A;
  const int N = A.truncation_degree();
  if (i < 1 || i > res.depth - 1)
    throw Error(Err::argument, "nu: need 1 <= i <= depth-1");
  if (n >= N + 1) {
    // m^(n+1) = m^n on this window: both sides compute the same homology and
    // the map is an iso of zero spaces for i >= 1 (F is exact there).
    return {true, 0};
  }
  HomologyPair high = tor_spaces(res, k, i, n + 1);
  HomologyPair low = tor_spaces(res, k, i, n);
  FpMatrix P = quotient_projection(res, i, n);
  FpMatrix nu = induced_map_on_subquotients(P, high.cycles, high.boundaries, low.cycles,
                                            low.boundaries);
  int r = rref(nu).rank;
  return {r == 0, r};
}

bool nu_cycle_impl(const MinimalResolution& res, const std::vector<FpMatrix>& k, int i,
                   int n) {
  const LocalAlgebra& A = *res.A;
  const int L = A.dim;
  if (i < 1 || i > res.depth - 1)
    throw Error(Err::argument, "nu: need 1 <= i <= depth-1");

  // X = preimage of m^(n+1) F_{i-1} under d_i: kernel of the rows of k(d_i)
  // landing below filtration level n+1.
  const int lo_dst = A.filtration_start(n + 1);
  const FpMatrix& kd = k[i - 1];
  FpMatrix low_rows(A.F, 0, kd.cols());
  for (int g = 0; g < res.betti[i - 1]; ++g)
    for (int t = 0; t < lo_dst; ++t) low_rows.append_row(kd.row(g * L + t));
  Subspace X = kernel_basis(low_rows);

  // Contain X in ker(d_i) + m^n F_i, tested inside F_i/m^n F_i.
  const Subspace& K = res.kernels[i];
  const int lo_src = A.filtration_start(n);
  std::vector<int> keep;
  for (int g = 0; g < res.betti[i]; ++g)
    for (int t = 0; t < lo_src; ++t) keep.push_back(g * L + t);

  FpMatrix kproj(A.F, 0, static_cast<int>(keep.size()));
  std::vector<std::uint32_t> row(keep.size());
  for (int r = 0; r < K.dim(); ++r) {
    for (size_t c = 0; c < keep.size(); ++c) row[c] = K.basis.at(r, keep[c]);
    kproj.append_row(row);
  }
  Subspace PK = Subspace::from_rows(kproj);
  for (int r = 0; r < X.dim(); ++r) {
    for (size_t c = 0; c < keep.size(); ++c) row[c] = X.basis.at(r, keep[c]);
    if (!PK.contains_vector(row)) return false;
  }
  return true;
}

}  // namespace

LinHomologyTable lin_homology(const MinimalResolution& res) {
  const LocalAlgebra& A = *res.A;
  const int N = A.truncation_degree();
  std::vector<FpMatrix> k = cache_k_matrices(res);
  LinHomologyTable out;
  out.depth = res.depth;
  out.smax = N;
  out.h.assign(res.depth, std::vector<int>(N + 1, 0));
  for (int j = 0; j <= res.depth - 1; ++j) {
    for (int s = 0; s <= N; ++s) {
      FpMatrix in = induced_map_on_subquotients(
          k[j], module_filtration(res, j + 1, s - 1), module_filtration(res, j + 1, s),
          module_filtration(res, j, s), module_filtration(res, j, s + 1));
      int rank_in = rref(in).rank;
      int cycles;
      if (j == 0) {
        cycles = in.rows();  // no outgoing differential
      } else {
        FpMatrix outm = induced_map_on_subquotients(
            k[j - 1], module_filtration(res, j, s), module_filtration(res, j, s + 1),
            module_filtration(res, j - 1, s + 1), module_filtration(res, j - 1, s + 2));
        cycles = outm.cols() - rref(outm).rank;
      }
      out.h[j][s] = cycles - rank_in;
      if (out.h[j][s] < 0)
        throw Error(Err::internal, "negative homology dimension in lin table");
    }
  }
  return out;
}

std::pair<bool, int> nu_vanishes_homology(const MinimalResolution& res, int i, int n) {
  std::vector<FpMatrix> k = cache_k_matrices(res);
  return nu_homology_impl(res, k, i, n);
}

bool nu_vanishes_cycle_criterion(const MinimalResolution& res, int i, int n) {
  std::vector<FpMatrix> k = cache_k_matrices(res);
  return nu_cycle_impl(res, k, i, n);
}

NuTable nu_table(const MinimalResolution& res, int depth, int nmax) {
  if (depth > res.depth) throw Error(Err::argument, "nu_table: depth exceeds resolution");
  std::vector<FpMatrix> k = cache_k_matrices(res);
  NuTable out;
  out.imax = depth - 1;
  out.nmax = nmax;
  out.rank.assign(out.imax, std::vector<int>(nmax, 0));
  for (int i = 1; i <= out.imax; ++i) {
    for (int n = 1; n <= nmax; ++n) {
      auto [zero, rank] = nu_homology_impl(res, k, i, n);
      bool zero2 = nu_cycle_impl(res, k, i, n);
      if (zero != zero2)
        throw Error(Err::crosscheck,
                    "nu algorithms disagree at i=" + std::to_string(i) +
                        ", n=" + std::to_string(n) + " for " + res.module.name);
      out.rank[i - 1][n - 1] = rank;
    }
  }
  return out;
}

bool theorem_mu_crosscheck(const LinHomologyTable& lin, const NuTable& nu, int i) {
  if (i < 1 || i + 1 > nu.imax || i > lin.depth - 1)
    throw Error(Err::argument, "theorem_mu_crosscheck: row out of range");
  bool lhs = lin.row_zero(i);
  bool rhs = nu.row_zero(i) && nu.row_zero(i + 1);
  return lhs == rhs;
}

BoundedVerdict linearity_defect(const LinHomologyTable& lin, const NuTable* nu) {
  const int top = lin.depth - 1;
  int d = 0;
  for (int j = 1; j <= top; ++j)
    if (!lin.row_zero(j)) d = j;
  if (d == top && d > 0) return {false, lin.depth};
  if (nu) {
    for (int i = d + 1; i <= std::min(top, nu->imax); ++i)
      if (!nu->row_zero(i)) return {false, lin.depth};
  }
  return {true, d};
}

}  // namespace lindef
