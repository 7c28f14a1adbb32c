#include "invariants.hpp"

#include <algorithm>

namespace lindef {

BoundedVerdict s_invariant(const AlgebraPresentation& pres, bool truncation_forced) {
  PrimeField f{pres.p};
  const int W = pres.cap;
  MonomialTable table(static_cast<int>(pres.vars.size()), W);

  std::vector<TruncatedPoly> gens = pres.relations;
  if (truncation_forced)
    for (const Monomial& m : monomials_of_degree(table.nvars(), pres.truncation_degree + 1))
      gens.push_back(monomial_poly(pres.p, W, m));

  std::vector<TruncatedPoly> ngens;
  for (int v = 0; v < table.nvars(); ++v) {
    Monomial xv;
    xv.exps.assign(table.nvars(), 0);
    xv.exps[v] = 1;
    TruncatedPoly xvp = monomial_poly(pres.p, W, xv);
    for (const TruncatedPoly& g : gens) ngens.push_back(poly_mul(xvp, g));
  }

  Subspace a = ideal_span(gens, table);
  Subspace na = ideal_span(ngens, table);
  std::vector<Subspace> filt = order_filtration(f, table);

  for (int i = 1; i + 2 <= W + 1 && i <= W - 2; ++i) {
    Subspace cut = intersect(a, filt[i + 2]);
    if (contains(na, cut)) return {true, i};
  }
  return {false, W - 1};
}

bool koszul_check(const LocalAlgebra& a, int depth, const ResolveOptions& opts) {
  LocalAlgebra gr = associated_graded(a);
  MinimalResolution res = resolve(gr, residue_field_module(), depth, opts);
  if (!res.graded) throw Error(Err::internal, "gr resolution must be graded");
  for (size_t i = 0; i < res.degrees.size(); ++i)
    for (int j : res.degrees[i])
      if (j != static_cast<int>(i)) return false;
  return true;
}

CiResult is_complete_intersection(const LocalAlgebra& a) {
  if (a.truncation_forced)
    throw Error(Err::truncation_forced,
                "complete intersection status is not decidable from a truncated presentation");
  MonomialTable table(static_cast<int>(a.pres.vars.size()), a.pres.cap);
  std::vector<TruncatedPoly> ngens;
  for (int v = 0; v < table.nvars(); ++v) {
    Monomial xv;
    xv.exps.assign(table.nvars(), 0);
    xv.exps[v] = 1;
    TruncatedPoly xvp = monomial_poly(a.pres.p, a.pres.cap, xv);
    for (const TruncatedPoly& g : a.pres.relations) ngens.push_back(poly_mul(xvp, g));
  }
  int da = ideal_span(a.pres.relations, table).dim();
  int dna = ideal_span(ngens, table).dim();
  CiResult out;
  out.mu = da - dna;
  out.codim = table.nvars();
  out.is_ci = (out.mu == out.codim);
  return out;
}

bool minimal_multiplicity_ci(const LocalAlgebra& a, int codim) {
  long long e = 1;
  for (int i = 0; i < codim; ++i) e *= 2;
  return a.multiplicity() == e;
}

bool minimal_multiplicity_cm(const LocalAlgebra& a) {
  return a.multiplicity() == a.edim() + 1;
}

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

std::vector<int> koszul_complex_homology(const LocalAlgebra& a) {
  const int e = a.edim();
  const int L = a.dim;
  std::vector<int> gens = a.gens_of_m();

  // differentials of the exterior complex, as k-matrices
  std::vector<FpMatrix> d(e + 1);  // d[i]: spot i -> spot i-1
  std::vector<std::vector<std::vector<int>>> subsets(e + 1);
  for (int i = 0; i <= e; ++i) subsets[i] = subsets_of_size(e, i);

  for (int i = 1; i <= e; ++i) {
    std::map<std::vector<int>, int> lower;
    for (size_t s = 0; s < subsets[i - 1].size(); ++s) lower[subsets[i - 1][s]] = static_cast<int>(s);
    FpMatrix m(a.F, static_cast<int>(subsets[i - 1].size()) * L,
               static_cast<int>(subsets[i].size()) * L);
    for (size_t s = 0; s < subsets[i].size(); ++s) {
      const std::vector<int>& S = subsets[i][s];
      for (int l = 0; l < i; ++l) {
        std::vector<int> T = S;
        T.erase(T.begin() + l);
        int trow = lower[T];
        const FpMatrix& op = a.mult_op(gens[S[l]]);
        bool negate = (l % 2) == 1;
        for (int r = 0; r < L; ++r)
          for (int c = 0; c < L; ++c) {
            std::uint32_t v = op.at(r, c);
            if (!v) continue;
            m.at(trow * L + r, static_cast<int>(s) * L + c) =
                negate ? a.F.neg(v) : v;
          }
      }
    }
    d[i] = std::move(m);
  }

  // dim H_i = dim ker d_i - rank d_{i+1}
  std::vector<int> dims(e + 1, 0);
  std::vector<int> rank(e + 2, 0);
  for (int i = 1; i <= e; ++i) rank[i] = rref(d[i]).rank;
  for (int i = 0; i <= e; ++i) {
    long long nspot = static_cast<long long>(subsets[i].size()) * L;
    int ker = (i == 0) ? static_cast<int>(nspot) : static_cast<int>(nspot) - rank[i];
    dims[i] = ker - (i + 1 <= e ? rank[i + 1] : 0);
  }
  return dims;
}

std::vector<long long> expand_rational_series(const std::vector<long long>& num,
                                              const std::vector<long long>& den, int upto) {
  if (den.empty() || den[0] != 1)
    throw Error(Err::argument, "series denominator must have constant term 1");
  std::vector<long long> out(upto + 1, 0);
  for (int i = 0; i <= upto; ++i) {
    long long v = i < static_cast<int>(num.size()) ? num[i] : 0;
    for (int j = 1; j <= i && j < static_cast<int>(den.size()); ++j)
      v -= den[j] * out[i - j];
    out[i] = v;
  }
  return out;
}

std::vector<long long> golod_series(int edim, const std::vector<int>& kh, int upto) {
  std::vector<long long> num(edim + 1, 0);
  num[0] = 1;
  for (int i = 1; i <= edim; ++i)
    num[i] = num[i - 1] * (edim - i + 1) / i;  // binomial(edim, i)
  std::vector<long long> den(edim + 2, 0);
  den[0] = 1;
  for (int i = 1; i < static_cast<int>(kh.size()); ++i)
    if (i + 1 < static_cast<int>(den.size())) den[i + 1] = -kh[i];
  return expand_rational_series(num, den, upto);
}

bool golod_check(const LocalAlgebra& a, const std::vector<int>& betti_k, int depth) {
  std::vector<int> kh = koszul_complex_homology(a);
  std::vector<long long> bound = golod_series(a.edim(), kh, depth);
  for (int i = 0; i <= depth && i < static_cast<int>(betti_k.size()); ++i)
    if (betti_k[i] != bound[i]) return false;
  return true;
}

std::string YonedaVerdict::str() const {
  switch (kind) {
    case YonedaKind::equals_dual:
      return "equals_dual";
    case YonedaKind::generated_in_degrees_le:
      return "generated_in_degrees_le(" + std::to_string(r) + ")";
    case YonedaKind::no_finite_generation_detected:
      return "no_finite_generation_detected";
  }
  return "?";
}

YonedaVerdict yoneda_report(const NuTable& nu, int depth) {
  YonedaVerdict out;
  int rstar = 0;
  for (int i = 1; i <= nu.imax; ++i)
    if (!nu.zero(i, 1)) rstar = i;
  out.r = rstar;
  if (rstar == 0)
    out.kind = YonedaKind::equals_dual;
  else if (rstar <= depth - 1 - out.margin)
    out.kind = YonedaKind::generated_in_degrees_le;
  else
    out.kind = YonedaKind::no_finite_generation_detected;
  return out;
}

}  // namespace lindef
