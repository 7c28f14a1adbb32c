#include "algebra.hpp"

#include <algorithm>

namespace lindef {

int LocalAlgebra::socle_degree() const {
  for (int s = static_cast<int>(hilbert.size()) - 1; s >= 0; --s)
    if (hilbert[s] > 0) return s;
  return 0;
}

std::vector<int> LocalAlgebra::gens_of_m() const {
  std::vector<int> out;
  for (int i = 0; i < dim; ++i)
    if (basis_degree[i] == 1) out.push_back(i);
  return out;
}

std::vector<std::uint32_t> LocalAlgebra::mult_elems(std::span<const std::uint32_t> a,
                                                    std::span<const std::uint32_t> b) const {
  std::vector<std::uint32_t> out(dim, 0);
  const std::uint64_t p = F.p;
  for (int i = 0; i < dim; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (b[j] == 0) continue;
      std::uint64_t c = std::uint64_t(a[i]) * b[j] % p;
      auto m = mult(i, j);
      for (int r = 0; r < dim; ++r)
        if (m[r]) out[r] = static_cast<std::uint32_t>((out[r] + c * m[r]) % p);
    }
  }
  return out;
}

int LocalAlgebra::filtration_start(int s) const {
  int i = 0;
  while (i < dim && basis_degree[i] < s) ++i;
  return i;
}

Subspace LocalAlgebra::filtration(int s) const {
  std::vector<int> coords;
  for (int i = filtration_start(s); i < dim; ++i) coords.push_back(i);
  return Subspace::coordinates(F, dim, coords);
}

std::vector<std::uint32_t> LocalAlgebra::normal_form(std::vector<std::uint32_t> dense) const {
  ideal.reduce_in_place(dense);
  std::vector<std::uint32_t> out(dim);
  for (int i = 0; i < dim; ++i) out[i] = dense[basis[i]];
  return out;
}

TruncatedPoly LocalAlgebra::basis_poly(int i) const {
  return monomial_poly(F.p, pres.cap, table->monomial(basis[i]));
}

std::string LocalAlgebra::basis_name(int i, const std::vector<std::string>& vars) const {
  return monomial_to_string(table->monomial(basis[i]), vars);
}

void LocalAlgebra::finalize() {
  mult_table_.assign(static_cast<size_t>(dim) * dim * dim, 0);
  for (int i = 0; i < dim; ++i) {
    const Monomial& mi = table->monomial(basis[i]);
    for (int j = i; j < dim; ++j) {
      const Monomial& mj = table->monomial(basis[j]);
      Monomial prod;
      prod.exps.resize(mi.exps.size());
      for (size_t v = 0; v < mi.exps.size(); ++v) prod.exps[v] = mi.exps[v] + mj.exps[v];
      std::vector<std::uint32_t> coords(dim, 0);
      int idx = prod.degree() <= table->cap() ? table->index_of(prod) : -1;
      if (idx >= 0) {
        std::vector<std::uint32_t> dense(table->size(), 0);
        dense[idx] = 1;
        coords = normal_form(std::move(dense));
      }
      std::copy(coords.begin(), coords.end(),
                mult_table_.begin() + (static_cast<size_t>(i) * dim + j) * dim);
      std::copy(coords.begin(), coords.end(),
                mult_table_.begin() + (static_cast<size_t>(j) * dim + i) * dim);
    }
  }
  rebuild_mult_ops();
}

void LocalAlgebra::set_mult(int i, int j, std::span<const std::uint32_t> coords) {
  std::copy(coords.begin(), coords.end(),
            mult_table_.begin() + (static_cast<size_t>(i) * dim + j) * dim);
}

void LocalAlgebra::rebuild_mult_ops() {
  mult_ops_.clear();
  for (int t = 0; t < dim; ++t) {
    FpMatrix op(F, dim, dim);
    for (int u = 0; u < dim; ++u) {
      auto m = mult(t, u);
      for (int r = 0; r < dim; ++r) op.at(r, u) = m[r];
    }
    mult_ops_.push_back(std::move(op));
  }
}

LocalAlgebra build_algebra(const AlgebraPresentation& pres) {
  if (!PrimeField::is_prime(pres.p))
    throw Error(Err::field, "field characteristic " + std::to_string(pres.p) + " is not prime");
  const int n = static_cast<int>(pres.vars.size());
  if (n == 0) throw Error(Err::argument, "presentation needs at least one variable");
  const int N = pres.truncation_degree;
  if (N < 1) throw Error(Err::argument, "truncation degree must be >= 1");
  int maxreldeg = 0;
  for (const TruncatedPoly& r : pres.relations) {
    if (r.is_zero()) continue;
    if (r.order() < 2)
      throw Error(Err::relation_order,
                  "relation '" + poly_to_string(r, pres.vars) + "' has a term of degree < 2");
    maxreldeg = std::max(maxreldeg, r.degree());
  }
  if (pres.cap < N + 2 || pres.cap <= maxreldeg)
    throw Error(Err::argument, "cap must be >= truncation degree + 2 and > relation degrees");

  LocalAlgebra A;
  A.F = PrimeField{pres.p};
  A.pres = pres;
  A.table = std::make_shared<MonomialTable>(n, pres.cap);

  std::vector<TruncatedPoly> rels;
  for (const TruncatedPoly& r : pres.relations)
    if (!r.is_zero()) rels.push_back(retruncate(r, pres.cap));
  A.pres.relations = rels;

  // the truncation monomials of degree N+1 are always adjoined
  std::vector<TruncatedPoly> gens = rels;
  for (const Monomial& m : monomials_of_degree(n, N + 1))
    gens.push_back(monomial_poly(pres.p, pres.cap, m));
  A.ideal = ideal_span(gens, *A.table);

  // honesty: does m^(N+1) = 0 already follow from the relations alone?
  // Uses full products only, at a probe cap, so truncation tails cannot
  // fabricate memberships.
  {
    int probe = std::min(std::max(pres.cap, N + 1 + maxreldeg), 20);
    MonomialTable ptable(n, probe);
    Subspace honest = ideal_span_exact(rels, ptable);
    bool ok = true;
    for (const Monomial& m : monomials_of_degree(n, N + 1)) {
      std::vector<std::uint32_t> v(ptable.size(), 0);
      v[ptable.index_of(m)] = 1;
      if (!honest.contains_vector(v)) {
        ok = false;
        break;
      }
    }
    A.truncation_forced = !ok;
  }

  std::vector<bool> is_pivot(A.table->size(), false);
  for (int c : A.ideal.pivots) is_pivot[c] = true;
  for (int i = 0; i < A.table->size(); ++i) {
    if (is_pivot[i]) continue;
    if (A.table->degree_of(i) > N) continue;  // tail of the window, all in the ideal
    A.basis.push_back(i);
    A.basis_degree.push_back(A.table->degree_of(i));
  }
  A.dim = static_cast<int>(A.basis.size());
  if (A.dim == 0 || A.basis[0] != 0)
    throw Error(Err::internal, "algebra basis does not start at 1");

  A.hilbert.assign(N + 1, 0);
  for (int d : A.basis_degree) ++A.hilbert[d];

  A.graded = std::all_of(rels.begin(), rels.end(),
                         [](const TruncatedPoly& r) { return r.is_homogeneous(); });

  A.finalize();
  return A;
}

LocalAlgebra associated_graded(const LocalAlgebra& a) {
  LocalAlgebra g = a;
  g.graded = true;
  g.is_associated_graded = true;
  // keep only the degree-(d_i + d_j) component of each product
  std::vector<std::uint32_t> coords(a.dim);
  for (int i = 0; i < a.dim; ++i) {
    for (int j = 0; j < a.dim; ++j) {
      int d = a.basis_degree[i] + a.basis_degree[j];
      auto m = a.mult(i, j);
      std::copy(m.begin(), m.end(), coords.begin());
      for (int r = 0; r < a.dim; ++r)
        if (a.basis_degree[r] != d) coords[r] = 0;
      g.set_mult(i, j, coords);
    }
  }
  g.rebuild_mult_ops();
  return g;
}

std::vector<int> hilbert_series(const LocalAlgebra& a) { return a.hilbert; }
int multiplicity(const LocalAlgebra& a) { return a.dim; }
int edim(const LocalAlgebra& a) { return a.edim(); }
int socle_degree(const LocalAlgebra& a) { return a.socle_degree(); }

}  // namespace lindef
