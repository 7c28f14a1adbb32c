#include "corpus.hpp"

#include <sstream>

#include "specfile.hpp"

namespace lindef {

namespace {

std::vector<long long> linear_betti(int upto) {  // 1, 2, 3, ...
  std::vector<long long> b(upto + 1);
  for (int i = 0; i <= upto; ++i) b[i] = i + 1;
  return b;
}

std::vector<long long> constant_betti(int upto) {  // 1, 1, 1, ...
  return std::vector<long long>(upto + 1, 1);
}

std::vector<long long> doubling_betti(int upto) {  // 1, 2, 4, ...
  std::vector<long long> b(upto + 1);
  b[0] = 1;
  for (int i = 1; i <= upto; ++i) b[i] = 2 * b[i - 1];
  return b;
}

std::vector<CorpusEntry> build_entries() {
  std::vector<CorpusEntry> out;

  {
    CorpusEntry e;
    e.name = "K1";
    e.description = "quadratic monomial complete intersection (x^2, y^2)";
    e.spec_text =
        "field: 101\nvars: x, y\nrelations: x^2; y^2\ntruncate: 2\ncap: 4\n";
    e.dim = 4;
    e.hilbert = {1, 2, 1};
    e.edim = 2;
    e.socle = 2;
    e.graded = true;
    e.honest = true;
    e.betti_k = linear_betti(8);
    e.ld_k_zero = true;
    e.s_value = 1;
    e.ci = true;
    e.mu = 2;
    e.ci_min_mult = true;  // e = 4 = 2^2
    e.cm_min_mult = false;
    e.golod = false;
    e.koszul = true;
    e.yoneda = YonedaKind::equals_dual;
    e.koszul_homology = {1, 2, 1};
    e.poincare = {{{1}, {1, -2, 1}}};  // 1/(1-t)^2
    e.sources = {
        {"basis", "hand enumeration of normal monomials 1, x, y, xy"},
        {"betti_k", "series (1+t)^e/(1-t^2)^c with e = c = 2"},
        {"koszul_homology", "hand kernel/image ranks on the 2-variable exterior complex"},
        {"s", "hand containment check of the degree >= 3 slice in n*(x^2, y^2)"},
    };
    out.push_back(std::move(e));
  }

  {
    CorpusEntry e;
    e.name = "H3";
    e.description = "cubic hypersurface (x^3)";
    e.spec_text = "field: 101\nvars: x\nrelations: x^3\ntruncate: 2\ncap: 4\n";
    e.dim = 3;
    e.hilbert = {1, 1, 1};
    e.edim = 1;
    e.socle = 2;
    e.graded = true;
    e.honest = true;
    e.betti_k = constant_betti(8);
    e.ld_k_zero = false;
    e.s_value = 2;
    e.ci = true;
    e.mu = 1;
    e.ci_min_mult = false;  // e = 3 != 2
    e.cm_min_mult = false;
    e.golod = true;
    e.koszul = false;
    e.yoneda = YonedaKind::no_finite_generation_detected;
    e.koszul_homology = {1, 1};
    e.poincare = {{{1}, {1, -1}}};  // 1/(1-t)
    e.sources = {
        {"betti_k", "series (1+t)/(1-t^2) = 1/(1-t); resolution alternates (x), (x^2)"},
        {"koszul_homology", "H_1 = ann(x) = (x^2), dimension 1"},
        {"s", "(x^3) meets n^4 in (x^4) = n*(x^3); fails at i = 1"},
        {"yoneda", "nu^1 nonzero at every even row"},
    };
    out.push_back(std::move(e));
  }

  {
    CorpusEntry e;
    e.name = "T2";
    e.description = "square of the maximal ideal is zero: (x^2, xy, y^2)";
    e.spec_text =
        "field: 101\nvars: x, y\nrelations: x^2; x*y; y^2\ntruncate: 1\ncap: 3\n";
    e.dim = 3;
    e.hilbert = {1, 2};
    e.edim = 2;
    e.socle = 1;
    e.graded = true;
    e.honest = true;
    e.betti_k = doubling_betti(8);
    e.ld_k_zero = true;
    e.s_value = 1;
    e.ci = false;
    e.mu = 3;
    e.cm_min_mult = true;  // e = 3 = edim + 1
    e.golod = true;
    e.koszul = true;
    e.yoneda = YonedaKind::equals_dual;
    e.koszul_homology = {1, 3, 2};
    e.poincare = {{{1}, {1, -2}}};  // 1/(1-2t)
    e.sources = {
        {"betti_k", "series (1+t)^2/(1-3t^2-2t^3) = 1/(1-2t)"},
        {"koszul_homology", "hand ranks: ker [x y] has dim 4, image of the Koszul relation dim 1"},
    };
    out.push_back(std::move(e));
  }

  {
    CorpusEntry e;
    e.name = "K2";
    e.description = "binomial complete intersection (x^2 - y^2, xy)";
    e.spec_text =
        "field: 101\nvars: x, y\nrelations: x^2 - y^2; x*y\ntruncate: 2\ncap: 4\n";
    e.dim = 4;
    e.hilbert = {1, 2, 1};
    e.edim = 2;
    e.socle = 2;
    e.graded = true;
    e.honest = true;
    e.betti_k = linear_betti(8);
    e.ld_k_zero = true;
    e.s_value = 1;
    e.ci = true;
    e.mu = 2;
    e.ci_min_mult = true;  // e = 4 = 2^2
    e.cm_min_mult = false;
    e.golod = false;
    e.koszul = true;
    e.yoneda = YonedaKind::equals_dual;
    e.koszul_homology = {1, 2, 1};
    e.poincare = {{{1}, {1, -2, 1}}};
    e.sources = {
        {"basis", "normal monomials 1, x, y, y^2 with x^2 = y^2, xy = 0"},
        {"betti_k", "series (1+t)^2/(1-t^2)^2 = 1/(1-t)^2"},
    };
    out.push_back(std::move(e));
  }

  {
    CorpusEntry e;
    e.name = "X4";
    e.description = "quartic hypersurface (x^4)";
    e.spec_text = "field: 101\nvars: x\nrelations: x^4\ntruncate: 3\ncap: 5\n";
    e.dim = 4;
    e.hilbert = {1, 1, 1, 1};
    e.edim = 1;
    e.socle = 3;
    e.graded = true;
    e.honest = true;
    e.betti_k = constant_betti(8);
    e.ld_k_zero = false;
    e.s_value = 3;
    e.ci = true;
    e.mu = 1;
    e.ci_min_mult = false;  // e = 4 != 2
    e.cm_min_mult = false;
    e.golod = true;
    e.koszul = false;
    e.yoneda = YonedaKind::no_finite_generation_detected;
    e.koszul_homology = {1, 1};
    e.poincare = {{{1}, {1, -1}}};
    e.sources = {
        {"s", "(x^4) meets n^5 in (x^5) = n*(x^4); fails below i = 3"},
        {"betti_k", "hypersurface: resolution alternates (x), (x^3)"},
    };
    out.push_back(std::move(e));
  }

  {
    CorpusEntry e;
    e.name = "M3";
    e.description = "strongly stable monomial ideal (x^2, xy, y^3)";
    e.spec_text =
        "field: 101\nvars: x, y\nrelations: x^2; x*y; y^3\ntruncate: 2\ncap: 4\n";
    e.dim = 4;
    e.hilbert = {1, 2, 1};
    e.edim = 2;
    e.socle = 2;
    e.graded = true;  // homogeneous relations of mixed degrees
    e.honest = true;
    e.betti_k = doubling_betti(8);
    e.ld_k_zero = false;
    e.s_value = 2;
    e.ci = false;
    e.mu = 3;
    e.cm_min_mult = false;  // e = 4 != 3
    e.golod = true;
    e.koszul = false;  // cubic minimal generator
    e.yoneda = YonedaKind::no_finite_generation_detected;
    e.koszul_homology = {1, 3, 2};
    e.poincare = {{{1}, {1, -2}}};  // attains the homology series bound
    e.sources = {
        {"betti_k", "series (1+t)^2/(1-3t^2-2t^3) = 1/(1-2t); hand syzygy check gives beta_2 = 4"},
        {"koszul_homology", "hand ranks: ker [x y] dim 5, boundary dim 2, socle dim 2"},
        {"s", "y^3 lies in the degree >= 3 slice but not in n*(x^2, xy, y^3); i = 2 works"},
    };
    out.push_back(std::move(e));
  }

  {
    CorpusEntry e;
    e.name = "G1";
    e.description = "non-graded complete intersection (x^2 - y^3, y^4)";
    e.spec_text =
        "field: 101\nvars: x, y\nrelations: x^2 - y^3; y^4\ntruncate: 4\ncap: 6\n";
    e.dim = 8;
    e.hilbert = {1, 2, 2, 2, 1};
    e.edim = 2;
    e.socle = 4;
    e.graded = false;
    e.honest = true;
    e.betti_k = linear_betti(8);
    e.ld_k_zero = false;
    e.s_value = 3;
    e.ci = true;
    e.mu = 2;
    e.ci_min_mult = false;  // e = 8 != 4
    e.cm_min_mult = false;
    e.golod = false;
    e.koszul = false;  // gr has a quartic minimal relation
    e.yoneda = YonedaKind::no_finite_generation_detected;
    e.koszul_homology = {1, 2, 1};
    e.poincare = {{{1}, {1, -2, 1}}};  // depends only on e = c = 2
    e.sources = {
        {"basis", "hand enumeration via x = t^3, y = t^2: classes of 1, t^2, t^3, ..., t^7, t^9"},
        {"hilbert", "orders of the t-power classes under the maximal-ideal filtration"},
        {"betti_k", "series (1+t)^2/(1-t^2)^2 = 1/(1-t)^2"},
        {"s", "y^4 escapes n*(x^2 - y^3, y^4) up to the degree >= 4 slice; i = 3 works"},
    };
    out.push_back(std::move(e));
  }

  return out;
}

}  // namespace

const std::vector<CorpusEntry>& corpus_entries() {
  static const std::vector<CorpusEntry> entries = build_entries();
  return entries;
}

const CorpusEntry& corpus_entry(const std::string& name) {
  for (const CorpusEntry& e : corpus_entries())
    if (e.name == name) return e;
  throw Error(Err::argument, "unknown corpus entry '" + name + "'");
}

std::string corpus_check(const CorpusEntry& e, int depth) {
  std::ostringstream bad;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) bad << "  " << e.name << ": " << what << "\n";
  };

  RingSpecFile spec = parse_ring_spec(e.spec_text);
  LocalAlgebra A = build_algebra(make_presentation(spec));

  expect(A.dim == e.dim, "dimension");
  expect(A.hilbert == e.hilbert, "hilbert series");
  expect(A.edim() == e.edim, "edim");
  expect(A.socle_degree() == e.socle, "socle degree");
  expect(A.graded == e.graded, "graded flag");
  expect(!A.truncation_forced == e.honest, "truncation honesty");

  MinimalResolution rk = resolve(A, residue_field_module(), depth);
  for (int i = 0; i <= depth && i < static_cast<int>(e.betti_k.size()); ++i)
    expect(rk.betti[i] == e.betti_k[i], "betti_" + std::to_string(i) + "(k)");

  LinHomologyTable lin = lin_homology(rk);
  NuTable nu = nu_table(rk, depth, A.truncation_degree());
  BoundedVerdict ld = linearity_defect(lin, &nu);
  if (e.ld_k_zero)
    expect(ld == BoundedVerdict{true, 0}, "ld(k) = 0");
  else
    expect(ld == BoundedVerdict{false, depth}, "ld(k) = at_least(depth)");

  BoundedVerdict s = s_invariant(A.pres, A.truncation_forced);
  expect(s == BoundedVerdict{true, e.s_value}, "s invariant");

  if (e.honest) {
    CiResult ci = is_complete_intersection(A);
    expect(ci.is_ci == e.ci, "complete intersection");
    expect(ci.mu == e.mu, "mu(a)");
    if (e.ci_min_mult)
      expect(minimal_multiplicity_ci(A, ci.codim) == *e.ci_min_mult, "ci minimal multiplicity");
  }
  expect(minimal_multiplicity_cm(A) == e.cm_min_mult, "cm minimal multiplicity");

  expect(golod_check(A, rk.betti, depth) == e.golod, "golod");
  expect(koszul_check(A, depth) == e.koszul, "koszul");
  expect(yoneda_report(nu, depth).kind == e.yoneda, "yoneda verdict");
  expect(koszul_complex_homology(A) == e.koszul_homology, "koszul complex homology");

  if (e.poincare) {
    auto series = expand_rational_series(e.poincare->first, e.poincare->second, depth);
    for (int i = 0; i <= depth; ++i)
      expect(series[i] == rk.betti[i], "poincare series coefficient " + std::to_string(i));
  }
  return bad.str();
}

}  // namespace lindef
