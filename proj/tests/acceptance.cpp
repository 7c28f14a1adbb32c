// Acceptance suite: runs every gate criterion at tolerance zero and prints
// one pass/fail line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "report.hpp"
#include "testutil.hpp"

using namespace lindef;

namespace {

struct Harness {
  int passed = 0;
  int failed = 0;

  void criterion(int num, const std::string& name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %2d. %s%s%s\n", ok ? "PASS" : "FAIL", num, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    ++(ok ? passed : failed);
  }
};

std::vector<LocalAlgebra> corpus_algebras() {
  return {testrings::K1(), testrings::H3(), testrings::T2(), testrings::K2(),
          testrings::X4(), testrings::M3(), testrings::G1()};
}

const char* corpus_names[] = {"K1", "H3", "T2", "K2", "X4", "M3", "G1"};

struct ModuleData {
  MinimalResolution res;
  LinHomologyTable lin;
  NuTable nu;
  BoundedVerdict ld;
};

ModuleData analyze_module(const LocalAlgebra& A, const FinModule& M, int depth) {
  ModuleData d{resolve(A, M, depth), {}, {}, {}};
  d.lin = lin_homology(d.res);
  d.nu = nu_table(d.res, depth, A.truncation_degree());
  d.ld = linearity_defect(d.lin, &d.nu);
  return d;
}

bool expect(std::string& detail, bool ok, const std::string& what) {
  if (!ok && detail.empty()) detail = what;
  return ok;
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  Harness h;

  h.criterion(1, "Betti numbers of k: beta_i = i+1 on K1, beta_i = 1 on H3 (depth 8)",
              [&](std::string& detail) {
                bool ok = true;
                LocalAlgebra K1 = testrings::K1();
                MinimalResolution rk = resolve(K1, residue_field_module(), 8);
                auto ci_series = expand_rational_series({1, 2, 1}, {1, 0, -2, 0, 1}, 8);
                for (int i = 0; i <= 8; ++i) {
                  ok &= expect(detail, rk.betti[i] == i + 1,
                               "K1 beta_" + std::to_string(i));
                  ok &= expect(detail, ci_series[i] == rk.betti[i],
                               "K1 series mismatch at " + std::to_string(i));
                }
                LocalAlgebra H3 = testrings::H3();
                MinimalResolution rh = resolve(H3, residue_field_module(), 8);
                auto hs_series = expand_rational_series({1, 1}, {1, 0, -1}, 8);
                for (int i = 0; i <= 8; ++i) {
                  ok &= expect(detail, rh.betti[i] == 1, "H3 beta_" + std::to_string(i));
                  ok &= expect(detail, hs_series[i] == 1,
                               "H3 series mismatch at " + std::to_string(i));
                }
                return ok;
              });

  h.criterion(
      2,
      "triple agreement of the two nu routes and the lin table, rows 1..6, "
      "modules k, m, R/m^2, all corpus rings",
      [&](std::string& detail) {
        bool ok = true;
        int ring_idx = 0;
        for (const LocalAlgebra& A : corpus_algebras()) {
          std::string rn = corpus_names[ring_idx++];
          std::vector<FinModule> mods{residue_field_module(), power_module(A, 1),
                                      quotient_power_module(A, 2)};
          for (const FinModule& M : mods) {
            // nu_table itself cross-checks the two nu algorithms cell by cell
            ModuleData d = analyze_module(A, M, 8);
            for (int i = 1; i <= 6; ++i)
              ok &= expect(detail, theorem_mu_crosscheck(d.lin, d.nu, i),
                           rn + " " + M.name + " row " + std::to_string(i));
          }
        }
        return ok;
      });

  h.criterion(3, "ld(k) = 0 on K1, K2, T2; at_least(8) on H3 and X4 (depth 8)",
              [&](std::string& detail) {
                bool ok = true;
                auto ld_of = [&](const LocalAlgebra& A) {
                  return analyze_module(A, residue_field_module(), 8).ld;
                };
                ok &= expect(detail, ld_of(testrings::K1()) == BoundedVerdict{true, 0}, "K1");
                ok &= expect(detail, ld_of(testrings::K2()) == BoundedVerdict{true, 0}, "K2");
                ok &= expect(detail, ld_of(testrings::T2()) == BoundedVerdict{true, 0}, "T2");
                ok &= expect(detail, ld_of(testrings::H3()) == BoundedVerdict{false, 8}, "H3");
                ok &= expect(detail, ld_of(testrings::X4()) == BoundedVerdict{false, 8}, "X4");
                return ok;
              });

  h.criterion(4, "s = 1 with nu^1_2 = 0 on K1, K2, T2; s = 2 on H3 and s = 3 on X4 with nu^1_2 != 0",
              [&](std::string& detail) {
                bool ok = true;
                struct Case {
                  LocalAlgebra A;
                  int s;
                  bool nu2_zero;
                  const char* name;
                };
                std::vector<Case> cases;
                cases.push_back({testrings::K1(), 1, true, "K1"});
                cases.push_back({testrings::K2(), 1, true, "K2"});
                cases.push_back({testrings::T2(), 1, true, "T2"});
                cases.push_back({testrings::H3(), 2, false, "H3"});
                cases.push_back({testrings::X4(), 3, false, "X4"});
                for (const Case& c : cases) {
                  BoundedVerdict s = s_invariant(c.A.pres, c.A.truncation_forced);
                  ok &= expect(detail, s == BoundedVerdict{true, c.s},
                               std::string(c.name) + " s = " + s.str());
                  ModuleData d = analyze_module(c.A, residue_field_module(), 8);
                  ok &= expect(detail, d.nu.zero(2, 1) == c.nu2_zero,
                               std::string(c.name) + " nu^1_2");
                }
                return ok;
              });

  h.criterion(5, "no corpus ring has nu^1_{2n} = 0 (2n <= 7) together with nu^1_2 != 0",
              [&](std::string& detail) {
                bool ok = true;
                int ring_idx = 0;
                for (const LocalAlgebra& A : corpus_algebras()) {
                  std::string rn = corpus_names[ring_idx++];
                  ModuleData d = analyze_module(A, residue_field_module(), 8);
                  bool even_zero = false;
                  for (int n = 1; 2 * n <= 7; ++n)
                    if (d.nu.zero(2 * n, 1)) even_zero = true;
                  ok &= expect(detail, !(even_zero && !d.nu.zero(2, 1)), rn);
                }
                return ok;
              });

  h.criterion(6, "ld(m^n) = 0 for all n up to the socle degree on K1, K2, T2 (depth 6)",
              [&](std::string& detail) {
                bool ok = true;
                const char* names[] = {"K1", "K2", "T2"};
                int idx = 0;
                for (LocalAlgebra A : {testrings::K1(), testrings::K2(), testrings::T2()}) {
                  std::string rn = names[idx++];
                  for (int n = 1; n <= A.socle_degree(); ++n) {
                    ModuleData d = analyze_module(A, power_module(A, n), 6);
                    ok &= expect(detail, d.ld == BoundedVerdict{true, 0},
                                 rn + " m^" + std::to_string(n) + " ld = " + d.ld.str());
                  }
                }
                return ok;
              });

  h.criterion(
      7, "complete intersections: multiplicity verdicts and the t = -1 series ratio",
      [&](std::string& detail) {
        bool ok = true;
        {
          LocalAlgebra K1 = testrings::K1();
          CiResult ci = is_complete_intersection(K1);
          ok &= expect(detail, ci.is_ci && ci.codim == 2, "K1 ci");
          ok &= expect(detail, K1.multiplicity() == 4 && minimal_multiplicity_ci(K1, 2),
                       "K1 e = 4 = 2^2");
          ok &= expect(detail,
                       analyze_module(K1, residue_field_module(), 8).ld ==
                           BoundedVerdict{true, 0},
                       "K1 ld");
          // 1/e(R) = A(-1)/B(-1) for P_k = 1/(1-t)^2: B(-1) = 4
          long long Bm1 = 1 - 2 * (-1) + 1;
          ok &= expect(detail, Bm1 == K1.multiplicity(), "K1 B(-1) = e");
        }
        {
          LocalAlgebra K2 = testrings::K2();
          CiResult ci = is_complete_intersection(K2);
          ok &= expect(detail, ci.is_ci && minimal_multiplicity_ci(K2, ci.codim),
                       "K2 ci minimal multiplicity");
          ok &= expect(detail,
                       analyze_module(K2, residue_field_module(), 8).ld ==
                           BoundedVerdict{true, 0},
                       "K2 ld");
        }
        {
          LocalAlgebra H3 = testrings::H3();
          CiResult ci = is_complete_intersection(H3);
          ok &= expect(detail, ci.is_ci && ci.codim == 1, "H3 ci");
          ok &= expect(detail, H3.multiplicity() == 3 && !minimal_multiplicity_ci(H3, 1),
                       "H3 e = 3 != 2");
          ok &= expect(detail,
                       analyze_module(H3, residue_field_module(), 8).ld ==
                           BoundedVerdict{false, 8},
                       "H3 ld");
        }
        {
          // T2 with P_k = 1/(1-2t): B(-1) = 3 = e(R)
          LocalAlgebra T2 = testrings::T2();
          long long Bm1 = 1 - 2 * (-1);
          ok &= expect(detail, Bm1 == T2.multiplicity(), "T2 B(-1) = e");
          MinimalResolution rt = resolve(T2, residue_field_module(), 8);
          auto series = expand_rational_series({1}, {1, -2}, 8);
          for (int i = 0; i <= 8; ++i)
            ok &= expect(detail, series[i] == rt.betti[i], "T2 series prefix");
        }
        return ok;
      });

  h.criterion(8, "golod on H3 and T2, not on K1; among golod rings ld(k) = 0 only with m^2 = 0",
              [&](std::string& detail) {
                bool ok = true;
                LocalAlgebra H3 = testrings::H3();
                MinimalResolution rh = resolve(H3, residue_field_module(), 8);
                ok &= expect(detail, golod_check(H3, rh.betti, 8), "H3 golod");
                LocalAlgebra T2 = testrings::T2();
                MinimalResolution rt = resolve(T2, residue_field_module(), 8);
                ok &= expect(detail, golod_check(T2, rt.betti, 8), "T2 golod");
                LocalAlgebra K1 = testrings::K1();
                MinimalResolution rk = resolve(K1, residue_field_module(), 8);
                ok &= expect(detail, !golod_check(K1, rk.betti, 8), "K1 not golod");

                int ring_idx = 0;
                for (const LocalAlgebra& A : corpus_algebras()) {
                  std::string rn = corpus_names[ring_idx++];
                  MinimalResolution res = resolve(A, residue_field_module(), 8);
                  if (!golod_check(A, res.betti, 8)) continue;
                  LinHomologyTable lin = lin_homology(res);
                  NuTable nu = nu_table(res, 8, A.truncation_degree());
                  bool ld_zero = linearity_defect(lin, &nu) == BoundedVerdict{true, 0};
                  ok &= expect(detail, ld_zero == (A.socle_degree() <= 1),
                               rn + " golod/defect consistency");
                  ok &= expect(detail, (rn == "T2") == ld_zero, rn + " only T2 has ld 0");
                }
                return ok;
              });

  h.criterion(9, "yoneda verdicts: equals_dual on K1, K2, T2; no finite generation on H3",
              [&](std::string& detail) {
                bool ok = true;
                for (LocalAlgebra A : {testrings::K1(), testrings::K2(), testrings::T2()}) {
                  ModuleData d = analyze_module(A, residue_field_module(), 8);
                  ok &= expect(detail, yoneda_report(d.nu, 8).kind == YonedaKind::equals_dual,
                               "equals_dual case");
                }
                LocalAlgebra H3 = testrings::H3();
                ModuleData d = analyze_module(H3, residue_field_module(), 8);
                YonedaVerdict v = yoneda_report(d.nu, 8);
                ok &= expect(detail, v.kind == YonedaKind::no_finite_generation_detected,
                             "H3 verdict");
                for (int i = 1; i <= 7; ++i)
                  ok &= expect(detail, d.nu.zero(i, 1) == (i % 2 == 1),
                               "H3 nu^1 pattern at i = " + std::to_string(i));
                return ok;
              });

  h.criterion(
      10, "property suites: rank-nullity x200, random monomial rings x20, betti invariance x10",
      [&](std::string& detail) {
        bool ok = true;
        // (a) rref/kernel rank-nullity on 200 random matrices
        {
          std::mt19937 rng(20240501);
          PrimeField f{101};
          for (int trial = 0; trial < 200; ++trial) {
            int r = 1 + static_cast<int>(rng() % 10);
            int c = 1 + static_cast<int>(rng() % 12);
            FpMatrix m = random_matrix(f, r, c, rng);
            RrefResult rr = rref(m);
            Subspace ker = kernel_basis(m);
            ok &= expect(detail, rr.rank + ker.dim() == c,
                         "rank-nullity at trial " + std::to_string(trial));
            for (int i = 0; i < ker.dim(); ++i) {
              auto img = m.apply(ker.basis.row(i));
              bool zero = std::all_of(img.begin(), img.end(),
                                      [](std::uint32_t x) { return x == 0; });
              ok &= expect(detail, zero, "kernel vector not in kernel");
            }
          }
        }
        // (b) d.d = 0 and minimality on 20 random Artinian monomial rings
        {
          std::mt19937 rng(777);
          for (int trial = 0; trial < 20; ++trial) {
            int nvars = 1 + static_cast<int>(rng() % 3);
            int N = 1 + static_cast<int>(rng() % 3);
            std::vector<std::string> vars;
            for (int v = 0; v < nvars; ++v) vars.push_back(std::string(1, char('x' + v)));
            std::vector<std::string> rels;
            for (int v = 0; v < nvars; ++v) {
              int e = 2 + static_cast<int>(rng() % N);
              rels.push_back(vars[v] + "^" + std::to_string(e));
            }
            for (int extra = static_cast<int>(rng() % 3); extra > 0; --extra) {
              int d = 2 + static_cast<int>(rng() % N);
              auto monos = monomials_of_degree(nvars, d);
              const Monomial& m = monos[rng() % monos.size()];
              rels.push_back(monomial_to_string(m, vars));
            }
            LocalAlgebra A = build_algebra(
                testrings::presentation(101, vars, rels, N, N + 2));
            MinimalResolution res = resolve(A, residue_field_module(), 4);
            for (int i = 1; i <= 4; ++i)
              ok &= expect(detail, res.map(i).entries_in_m(A),
                           "minimality at trial " + std::to_string(trial));
            for (int i = 1; i < 4; ++i) {
              FreeMap comp = freemap_compose(A, res.map(i), res.map(i + 1));
              for (const auto& col : comp.columns) {
                bool zero = std::all_of(col.begin(), col.end(),
                                        [](std::uint32_t x) { return x == 0; });
                ok &= expect(detail, zero, "d.d != 0 at trial " + std::to_string(trial));
              }
            }
          }
        }
        // (c) betti invariance under random generator changes, 10 trials per ring
        {
          std::mt19937 rng(31337);
          for (const LocalAlgebra& A : corpus_algebras()) {
            MinimalResolution base = resolve(A, residue_field_module(), 5);
            const FreeMap& d1 = base.map(1);
            for (int trial = 0; trial < 10; ++trial) {
              auto unit = [&](int n) {
                FpMatrix C = random_invertible(A.F, n, rng);
                FreeMap U;
                U.src_rank = U.dst_rank = n;
                for (int j = 0; j < n; ++j) {
                  std::vector<std::uint32_t> col(static_cast<size_t>(n) * A.dim, 0);
                  for (int i = 0; i < n; ++i) {
                    col[static_cast<size_t>(i) * A.dim] = C.at(i, j);
                    for (int t = 1; t < A.dim; ++t)
                      col[static_cast<size_t>(i) * A.dim + t] = rng() % A.F.p;
                  }
                  U.columns.push_back(std::move(col));
                }
                return U;
              };
              FreeMap twisted =
                  freemap_compose(A, unit(d1.dst_rank), freemap_compose(A, d1, unit(d1.src_rank)));
              MinimalResolution res = resolve(A, cokernel_module(twisted), 5);
              ok &= expect(detail, res.betti == base.betti, "betti changed under a unit twist");
            }
          }
        }
        return ok;
      });

  auto t1 = std::chrono::steady_clock::now();
  double secs = std::chrono::duration<double>(t1 - t0).count();
  std::printf("acceptance: %d/%d criteria passed (%.1fs)\n", h.passed, h.passed + h.failed,
              secs);
  return h.failed == 0 ? 0 : 1;
}
