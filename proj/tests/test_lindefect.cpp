#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lindefect.hpp"
#include "testutil.hpp"

using namespace lindef;

namespace {

MinimalResolution res_k(const LocalAlgebra& A, int depth) {
  return resolve(A, residue_field_module(), depth);
}

std::vector<LocalAlgebra> corpus_algebras() {
  return {testrings::K1(), testrings::H3(), testrings::T2(), testrings::K2(),
          testrings::X4(), testrings::M3(), testrings::G1()};
}

}  // namespace

TEST_CASE("lin homology vanishes in positive rows for a Koszul ring") {
  LocalAlgebra K = testrings::K1();
  MinimalResolution res = res_k(K, 6);
  LinHomologyTable t = lin_homology(res);
  for (int j = 1; j <= 5; ++j) CHECK(t.row_zero(j));
  // row 0 carries gr k = k
  CHECK(t.h[0][0] == 1);
  CHECK(t.h[0][1] == 0);
}

TEST_CASE("lin homology detects the quadratic differential of the cubic hypersurface") {
  LocalAlgebra H = testrings::H3();
  MinimalResolution res = res_k(H, 6);
  LinHomologyTable t = lin_homology(res);
  CHECK(t.h[2][0] == 1);
  CHECK_FALSE(t.row_zero(2));
  // beyond the socle the filtration is exhausted
  CHECK(H.filtration(H.truncation_degree() + 1).dim() == 0);
  CHECK(t.smax == H.truncation_degree());
}

TEST_CASE("full lin table of the cubic hypersurface matches the hand computation") {
  // differentials alternate (x) and (x^2); multiplication by x is an iso
  // m^a/m^(a+1) -> m^(a+1)/m^(a+2) for a <= 1 and zero at a = 2, while
  // multiplication by x^2 induces zero on every slice. Chasing the three-term
  // complexes gives rows (1,0,0), (0,0,1), (1,0,0), (0,0,1), ...
  LocalAlgebra H = testrings::H3();
  MinimalResolution res = res_k(H, 5);
  LinHomologyTable t = lin_homology(res);
  for (int j = 0; j <= 4; ++j) {
    if (j % 2 == 0)
      CHECK(t.h[j] == std::vector<int>{1, 0, 0});
    else
      CHECK(t.h[j] == std::vector<int>{0, 0, 1});
  }
}

TEST_CASE("row zero of the lin table carries the associated graded module") {
  // for m over (x^2, y^2): dim M/mM = 2, dim mM/m^2M = dim m^2/m^3 = 1
  LocalAlgebra K = testrings::K1();
  MinimalResolution rm = resolve(K, power_module(K, 1), 4);
  LinHomologyTable tm = lin_homology(rm);
  CHECK(tm.h[0] == std::vector<int>{2, 1, 0});
  // and for k itself it is one-dimensional in degree zero
  LinHomologyTable tk = lin_homology(res_k(K, 4));
  CHECK(tk.h[0] == std::vector<int>{1, 0, 0});
}

TEST_CASE("the quotient by m^2 over a Koszul ring has defect exactly one") {
  // presentation (xy) has order two, so the first lin row sees a class at
  // offset zero; everything above it is clean
  LocalAlgebra K = testrings::K1();
  MinimalResolution res = resolve(K, quotient_power_module(K, 2), 6);
  LinHomologyTable lin = lin_homology(res);
  CHECK(lin.h[1][0] == 1);
  NuTable nu = nu_table(res, 6, K.truncation_degree());
  CHECK(nu.rank[0][0] == 1);  // nu^1_1 has rank one
  CHECK(nu.rank[0][1] == 0);
  for (int i = 2; i <= nu.imax; ++i) CHECK(nu.row_zero(i));
  CHECK(linearity_defect(lin, &nu) == BoundedVerdict{true, 1});
}

TEST_CASE("linearity defect verdicts") {
  LocalAlgebra K = testrings::K1();
  MinimalResolution rk = res_k(K, 6);
  LinHomologyTable lk = lin_homology(rk);
  NuTable nk = nu_table(rk, 6, K.truncation_degree());
  CHECK(linearity_defect(lk, &nk) == BoundedVerdict{true, 0});

  LocalAlgebra H = testrings::H3();
  MinimalResolution rh = res_k(H, 6);
  LinHomologyTable lh = lin_homology(rh);
  NuTable nh = nu_table(rh, 6, H.truncation_degree());
  CHECK(linearity_defect(lh, &nh) == BoundedVerdict{false, 6});

  // free module
  LocalAlgebra T = testrings::T2();
  MinimalResolution rf = resolve(T, quotient_power_module(T, 2), 6);
  LinHomologyTable lf = lin_homology(rf);
  NuTable nf = nu_table(rf, 6, T.truncation_degree());
  CHECK(linearity_defect(lf, &nf) == BoundedVerdict{true, 0});
  for (int j = 1; j <= 5; ++j) CHECK(lf.row_zero(j));
  // row 0 carries gr of the module itself, here gr R
  CHECK_FALSE(lf.row_zero(0));
}

TEST_CASE("nu vanishing: first homological degree always vanishes") {
  for (const LocalAlgebra& A : corpus_algebras()) {
    MinimalResolution res = res_k(A, 4);
    for (int n = 1; n <= A.truncation_degree(); ++n) {
      auto [zero, rank] = nu_vanishes_homology(res, 1, n);
      CHECK(zero);
      CHECK(rank == 0);
      CHECK(nu_vanishes_cycle_criterion(res, 1, n));
    }
  }
}

TEST_CASE("degree-1 nu vanishing is special to the residue field") {
  // over (x^2, y^2), the quotient by m^2 is presented by (xy): the generator
  // maps into m^2 F_0 but m F_1 maps into m^3 = 0, so nu^1_1 cannot vanish
  LocalAlgebra K = testrings::K1();
  MinimalResolution res = resolve(K, quotient_power_module(K, 2), 4);
  auto [zero, rank] = nu_vanishes_homology(res, 1, 1);
  CHECK_FALSE(zero);
  CHECK(rank == 1);
  CHECK_FALSE(nu_vanishes_cycle_criterion(res, 1, 1));
  // the row-by-row biconditional still holds
  LinHomologyTable lin = lin_homology(res);
  NuTable nu = nu_table(res, 4, K.truncation_degree());
  for (int i = 1; i <= 2; ++i) CHECK(theorem_mu_crosscheck(lin, nu, i));
}

TEST_CASE("nu vanishing at degree 2, level 1 separates the two quadratic cases") {
  LocalAlgebra H = testrings::H3();
  MinimalResolution rh = res_k(H, 4);
  auto [zeroH, rankH] = nu_vanishes_homology(rh, 2, 1);
  CHECK_FALSE(zeroH);
  CHECK(rankH > 0);
  CHECK_FALSE(nu_vanishes_cycle_criterion(rh, 2, 1));

  LocalAlgebra K = testrings::K1();
  MinimalResolution rk = res_k(K, 4);
  auto [zeroK, rankK] = nu_vanishes_homology(rk, 2, 1);
  CHECK(zeroK);
  CHECK(rankK == 0);
  CHECK(nu_vanishes_cycle_criterion(rk, 2, 1));
}

TEST_CASE("nu degenerates above the truncation degree") {
  LocalAlgebra H = testrings::H3();
  MinimalResolution res = res_k(H, 4);
  for (int i = 1; i <= 3; ++i) {
    auto [zero, rank] = nu_vanishes_homology(res, i, H.truncation_degree() + 1);
    CHECK(zero);
    CHECK(rank == 0);
    CHECK(nu_vanishes_cycle_criterion(res, i, H.truncation_degree() + 1));
  }
}

TEST_CASE("nu tables on the named rings") {
  LocalAlgebra K = testrings::K1();
  MinimalResolution rk = res_k(K, 8);
  NuTable tk = nu_table(rk, 8, K.truncation_degree());
  for (int i = 1; i <= tk.imax; ++i)
    for (int n = 1; n <= tk.nmax; ++n) CHECK(tk.zero(i, n));

  LocalAlgebra H = testrings::H3();
  MinimalResolution rh = res_k(H, 8);
  NuTable th = nu_table(rh, 8, H.truncation_degree());
  for (int i = 1; i <= th.imax; ++i)
    CHECK(th.zero(i, 1) == (i % 2 == 1));  // nonzero exactly at even rows
}

TEST_CASE("row one of the nu table is zero on every corpus ring") {
  for (const LocalAlgebra& A : corpus_algebras()) {
    MinimalResolution res = res_k(A, 4);
    NuTable t = nu_table(res, 4, A.truncation_degree());
    CHECK(t.row_zero(1));
  }
}

TEST_CASE("lin homology and nu rows agree row by row") {
  for (const LocalAlgebra& A : corpus_algebras()) {
    MinimalResolution res = res_k(A, 6);
    LinHomologyTable lin = lin_homology(res);
    NuTable nu = nu_table(res, 6, A.truncation_degree());
    for (int i = 1; i <= 4; ++i) CHECK(theorem_mu_crosscheck(lin, nu, i));
  }

  // the biconditional holds with both sides false on the cubic hypersurface
  LocalAlgebra H = testrings::H3();
  MinimalResolution rh = res_k(H, 6);
  LinHomologyTable lin = lin_homology(rh);
  NuTable nu = nu_table(rh, 6, H.truncation_degree());
  CHECK_FALSE(lin.row_zero(2));
  CHECK_FALSE(nu.row_zero(2));
  CHECK(theorem_mu_crosscheck(lin, nu, 2));
}

TEST_CASE("power modules of Koszul rings stay at defect zero") {
  for (LocalAlgebra A : {testrings::K1(), testrings::K2(), testrings::T2()}) {
    for (int n = 1; n <= A.socle_degree(); ++n) {
      MinimalResolution res = resolve(A, power_module(A, n), 6);
      LinHomologyTable lin = lin_homology(res);
      NuTable nu = nu_table(res, 6, A.truncation_degree());
      CHECK(linearity_defect(lin, &nu) == BoundedVerdict{true, 0});
    }
  }
}
