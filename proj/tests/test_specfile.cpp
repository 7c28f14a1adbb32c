#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include "report.hpp"
#include "testutil.hpp"

using namespace lindef;

namespace {

const char* kK1Spec =
    "field: 101\n"
    "vars: x, y\n"
    "relations: x^2; y^2\n"
    "truncate: 2\n"
    "cap: 4\n";

}  // namespace

TEST_CASE("parsing a complete spec") {
  RingSpecFile spec = parse_ring_spec(kK1Spec);
  CHECK(spec.p == 101);
  CHECK(spec.vars == std::vector<std::string>{"x", "y"});
  CHECK(spec.relation_texts.size() == 2);
  CHECK_FALSE(spec.truncate_auto);
  CHECK(spec.truncate == 2);
  CHECK(spec.depth == 8);
}

TEST_CASE("spec error paths carry distinct codes") {
  try {
    (void)parse_ring_spec("field: 10\nvars: x\nrelations: x^2\n");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Err::field);
  }
  try {
    (void)parse_ring_spec("field: 101\nvars: x, y\nrelations: x + y\n");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Err::relation_order);
  }
  try {
    (void)parse_ring_spec("field: 101\nvars: x\nrelations: x^2 + q\n");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Err::parse);
  }
  CHECK_THROWS_AS((void)parse_ring_spec("vars: x\nrelations: x^2\n"), ParseError);
  CHECK_THROWS_AS((void)parse_ring_spec("field: 101\nvars: x\nrelations: x^2\nnope: 3\n"),
                  ParseError);
}

TEST_CASE("auto truncation detects the socle bound") {
  RingSpecFile spec = parse_ring_spec(
      "field: 101\nvars: x, y\nrelations: x^2; y^2\ntruncate: auto\ncap: auto\n");
  AlgebraPresentation pres = make_presentation(spec);
  CHECK(pres.truncation_degree == 2);
  CHECK(pres.cap == 4);

  // the binomial ideal needs deep certificates: full products only
  RingSpecFile g1 = parse_ring_spec(
      "field: 101\nvars: x, y\nrelations: x^2 - y^3; y^4\ntruncate: auto\ncap: auto\n");
  AlgebraPresentation pg = make_presentation(g1);
  CHECK(pg.truncation_degree == 4);
  CHECK(pg.cap == 6);
}

TEST_CASE("auto truncation refuses a non-Artinian quotient") {
  RingSpecFile spec = parse_ring_spec(
      "field: 101\nvars: x, y\nrelations: x^2\ntruncate: auto\ncap: auto\n");
  CHECK_THROWS_AS((void)make_presentation(spec), Error);
}

TEST_CASE("explicit cap is validated") {
  RingSpecFile spec = parse_ring_spec(
      "field: 101\nvars: x, y\nrelations: x^2; y^2\ntruncate: 2\ncap: 3\n");
  CHECK_THROWS_AS((void)make_presentation(spec), Error);
}

TEST_CASE("analysis report of the quadratic complete intersection") {
  RingSpecFile spec = parse_ring_spec(kK1Spec);
  AnalyzeOptions opts;
  opts.depth = 6;
  RingReport r = analyze(spec, opts);
  CHECK(r.dim == 4);
  CHECK(r.s == BoundedVerdict{true, 1});
  REQUIRE(r.koszul_up_to.has_value());
  CHECK(*r.koszul_up_to);
  REQUIRE(r.ci.has_value());
  CHECK(r.ci->is_ci);
  CHECK(r.ci_min_mult.value_or(false));
  CHECK_FALSE(r.golod_up_to.value_or(true));
  REQUIRE(r.module("k"));
  CHECK(r.module("k")->ld == BoundedVerdict{true, 0});
  CHECK(r.regularity_lb.value_or(-1) == 0);
  CHECK(r.checks_clean());
  for (const CheckResult& c : r.checks) CHECK(c.status == "pass");
}

TEST_CASE("powers option analyzes quotients and powers") {
  RingSpecFile spec = parse_ring_spec(kK1Spec);
  AnalyzeOptions opts;
  opts.depth = 6;
  opts.powers = true;
  RingReport r = analyze(spec, opts);
  REQUIRE(r.module("m"));
  REQUIRE(r.module("m^2"));
  REQUIRE(r.module("R/m^2"));
  CHECK(r.module("m")->ld == BoundedVerdict{true, 0});
  CHECK(r.module("m^2")->ld == BoundedVerdict{true, 0});
  CHECK(r.checks_clean());
}

TEST_CASE("identical runs emit identical JSON bytes") {
  RingSpecFile spec = parse_ring_spec(kK1Spec);
  AnalyzeOptions opts;
  opts.depth = 5;
  opts.powers = true;
  std::string a = emit(analyze(spec, opts), ReportFormat::json);
  std::string b = emit(analyze(spec, opts), ReportFormat::json);
  CHECK(a == b);
}

TEST_CASE("the JSON report parses back and keeps the schema keys") {
  RingSpecFile spec = parse_ring_spec(kK1Spec);
  AnalyzeOptions opts;
  opts.depth = 5;
  RingReport r = analyze(spec, opts);
  nlohmann::json j = nlohmann::json::parse(emit(r, ReportFormat::json));
  for (const char* key : {"spec", "algebra", "resolutions", "lin_homology", "nu",
                          "verdicts", "checks", "timing_ms"})
    CHECK(j.contains(key));
  CHECK(j["algebra"]["dim"] == 4);
  CHECK(j["algebra"]["hilbert"] == nlohmann::json({1, 2, 1}));
  CHECK(j["verdicts"]["s"] == 1);
  CHECK(j["verdicts"]["yoneda"] == "equals_dual");
  CHECK(j["resolutions"]["k"]["betti"] == nlohmann::json({1, 2, 3, 4, 5, 6}));
  CHECK(j["lin_homology"]["k"]["ld"] == "0");
  CHECK(j["timing_ms"] == 0);  // deterministic by default
}

TEST_CASE("table rendering carries the main sections") {
  RingSpecFile spec = parse_ring_spec(kK1Spec);
  AnalyzeOptions opts;
  opts.depth = 5;
  RingReport r = analyze(spec, opts);
  std::string t = emit(r, ReportFormat::table);
  CHECK(t.find("ring: F_101[x,y] / (x^2; y^2)") != std::string::npos);
  CHECK(t.find("module k:") != std::string::npos);
  CHECK(t.find("nu table") != std::string::npos);
  CHECK(t.find("verdicts:") != std::string::npos);
  CHECK(t.find("checks:") != std::string::npos);
  std::string grid = render_nu_grid(r, "k");
  CHECK(grid.find("n=1") != std::string::npos);
}

TEST_CASE("user cokernel modules come in through matrix files") {
  RingSpecFile spec = parse_ring_spec(kK1Spec);
  LocalAlgebra A = build_algebra(make_presentation(spec));

  // coker [x y] = k, via a 1 x 2 presentation row
  FreeMap f = parse_module_matrix("x; y\n", A);
  CHECK(f.dst_rank == 1);
  CHECK(f.src_rank == 2);
  MinimalResolution res = resolve(A, cokernel_module(f), 5);
  MinimalResolution rk = resolve(A, residue_field_module(), 5);
  CHECK(res.betti == rk.betti);

  AnalyzeOptions opts;
  opts.depth = 5;
  opts.module_text = "x; y\n";
  RingReport r = analyze(spec, opts);
  REQUIRE(r.module("user"));
  CHECK(r.module("user")->betti == rk.betti);
  CHECK(r.module("user")->ld == BoundedVerdict{true, 0});

  CHECK_THROWS_AS((void)parse_module_matrix("x; y\nx\n", A), ParseError);
  CHECK_THROWS_AS((void)parse_module_matrix("", A), ParseError);
}

TEST_CASE("a non-minimal user presentation is minimized before resolving") {
  RingSpecFile spec = parse_ring_spec(kK1Spec);
  LocalAlgebra A = build_algebra(make_presentation(spec));
  // [1] presents the zero module
  FreeMap unit = parse_module_matrix("1\n", A);
  MinimalResolution res = resolve(A, cokernel_module(unit), 3);
  CHECK(res.betti == std::vector<int>{0, 0, 0, 0});
  // [x y; 0 1]: the second generator is redundant, coker = R/(x)... reduced
  FreeMap red = parse_module_matrix("x; y\n0; 1\n", A);
  MinimalResolution r2 = resolve(A, cokernel_module(red), 3);
  CHECK(r2.betti[0] == 1);
}
