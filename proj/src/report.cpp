#include "report.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

namespace lindef {

bool RingReport::checks_clean() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.status == "pass"; });
}

const ModuleReport* RingReport::module(const std::string& name) const {
  for (const ModuleReport& m : modules)
    if (m.name == name) return &m;
  return nullptr;
}

namespace {

ModuleReport analyze_module(const LocalAlgebra& A, const FinModule& M, int depth,
                            const ResolveOptions& ropts) {
  ModuleReport out;
  out.name = M.name;
  MinimalResolution res = resolve(A, M, depth, ropts);
  out.betti = res.betti;
  out.graded = res.graded;
  if (res.graded) out.gbetti = graded_betti(res);
  out.lin = lin_homology(res);
  out.nu = nu_table(res, depth, A.truncation_degree());
  out.ld = linearity_defect(out.lin, &out.nu);
  return out;
}

void run_checks(RingReport& r, const LocalAlgebra& A) {
  auto add = [&](std::string name, bool applicable, bool ok, std::string detail,
                 bool advisory = false) {
    if (!applicable) return;
    CheckResult c;
    c.name = std::move(name);
    c.status = ok ? "pass" : (advisory ? "advisory" : "fail");
    c.detail = std::move(detail);
    r.checks.push_back(std::move(c));
  };

  const ModuleReport* k = r.module("k");

  // the two nu routes agreed on every cell of every table (a disagreement
  // would have aborted the analysis)
  add("nu_cross_check", !r.modules.empty(), true,
      "homology and cycle-criterion routes agree on every table cell");

  // the degree-1 vanishing is a statement about the residue field: its first
  // syzygy is m itself, so every almost-cycle in F_1 can be corrected by a
  // combination of the generators (this fails for general modules)
  add("nu_row_one", k && k->nu.imax >= 1, k && k->nu.row_zero(1),
      "nu of the residue field vanishes in homological degree 1");

  {
    bool ok = true;
    std::string where;
    for (const ModuleReport& m : r.modules) {
      for (int i = 1; i <= std::min(m.lin.depth - 1, m.nu.imax - 1); ++i) {
        if (!theorem_mu_crosscheck(m.lin, m.nu, i)) {
          ok = false;
          where = m.name + " row " + std::to_string(i);
          break;
        }
      }
      if (!ok) break;
    }
    add("theorem_mu", !r.modules.empty(), ok,
        ok ? "lin-homology rows and nu rows agree on vanishing for every module"
           : "biconditional fails at " + where);
  }

  if (k && k->nu.imax >= 2) {
    bool even_zero = false;
    for (int n = 1; 2 * n <= k->nu.imax; ++n)
      if (k->nu.zero(2 * n, 1)) even_zero = true;
    bool ok = !(even_zero && !k->nu.zero(2, 1));
    add("nu_even_vanishing", true, ok,
        ok ? "no even-degree vanishing of nu^1 without vanishing at degree 2"
           : "nu^1 vanishes at an even degree but not at degree 2");
  }

  if (k && k->nu.imax >= 2 && r.s.definite) {
    bool ok = k->nu.zero(2, 1) == (r.s.value == 1);
    add("lemma_s", true, ok,
        "nu^1_2 = " + std::string(k->nu.zero(2, 1) ? "0" : "nonzero") +
            ", s = " + r.s.str() + (ok ? "" : " (biconditional fails)"));
  }

  if (k) {
    bool any_power = false, ok = true;
    std::string detail;
    if (k->ld.definite) {
      for (const ModuleReport& m : r.modules) {
        if (m.name == "m" || m.name.rfind("m^", 0) == 0) {
          any_power = true;
          if (!m.ld.definite || m.ld.value > k->ld.value) {
            ok = false;
            detail = "ld(" + m.name + ") = " + m.ld.str() + " exceeds ld(k) = " + k->ld.str();
          }
        }
      }
      add("ld_power_bound", any_power, ok,
          ok ? "ld of every analyzed power stays within ld(k) = " + k->ld.str() : detail);
    }
  }

  if (k && r.ci && r.ci->is_ci) {
    bool minmult = r.ci_min_mult.value_or(false);
    bool ld_zero = k->ld == BoundedVerdict{true, 0};
    bool ok = (ld_zero == minmult) && (minmult || !k->ld.definite);
    add("theorem_ci", true, ok,
        "complete intersection with e = " + std::to_string(r.dim) + ", 2^codim = " +
            std::to_string(1 << r.ci->codim) +
            (ok ? ": defect verdict matches the multiplicity test"
                : ": defect verdict contradicts the multiplicity test"));
  }

  if (k && r.koszul_up_to.value_or(false)) {
    std::vector<long long> den(r.hilbert.size());
    for (size_t s = 0; s < r.hilbert.size(); ++s)
      den[s] = (s % 2 == 0) ? r.hilbert[s] : -r.hilbert[s];
    std::vector<long long> series = expand_rational_series({1}, den, r.depth);
    bool ok = true;
    for (int i = 0; i <= r.depth; ++i)
      if (series[i] != k->betti[i]) ok = false;
    add("koszul_poincare", true, ok,
        ok ? "betti numbers of k match the inverse alternating Hilbert series"
           : "betti numbers of k deviate from the inverse alternating Hilbert series");
  }

  if (k && r.golod_up_to.value_or(false)) {
    bool ld_zero = k->ld == BoundedVerdict{true, 0};
    bool square_zero = r.socle <= 1;
    add("theorem_golod", true, ld_zero == square_zero,
        "golod ring: ld(k) = " + k->ld.str() + ", m^2 " +
            (square_zero ? "= 0" : "!= 0"));
  }

  if (r.socle <= 2) {
    bool any_finite = false;
    for (const ModuleReport& m : r.modules)
      if (m.ld.definite) any_finite = true;
    bool ok = !any_finite || r.koszul_up_to.value_or(false);
    add("radical_cube", true, ok,
        any_finite ? (ok ? "m^3 = 0 and a finite-defect module exists: gr is Koszul"
                         : "m^3 = 0 with a finite-defect module but gr is not Koszul")
                   : "m^3 = 0 and no module with definite defect in range (vacuous)");
  }

  if (k && r.socle >= 2 && k->nu.imax >= 4) {
    int col = r.socle - 1;  // m^(socle+1) = 0
    if (col >= 1 && col <= k->nu.nmax) {
      int top = k->nu.imax;
      bool tail_zero = true;
      for (int i = (top + 2) / 2; i <= top; ++i)
        if (!k->nu.zero(i, col)) tail_zero = false;
      if (tail_zero) {
        bool all_zero = true;
        for (int i = 2; i <= top; ++i)
          if (!k->nu.zero(i, col)) all_zero = false;
        add("artinian_tail", true, all_zero,
            all_zero ? "vanishing tail of nu^" + std::to_string(col) +
                           " extends to all rows in range"
                     : "nu^" + std::to_string(col) +
                           " vanishes in the top half but not everywhere (finite-depth evidence "
                           "only)",
            /*advisory=*/true);
      }
    }
  }

  {
    LocalAlgebra gr = associated_graded(A);
    bool ok = gr.dim == r.dim && gr.hilbert == r.hilbert;
    add("gr_consistency", true, ok,
        ok ? "associated graded ring preserves length and Hilbert series"
           : "associated graded ring changes length or Hilbert series");
  }
}

}  // namespace

RingReport analyze(const RingSpecFile& spec, const AnalyzeOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  RingReport r;
  r.spec = spec;
  r.depth = opts.depth > 0 ? opts.depth : spec.depth;

  AlgebraPresentation pres = make_presentation(spec);
  LocalAlgebra A = build_algebra(pres);
  r.truncate = pres.truncation_degree;
  r.cap = pres.cap;
  r.dim = A.dim;
  r.edim = A.edim();
  r.socle = A.socle_degree();
  r.hilbert = A.hilbert;
  r.graded = A.graded;
  r.truncation_forced = A.truncation_forced;

  ResolveOptions ropts;
  ropts.max_entries = opts.max_entries;

  std::vector<FinModule> todo;
  todo.push_back(residue_field_module());
  if (opts.powers) {
    for (int n = 2; n <= r.socle; ++n) todo.push_back(quotient_power_module(A, n));
    for (int n = 1; n <= r.socle; ++n) todo.push_back(power_module(A, n));
  }
  if (opts.module_text)
    todo.push_back(cokernel_module(parse_module_matrix(*opts.module_text, A), "user"));

  for (const FinModule& M : todo) {
    try {
      r.modules.push_back(analyze_module(A, M, r.depth, ropts));
    } catch (const Error& e) {
      if (e.code == Err::resource_limit) {
        r.incomplete = true;
        r.incomplete_reason = e.what();
        break;
      }
      throw;
    }
  }

  r.s = s_invariant(A.pres, A.truncation_forced);
  try {
    r.koszul_up_to = koszul_check(A, r.depth, ropts);
  } catch (const Error& e) {
    if (e.code != Err::resource_limit) throw;
    r.incomplete = true;
    r.incomplete_reason = e.what();
  }
  try {
    CiResult ci = is_complete_intersection(A);
    r.ci = ci;
    if (ci.is_ci) r.ci_min_mult = minimal_multiplicity_ci(A, ci.codim);
  } catch (const Error& e) {
    if (e.code != Err::truncation_forced) throw;
  }
  r.cm_min_mult = minimal_multiplicity_cm(A);
  r.koszul_homology = koszul_complex_homology(A);

  const ModuleReport* k = r.module("k");
  if (k) {
    r.golod_up_to = golod_check(A, k->betti, r.depth);
    r.yoneda = yoneda_report(k->nu, r.depth);
    if (k->graded) {
      int reg = 0;
      for (const auto& [ij, c] : k->gbetti) reg = std::max(reg, ij.second - ij.first);
      r.regularity_lb = reg;
    }
  }

  run_checks(r, A);

  auto t1 = std::chrono::steady_clock::now();
  r.timing_ms =
      opts.include_timing
          ? std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
          : 0;
  return r;
}

// ---------------------------------------------------------------------------
// emitters

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json verdict_json(const BoundedVerdict& v) {
  if (v.definite) return v.value;
  return v.str();
}

std::string ring_header(const RingReport& r) {
  std::string rel;
  for (size_t i = 0; i < r.spec.relation_texts.size(); ++i) {
    if (i) rel += "; ";
    rel += r.spec.relation_texts[i];
  }
  std::string vars;
  for (size_t i = 0; i < r.spec.vars.size(); ++i) {
    if (i) vars += ",";
    vars += r.spec.vars[i];
  }
  return "F_" + std::to_string(r.spec.p) + "[" + vars + "] / (" + rel + ")";
}

void emit_grid(std::ostringstream& out, const std::vector<std::vector<int>>& rows,
               int first_row_label, const std::string& row_prefix,
               const std::string& col_prefix, int first_col_label) {
  if (rows.empty()) return;
  size_t cols = rows[0].size();
  out << "      ";
  for (size_t nn = 0; nn < cols; ++nn)
    out << " " << col_prefix << "=" << (first_col_label + static_cast<int>(nn));
  out << "\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    std::string label = row_prefix + "=" + std::to_string(first_row_label + static_cast<int>(i));
    out << "  " << label << std::string(label.size() < 4 ? 4 - label.size() : 0, ' ');
    for (size_t nn = 0; nn < cols; ++nn) {
      std::string cell = rows[i][nn] == 0 ? "0" : "•";
      out << "   " << cell;
    }
    out << "\n";
  }
}

}  // namespace

std::string emit(const RingReport& r, ReportFormat format) {
  if (format == ReportFormat::table) {
    std::ostringstream out;
    out << "ring: " << ring_header(r) << "\n";
    out << "      truncate " << r.truncate << ", cap " << r.cap << ", depth " << r.depth
        << "\n";
    out << "algebra: dim " << r.dim << ", edim " << r.edim << ", socle degree " << r.socle
        << ", " << (r.graded ? "graded" : "local") << ", truncation "
        << (r.truncation_forced ? "forced" : "honest") << "\n";
    out << "hilbert:";
    for (int h : r.hilbert) out << " " << h;
    out << "\n";
    out << "koszul complex homology:";
    for (int h : r.koszul_homology) out << " " << h;
    out << "\n";
    if (r.incomplete) out << "INCOMPLETE: " << r.incomplete_reason << "\n";

    for (const ModuleReport& m : r.modules) {
      out << "\nmodule " << m.name << ":\n";
      out << "  betti:";
      for (int b : m.betti) out << " " << b;
      out << "\n";
      if (m.graded) {
        out << "  graded betti (i, j, count):";
        for (const auto& [ij, c] : m.gbetti)
          out << " (" << ij.first << "," << ij.second << "," << c << ")";
        out << "\n";
      }
      out << "  ld: " << m.ld.str() << "\n";
      out << "  nu table (0 = vanishes; columns clamped at n = " << m.nu.nmax
          << " where m^(n+1) stabilizes; ranks in the JSON report):\n";
      emit_grid(out, m.nu.rank, 1, "i", "n", 1);
      out << "  lin homology (rows j >= 0, cols s >= 0):\n";
      emit_grid(out, m.lin.h, 0, "j", "s", 0);
    }

    out << "\nverdicts:\n";
    out << "  s:             " << r.s.str() << " (cap " << r.cap << ")\n";
    out << "  koszul_up_to:  "
        << (r.koszul_up_to ? (*r.koszul_up_to ? "yes" : "no") : "n/a") << " (depth " << r.depth
        << ")\n";
    out << "  ci:            " << (r.ci ? (r.ci->is_ci ? "yes" : "no") : "undecidable")
        << (r.ci ? " (mu = " + std::to_string(r.ci->mu) + ")" : "") << "\n";
    out << "  ci_min_mult:   " << (r.ci_min_mult ? (*r.ci_min_mult ? "yes" : "no") : "n/a")
        << "\n";
    out << "  cm_min_mult:   " << (r.cm_min_mult ? "yes" : "no") << "\n";
    out << "  golod_up_to:   "
        << (r.golod_up_to ? (*r.golod_up_to ? "yes" : "no") : "n/a") << " (depth " << r.depth
        << ")\n";
    out << "  yoneda:        " << (r.yoneda ? r.yoneda->str() : "n/a")
        << (r.yoneda ? " (edge margin " + std::to_string(r.yoneda->margin) + ")" : "")
        << "\n";
    out << "  regularity_lb: "
        << (r.regularity_lb ? std::to_string(*r.regularity_lb) : "n/a") << "\n";

    out << "\nchecks:\n";
    for (const CheckResult& c : r.checks)
      out << "  [" << c.status << "] " << c.name << ": " << c.detail << "\n";
    out << "\ntiming: " << r.timing_ms << " ms\n";
    return out.str();
  }

  ordered_json j;
  j["spec"] = {{"field", r.spec.p},
               {"vars", r.spec.vars},
               {"relations", r.spec.relation_texts},
               {"truncate", r.truncate},
               {"cap", r.cap},
               {"depth", r.depth}};
  j["algebra"] = {{"dim", r.dim},
                  {"edim", r.edim},
                  {"socle_degree", r.socle},
                  {"hilbert", r.hilbert},
                  {"graded", r.graded},
                  {"truncation_forced", r.truncation_forced}};
  ordered_json res = ordered_json::object();
  ordered_json linj = ordered_json::object();
  ordered_json nuj = ordered_json::object();
  for (const ModuleReport& m : r.modules) {
    ordered_json mr;
    mr["betti"] = m.betti;
    if (m.graded) {
      ordered_json gb = ordered_json::object();
      for (const auto& [ij, c] : m.gbetti)
        gb[std::to_string(ij.first) + "," + std::to_string(ij.second)] = c;
      mr["graded_betti"] = gb;
    }
    res[m.name] = mr;
    linj[m.name] = {{"h", m.lin.h}, {"ld", m.ld.str()}};
    nuj[m.name] = {{"rank", m.nu.rank}};
  }
  j["resolutions"] = res;
  j["lin_homology"] = linj;
  j["nu"] = nuj;
  ordered_json v;
  v["s"] = verdict_json(r.s);
  v["koszul_up_to"] = r.koszul_up_to ? ordered_json(*r.koszul_up_to) : ordered_json(nullptr);
  v["ci"] = r.ci ? ordered_json(r.ci->is_ci) : ordered_json(nullptr);
  v["ci_min_mult"] = r.ci_min_mult ? ordered_json(*r.ci_min_mult) : ordered_json(nullptr);
  v["cm_min_mult"] = r.cm_min_mult;
  v["golod_up_to"] = r.golod_up_to ? ordered_json(*r.golod_up_to) : ordered_json(nullptr);
  v["yoneda"] = r.yoneda ? ordered_json(r.yoneda->str()) : ordered_json(nullptr);
  v["yoneda_margin"] = r.yoneda ? ordered_json(r.yoneda->margin) : ordered_json(nullptr);
  v["regularity_lb"] = r.regularity_lb ? ordered_json(*r.regularity_lb) : ordered_json(nullptr);
  j["verdicts"] = v;
  ordered_json checks = ordered_json::array();
  for (const CheckResult& c : r.checks)
    checks.push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
  j["checks"] = checks;
  if (r.incomplete) j["incomplete"] = r.incomplete_reason;
  j["timing_ms"] = r.timing_ms;
  return j.dump(2) + "\n";
}

std::string render_nu_grid(const RingReport& r, const std::string& module_name) {
  const ModuleReport* m = r.module(module_name);
  if (!m) throw Error(Err::argument, "no module '" + module_name + "' in the report");
  std::ostringstream out;
  out << "ring: " << ring_header(r) << "\n";
  out << "nu table for " << m->name << " (rank; 0 = vanishes):\n";
  emit_grid(out, m->nu.rank, 1, "i", "n", 1);
  return out.str();
}

std::string render_ld_line(const RingReport& r) {
  const ModuleReport* k = r.module("k");
  std::ostringstream out;
  out << "ring: " << ring_header(r) << "\n";
  out << "ld(k) = " << (k ? k->ld.str() : "n/a") << "  (depth " << r.depth << ")\n";
  return out.str();
}

std::string render_koszul_line(const RingReport& r) {
  std::ostringstream out;
  out << "ring: " << ring_header(r) << "\n";
  out << "koszul up to depth " << r.depth << ": "
      << (r.koszul_up_to ? (*r.koszul_up_to ? "yes" : "no") : "n/a") << "\n";
  return out.str();
}

}  // namespace lindef
