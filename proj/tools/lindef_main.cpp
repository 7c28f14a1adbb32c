// Command-line front end. Talks to the engine exclusively through the C API.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "lindef/lindef.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitChecksFailed = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct RingHandle {
  lde_ring* ring{nullptr};
  ~RingHandle() { lde_ring_free(ring); }
};

struct ReportHandle {
  lde_report* report{nullptr};
  ~ReportHandle() { lde_report_free(report); }
};

int fail(lde_status st) {
  std::cerr << "error: " << lde_last_error() << " (status " << st << ")\n";
  return kExitError;
}

int run_analysis(const std::string& spec_path, int depth, bool powers,
                 const std::string& module_path, const std::string& json_path,
                 bool timing, const char* part) {
  RingHandle ring;
  std::string spec_text = read_file(spec_path);
  if (lde_status st = lde_ring_parse(spec_text.c_str(), &ring.ring); st != LDE_OK)
    return fail(st);

  std::string module_text;
  lde_options opts{};
  opts.depth = depth;
  opts.powers = powers ? 1 : 0;
  opts.include_timing = timing ? 1 : 0;
  if (!module_path.empty()) {
    module_text = read_file(module_path);
    opts.module_text = module_text.c_str();
  }

  ReportHandle report;
  if (lde_status st = lde_analyze(ring.ring, &opts, &report.report); st != LDE_OK)
    return fail(st);

  char* text = nullptr;
  if (lde_status st = lde_report_render(report.report, part, &text); st != LDE_OK)
    return fail(st);
  std::cout << text;
  lde_string_free(text);

  if (!json_path.empty()) {
    char* json = nullptr;
    if (lde_status st = lde_report_render(report.report, "json", &json); st != LDE_OK)
      return fail(st);
    std::ofstream out(json_path, std::ios::binary);
    out << json;
    lde_string_free(json);
    if (!out) {
      std::cerr << "error: cannot write '" << json_path << "'\n";
      return kExitError;
    }
  }

  if (lde_report_incomplete(report.report)) return kExitChecksFailed;
  return lde_report_checks_clean(report.report) ? kExitOk : kExitChecksFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact local-algebra invariants over F_p"};
  app.set_version_flag("--version", lde_version());
  app.require_subcommand(1);

  std::string spec_path, module_path, json_path;
  int depth = 0;
  bool powers = false, timing = false, run = false;

  auto add_spec_opts = [&](CLI::App* cmd, bool with_extras) {
    cmd->add_option("spec", spec_path, "ring spec file")->required();
    cmd->add_option("--depth", depth, "homological depth (default: spec value or 8)");
    if (with_extras) {
      cmd->add_flag("--powers", powers, "also analyze R/m^n and m^n up to the socle degree");
      cmd->add_option("--module", module_path, "cokernel presentation matrix file");
      cmd->add_option("--json", json_path, "write the JSON report to this path");
      cmd->add_flag("--timing", timing, "include real timing_ms in the JSON output");
    }
  };

  CLI::App* analyze = app.add_subcommand("analyze", "full analysis of one ring");
  add_spec_opts(analyze, true);

  CLI::App* nu = app.add_subcommand("nu", "nu vanishing table of the residue field");
  add_spec_opts(nu, false);

  CLI::App* ld = app.add_subcommand("ld", "linearity defect of the residue field");
  add_spec_opts(ld, false);

  CLI::App* koszul = app.add_subcommand("koszul", "Koszulness up to the requested depth");
  add_spec_opts(koszul, false);

  std::string emit_name;
  CLI::App* corpus = app.add_subcommand("corpus", "built-in example rings");
  corpus->add_flag("--run", run, "analyze every entry and compare with expectations");
  corpus->add_option("--depth", depth, "homological depth for --run (default 8)");
  corpus->add_option("--spec", emit_name, "print the ring-spec file of one entry");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed())
      return run_analysis(spec_path, depth, powers, module_path, json_path, timing, "table");
    if (nu->parsed())
      return run_analysis(spec_path, depth, false, "", "", false, "nu");
    if (ld->parsed())
      return run_analysis(spec_path, depth, false, "", "", false, "ld");
    if (koszul->parsed())
      return run_analysis(spec_path, depth, false, "", "", false, "koszul");

    // corpus
    if (!emit_name.empty()) {
      for (int i = 0; i < lde_corpus_count(); ++i)
        if (emit_name == lde_corpus_name(i)) {
          std::cout << lde_corpus_spec(i);
          return kExitOk;
        }
      std::cerr << "error: unknown corpus entry '" << emit_name << "'\n";
      return kExitError;
    }
    int bad = 0;
    for (int i = 0; i < lde_corpus_count(); ++i) {
      if (!run) {
        std::cout << lde_corpus_name(i) << ": " << lde_corpus_description(i) << "\n";
        continue;
      }
      char* summary = nullptr;
      lde_status st = lde_corpus_check(i, depth, &summary);
      if (summary) {
        std::cout << summary << "\n";
        lde_string_free(summary);
      }
      if (st == LDE_ERR_CHECK_FAILED)
        ++bad;
      else if (st != LDE_OK)
        return fail(st);
    }
    return bad == 0 ? kExitOk : kExitChecksFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
