#pragma once

#include <optional>

#include "invariants.hpp"
#include "specfile.hpp"

namespace lindef {

struct AnalyzeOptions {
  int depth{0};       // <= 0: take the spec's depth (default 8)
  bool powers{false};  // also analyze R/m^n and m^n up to the socle degree
  std::optional<std::string> module_text;  // user cokernel presentation
  long long max_entries{2'000'000};
  bool include_timing{false};  // real timing_ms in the JSON output
};

struct ModuleReport {
  std::string name;
  std::vector<int> betti;
  bool graded{false};
  std::map<std::pair<int, int>, int> gbetti;
  LinHomologyTable lin;
  NuTable nu;
  BoundedVerdict ld;
};

struct CheckResult {
  std::string name;
  std::string status;  // pass | fail | advisory
  std::string detail;
};

struct RingReport {
  RingSpecFile spec;
  int depth{8};
  int truncate{1};
  int cap{3};

  int dim{0};
  int edim{0};
  int socle{0};
  std::vector<int> hilbert;
  bool graded{false};
  bool truncation_forced{false};

  std::vector<ModuleReport> modules;  // k first, then quotients, powers, user

  BoundedVerdict s;
  std::optional<bool> koszul_up_to;
  std::optional<CiResult> ci;            // absent when truncation was forced
  std::optional<bool> ci_min_mult;       // only for complete intersections
  bool cm_min_mult{false};
  std::optional<bool> golod_up_to;
  std::optional<YonedaVerdict> yoneda;
  std::optional<int> regularity_lb;      // graded mode only
  std::vector<int> koszul_homology;

  std::vector<CheckResult> checks;
  long long timing_ms{0};
  bool incomplete{false};
  std::string incomplete_reason;

  bool checks_clean() const;
  const ModuleReport* module(const std::string& name) const;
};

RingReport analyze(const RingSpecFile& spec, const AnalyzeOptions& opts = {});

enum class ReportFormat { table, json };
std::string emit(const RingReport& report, ReportFormat format);

// Focused renderings used by the CLI subcommands.
std::string render_nu_grid(const RingReport& report, const std::string& module_name);
std::string render_ld_line(const RingReport& report);
std::string render_koszul_line(const RingReport& report);

}  // namespace lindef
