#include "lindef/lindef.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "corpus.hpp"
#include "report.hpp"

using namespace lindef;

struct lde_ring {
  RingSpecFile spec;
};

struct lde_report {
  RingReport report;
};

namespace {

thread_local std::string g_last_error;

lde_status status_of(const Error& e) {
  g_last_error = e.what();
  switch (e.code) {
    case Err::parse:
      return LDE_ERR_PARSE;
    case Err::field:
      return LDE_ERR_FIELD;
    case Err::relation_order:
      return LDE_ERR_RELATION_ORDER;
    case Err::truncation_forced:
      return LDE_ERR_TRUNCATION;
    case Err::resource_limit:
      return LDE_ERR_RESOURCE;
    case Err::argument:
    case Err::cap_mismatch:
    case Err::dimension_mismatch:
    case Err::power_vanishes:
    case Err::not_graded:
      return LDE_ERR_ARGUMENT;
    default:
      return LDE_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
lde_status guarded(Fn&& fn) {
  try {
    fn();
    return LDE_OK;
  } catch (const Error& e) {
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LDE_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return LDE_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* lde_version(void) { return "0.1.0"; }

const char* lde_last_error(void) { return g_last_error.c_str(); }

lde_status lde_ring_parse(const char* spec_text, lde_ring** out) {
  if (!spec_text || !out) {
    g_last_error = "null argument";
    return LDE_ERR_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] {
    auto ring = new lde_ring{parse_ring_spec(spec_text)};
    *out = ring;
  });
}

void lde_ring_free(lde_ring* ring) { delete ring; }

lde_status lde_analyze(const lde_ring* ring, const lde_options* opts, lde_report** out) {
  if (!ring || !out) {
    g_last_error = "null argument";
    return LDE_ERR_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] {
    AnalyzeOptions a;
    if (opts) {
      a.depth = opts->depth;
      a.powers = opts->powers != 0;
      a.include_timing = opts->include_timing != 0;
      if (opts->max_entries > 0) a.max_entries = opts->max_entries;
      if (opts->module_text) a.module_text = std::string(opts->module_text);
    }
    auto rep = new lde_report{analyze(ring->spec, a)};
    *out = rep;
  });
}

void lde_report_free(lde_report* report) { delete report; }

lde_status lde_report_render(const lde_report* report, const char* part, char** out_text) {
  if (!report || !part || !out_text) {
    g_last_error = "null argument";
    return LDE_ERR_ARGUMENT;
  }
  *out_text = nullptr;
  return guarded([&] {
    std::string p(part);
    std::string text;
    if (p == "table")
      text = emit(report->report, ReportFormat::table);
    else if (p == "json")
      text = emit(report->report, ReportFormat::json);
    else if (p == "nu")
      text = render_nu_grid(report->report, "k");
    else if (p == "ld")
      text = render_ld_line(report->report);
    else if (p == "koszul")
      text = render_koszul_line(report->report);
    else
      throw Error(Err::argument, "unknown render part '" + p + "'");
    *out_text = dup_string(text);
  });
}

void lde_string_free(char* s) { std::free(s); }

int lde_report_checks_clean(const lde_report* report) {
  return report && report->report.checks_clean() ? 1 : 0;
}

int lde_report_incomplete(const lde_report* report) {
  return report && report->report.incomplete ? 1 : 0;
}

int lde_corpus_count(void) { return static_cast<int>(corpus_entries().size()); }

const char* lde_corpus_name(int idx) {
  const auto& entries = corpus_entries();
  if (idx < 0 || idx >= static_cast<int>(entries.size())) return nullptr;
  return entries[idx].name.c_str();
}

const char* lde_corpus_description(int idx) {
  const auto& entries = corpus_entries();
  if (idx < 0 || idx >= static_cast<int>(entries.size())) return nullptr;
  return entries[idx].description.c_str();
}

const char* lde_corpus_spec(int idx) {
  const auto& entries = corpus_entries();
  if (idx < 0 || idx >= static_cast<int>(entries.size())) return nullptr;
  return entries[idx].spec_text.c_str();
}

lde_status lde_corpus_check(int idx, int depth, char** out_summary) {
  const auto& entries = corpus_entries();
  if (idx < 0 || idx >= static_cast<int>(entries.size()) || !out_summary) {
    g_last_error = "corpus index out of range";
    return LDE_ERR_ARGUMENT;
  }
  *out_summary = nullptr;
  std::string mismatches;
  lde_status st = guarded([&] { mismatches = corpus_check(entries[idx], depth <= 0 ? 8 : depth); });
  if (st != LDE_OK) return st;
  if (mismatches.empty()) {
    *out_summary = dup_string(entries[idx].name + ": ok");
    return LDE_OK;
  }
  g_last_error = mismatches;
  *out_summary = dup_string(entries[idx].name + ": MISMATCH\n" + mismatches);
  return LDE_ERR_CHECK_FAILED;
}

}  // extern "C"
