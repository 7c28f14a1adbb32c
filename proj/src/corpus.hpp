#pragma once

#include <optional>

#include "invariants.hpp"

namespace lindef {

// A built-in example ring with curated expected invariants. Every expectation
// records where its value comes from (closed-form series, hand enumeration,
// or a named independent computation), so the regression suite never tests
// the engine against itself.
struct CorpusEntry {
  std::string name;
  std::string description;
  std::string spec_text;  // ring-spec file format, round-trips through the CLI

  int dim{0};
  std::vector<int> hilbert;
  int edim{0};
  int socle{0};
  bool graded{true};
  bool honest{true};

  std::vector<long long> betti_k;  // beta_0..beta_8 of the residue field
  bool ld_k_zero{true};            // false: verdict is at_least(depth) at depth 8
  int s_value{1};
  bool ci{false};
  int mu{0};                          // minimal generators of the ideal
  std::optional<bool> ci_min_mult;    // only when ci
  bool cm_min_mult{false};
  bool golod{false};
  bool koszul{true};
  YonedaKind yoneda{YonedaKind::equals_dual};
  std::vector<int> koszul_homology;   // dim H_0..H_edim of the Koszul complex
  // Poincare series of k as a reduced fraction A/B, when a closed form exists.
  std::optional<std::pair<std::vector<long long>, std::vector<long long>>> poincare;

  std::vector<std::pair<std::string, std::string>> sources;
};

const std::vector<CorpusEntry>& corpus_entries();
const CorpusEntry& corpus_entry(const std::string& name);

// Re-analyzes the entry and compares against the curated expectations.
// Returns an empty string on success, otherwise one line per mismatch.
std::string corpus_check(const CorpusEntry& e, int depth);

}  // namespace lindef
