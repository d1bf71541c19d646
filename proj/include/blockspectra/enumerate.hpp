#pragma once

#include <string>
#include <vector>

#include "blockspectra/canonical.hpp"
#include "blockspectra/graph.hpp"

namespace blockspectra {

struct EnumerateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CensusEntry {
  CanonicalCode canonical;
  Graph graph;
  int phi = 0;
  double rho = 0.0;
  bool is_extremal = false;  // maximizes rho within its (k, phi) stratum
};

struct StratumResult {
  int phi = 0;
  int count = 0;
  double max_rho = 0.0;
  std::vector<std::string> maximizer_codes_hex;
  bool matches_extremal = false;  // maximizer class equals build_extremal(k, phi)
  bool unique = false;
  int numeric_ties = 0;  // near-max classes within the margin before re-solving
};

struct TheoremReport {
  int k = 0;
  std::vector<StratumResult> strata;  // non-empty strata, ascending phi
  bool all_pass = false;
};

struct StructureChecks {
  int phi = 0;
  bool one_cut_vertex = false;
  bool at_most_one_big_block = false;
  bool small_blocks_pendant = false;
  bool intersection_dichotomy = false;
  bool pass = false;
};

struct StructureReport {
  int k = 0;
  std::vector<StructureChecks> strata;
  bool all_pass = false;
  std::vector<std::string> failures;
};

inline constexpr double kUniquenessMargin = 1e-9;

// Exactly one representative per isomorphism class of connected block
// graphs on k vertices (1 <= k <= 10), grown by attaching complete blocks
// and deduplicated by canonical code. Entries are sorted by code; phi and
// rho are filled in; ordering and representatives are deterministic
// regardless of the worker count.
std::vector<CensusEntry> enumerate_block_graphs(int k, int workers = 0);

StratumResult extremal_search_in(const std::vector<CensusEntry>& census, int k, int phi);
StratumResult extremal_search(int k, int phi, int workers = 0);

// For every non-empty phi stratum: the maximizer class must be unique and
// isomorphic to build_extremal(k, phi).
TheoremReport verify_main_theorem(int k, int workers = 0);

// Structural properties of each stratum maximizer: exactly one cut vertex
// (phi > 2), at most one block of size >= 4, every K2/K3 block pendant, and
// the block-intersection dichotomy (|B ∩ D| = 1 for K2, 2 for larger blocks)
// against the solver's maximum set. phi = 2 strata only require the
// maximizer to be the complete graph (zero cut vertices).
StructureReport verify_structure_corollaries(int k, int workers = 0);

// JSON serialization; rho is rendered with 12 significant digits and
// canonical codes as hex.
std::string census_entry_jsonl(const CensusEntry& e);
std::string theorem_report_json(const TheoremReport& t);
std::string structure_report_json(const StructureReport& s);

}  // namespace blockspectra
