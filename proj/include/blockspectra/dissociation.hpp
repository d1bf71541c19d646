#pragma once

#include <vector>

#include "blockspectra/blocks.hpp"
#include "blockspectra/graph.hpp"

namespace blockspectra {

struct DissociationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A vertex set whose induced subgraph has maximum degree <= 1, plus the
// degrees witnessing that bound (parallel to `set`).
struct DissociationCertificate {
  std::vector<int> set;  // sorted
  int phi = 0;           // == set.size()
  std::vector<int> induced_degrees;
};

struct CoverReport {
  int alpha = 0;  // independence number
  int phi = 0;    // dissociation number
  int psi2 = 0;   // minimum vertex cover = n - alpha
  int psi3 = 0;   // minimum 3-vertex-path cover, computed directly
  int n = 0;
};

bool is_dissociation_set(const Graph& g, const std::vector<int>& d);

// Exhaustive search with pruning; returns the lexicographically smallest
// maximum dissociation set. Capped at 26 vertices.
DissociationCertificate dissociation_brute(const Graph& g);

// Dynamic program over the block-cut tree of a connected block graph.
// States per cut vertex: excluded / included with 0 chosen neighbors /
// included with 1 chosen neighbor; each block contributes at most two
// chosen vertices. Exactness is established against dissociation_brute.
DissociationCertificate dissociation_dp(const Graph& g);

// alpha by branch-and-bound, psi2 = n - alpha, psi3 by direct 3-way
// branching on paths of three vertices; psi3 is cross-checked against
// n - phi and a mismatch throws (it would flag a solver bug).
// Capped at 22 vertices.
CoverReport cover_report(const Graph& g);

}  // namespace blockspectra
