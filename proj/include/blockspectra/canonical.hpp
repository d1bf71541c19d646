#pragma once

#include <string>
#include <vector>

#include "blockspectra/blocks.hpp"
#include "blockspectra/graph.hpp"

namespace blockspectra {

struct Permutation {
  std::vector<int> map;  // map[i] = image of i

  explicit Permutation(std::vector<int> m);  // validates bijection
  static Permutation identity(int n);
  int size() const { return static_cast<int>(map.size()); }
};

struct CanonicalCode {
  std::string code;

  bool operator==(const CanonicalCode&) const = default;
  bool operator<(const CanonicalCode& o) const { return code < o.code; }
  std::string hex() const;
};

// Isomorphism-invariant code for a connected graph. Block graphs take the
// exact fast path (canonical rooted string of the block-cut tree, block
// nodes labeled by clique size, rooted at the tree centroid). Anything else
// falls back to the minimum adjacency bit-string over all vertex
// permutations, which is capped at 8 vertices.
CanonicalCode canonical_code(const Graph& g);

// Equality of canonical codes; agrees with edge-preserving bijections on the
// supported graph classes.
bool is_isomorphic(const Graph& g1, const Graph& g2);

// True iff uv in E  <=>  p(u)p(v) in E for all pairs, i.e. the permutation
// matrix commutes with the adjacency matrix.
bool check_automorphism(const Graph& g, const Permutation& p);

}  // namespace blockspectra
