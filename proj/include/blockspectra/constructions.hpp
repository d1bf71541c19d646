#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "blockspectra/graph.hpp"

namespace blockspectra {

struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SpecParseError : std::runtime_error {
  std::size_t offset;  // byte offset into the input text
  SpecParseError(const std::string& msg, std::size_t off)
      : std::runtime_error(msg + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

struct BlockTerm {
  int clique_size = 0;   // >= 2
  int multiplicity = 0;  // >= 1
  bool operator==(const BlockTerm&) const = default;
};

struct BlockSpec {
  std::vector<BlockTerm> terms;

  int total_blocks() const;
  int central_vertex_count() const;  // 1 + sum d_i * (n_i - 1)
  std::string render() const;        // e.g. "K3^2+K6"
};

// Grammar: spec := term ('+' term)* ; term := 'K' INT ('^' INT)? ;
// whitespace ignored. '^' multiplicity defaults to 1.
BlockSpec parse_block_spec(std::string_view text);

// Graph with one designated central vertex (index 0) belonging to every
// block; blocks pairwise intersect exactly in vertex 0.
Graph build_central(const BlockSpec& spec);

// The extremal family: for even phi, (phi-2)/2 triangles and one clique
// K_{k-phi+2} at a central cut vertex; for odd phi additionally one pendant
// edge and (phi-3)/2 triangles; phi = 2 degenerates to K_k. The builder
// re-derives the dissociation number of the result and rejects a mismatch,
// which would signal a construction bug.
Graph build_extremal(int k, int phi);

// [2,2] for k in {2,3}, [2, k-1] for k >= 4; validated empirically by the
// enumeration tests. Values outside are infeasible.
std::pair<int, int> feasible_phi_range(int k);

}  // namespace blockspectra
