#pragma once

#include <vector>

#include "blockspectra/graph.hpp"

namespace blockspectra {

// Blocks are maximal 2-connected subgraphs, bridges counted as K2 blocks.
// The one-vertex graph gets a single degenerate K1 block.
struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;  // sorted vertex lists, lexicographically ordered
  std::vector<int> cut_vertices;         // sorted; v is cut iff it lies in >= 2 blocks
  std::vector<bool> pendant;             // per block: <= 1 cut vertex and graph has >= 2 blocks

  // Block-cut tree incidence, both directions.
  std::vector<std::vector<int>> cuts_in_block;    // per block: its cut vertices
  std::vector<std::vector<int>> blocks_at_cut;    // per vertex: block indices (empty unless cut)
  std::vector<std::vector<int>> blocks_of_vertex; // per vertex: all blocks containing it

  bool is_cut(int v) const { return blocks_of_vertex.at(v).size() >= 2; }
  int block_size(int b) const { return static_cast<int>(blocks.at(b).size()); }
  std::vector<int> block_size_multiset() const;  // sorted sizes
};

// Standard DFS low-point decomposition. Throws GraphError on disconnected input.
BlockDecomposition block_decomposition(const Graph& g);

// True iff every block induces a complete graph. Throws on disconnected input.
bool is_block_graph(const Graph& g);

}  // namespace blockspectra
