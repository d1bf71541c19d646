#include "blockspectra/blocks.hpp"

#include <algorithm>
#include <set>

namespace blockspectra {

std::vector<int> BlockDecomposition::block_size_multiset() const {
  std::vector<int> sizes;
  sizes.reserve(blocks.size());
  for (const auto& b : blocks) sizes.push_back(static_cast<int>(b.size()));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

BlockDecomposition block_decomposition(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 1) throw GraphError("block decomposition needs at least one vertex");
  if (!g.is_connected()) throw GraphError("block decomposition requires a connected graph");

  BlockDecomposition d;
  if (n == 1) {
    d.blocks = {{0}};
  } else {
    // Iterative Hopcroft-Tarjan with an explicit edge stack.
    std::vector<int> disc(n, 0), low(n, 0), parent(n, -1), next_child(n, 0);
    std::vector<Edge> edge_stack;
    std::vector<int> call_stack;
    int timer = 0;

    auto pop_block = [&](Edge top) {
      std::set<int> verts;
      while (true) {
        Edge e = edge_stack.back();
        edge_stack.pop_back();
        verts.insert(e.first);
        verts.insert(e.second);
        if (e == top) break;
      }
      d.blocks.emplace_back(verts.begin(), verts.end());
    };

    disc[0] = low[0] = ++timer;
    call_stack.push_back(0);
    while (!call_stack.empty()) {
      int u = call_stack.back();
      const auto& nb = g.neighbors(u);
      if (next_child[u] < static_cast<int>(nb.size())) {
        int v = nb[next_child[u]++];
        if (disc[v] == 0) {
          parent[v] = u;
          disc[v] = low[v] = ++timer;
          edge_stack.push_back({u, v});
          call_stack.push_back(v);
        } else if (v != parent[u] && disc[v] < disc[u]) {
          edge_stack.push_back({u, v});
          low[u] = std::min(low[u], disc[v]);
        }
      } else {
        call_stack.pop_back();
        int p = parent[u];
        if (p >= 0) {
          low[p] = std::min(low[p], low[u]);
          if (low[u] >= disc[p]) pop_block({p, u});
        }
      }
    }
  }

  for (auto& b : d.blocks) std::sort(b.begin(), b.end());
  std::sort(d.blocks.begin(), d.blocks.end());

  d.blocks_of_vertex.assign(n, {});
  for (int b = 0; b < static_cast<int>(d.blocks.size()); ++b)
    for (int v : d.blocks[b]) d.blocks_of_vertex[v].push_back(b);

  d.blocks_at_cut.assign(n, {});
  for (int v = 0; v < n; ++v)
    if (d.blocks_of_vertex[v].size() >= 2) {
      d.cut_vertices.push_back(v);
      d.blocks_at_cut[v] = d.blocks_of_vertex[v];
    }

  d.cuts_in_block.assign(d.blocks.size(), {});
  for (int b = 0; b < static_cast<int>(d.blocks.size()); ++b)
    for (int v : d.blocks[b])
      if (d.is_cut(v)) d.cuts_in_block[b].push_back(v);

  d.pendant.assign(d.blocks.size(), false);
  if (d.blocks.size() >= 2)
    for (std::size_t b = 0; b < d.blocks.size(); ++b)
      d.pendant[b] = d.cuts_in_block[b].size() <= 1;

  return d;
}

bool is_block_graph(const Graph& g) {
  BlockDecomposition d = block_decomposition(g);
  for (const auto& b : d.blocks) {
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j)
        if (!g.has_edge(b[i], b[j])) return false;
  }
  return true;
}

}  // namespace blockspectra
