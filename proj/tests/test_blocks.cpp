#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "blockspectra/blocks.hpp"
#include "oracles.hpp"

using namespace blockspectra;

namespace {

Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph::from_edge_list(n, std::move(e));
}

Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph::from_edge_list(n, std::move(e));
}

// direct definition of a cut vertex: deleting it disconnects the graph
bool is_cut_by_deletion(const Graph& g, int v) {
  const int n = g.vertex_count();
  if (n <= 2) return false;
  std::vector<char> seen(n, 0);
  seen[v] = 1;
  int start = v == 0 ? 1 : 0;
  std::vector<int> stack{start};
  seen[start] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(u))
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count != n - 1;
}

void check_invariants(const Graph& g) {
  const BlockDecomposition d = block_decomposition(g);
  // every edge lies in exactly one block
  std::multiset<Edge> covered;
  for (const auto& block : d.blocks)
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j)
        if (g.has_edge(block[i], block[j])) covered.insert({block[i], block[j]});
  std::multiset<Edge> expected(g.edges().begin(), g.edges().end());
  CHECK(covered == expected);
  // cut vertex characterization by deletion
  for (int v = 0; v < g.vertex_count(); ++v)
    CHECK(d.is_cut(v) == is_cut_by_deletion(g, v));
  // pendant flag definition
  for (std::size_t b = 0; b < d.blocks.size(); ++b)
    CHECK(d.pendant[b] == (d.blocks.size() >= 2 && d.cuts_in_block[b].size() <= 1));
}

}  // namespace

TEST_CASE("triangle plus pendant edge") {
  const Graph g = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  const BlockDecomposition d = block_decomposition(g);
  REQUIRE(d.blocks.size() == 2);
  CHECK(d.blocks[0] == std::vector<int>{0, 1, 2});
  CHECK(d.blocks[1] == std::vector<int>{2, 3});
  CHECK(d.cut_vertices == std::vector<int>{2});
  CHECK(d.pendant[0]);
  CHECK(d.pendant[1]);
}

TEST_CASE("path on four vertices") {
  const BlockDecomposition d = block_decomposition(path(4));
  REQUIRE(d.blocks.size() == 3);
  for (const auto& b : d.blocks) CHECK(b.size() == 2);
  CHECK(d.cut_vertices == std::vector<int>{1, 2});
}

TEST_CASE("complete graph is a single block") {
  const BlockDecomposition d = block_decomposition(complete(5));
  REQUIRE(d.blocks.size() == 1);
  CHECK(d.blocks[0].size() == 5);
  CHECK(d.cut_vertices.empty());
  CHECK_FALSE(d.pendant[0]);
}

TEST_CASE("single vertex graph gets one degenerate block") {
  const BlockDecomposition d = block_decomposition(Graph::from_edge_list(1, {}));
  REQUIRE(d.blocks.size() == 1);
  CHECK(d.blocks[0] == std::vector<int>{0});
  CHECK(d.cut_vertices.empty());
}

TEST_CASE("disconnected input is rejected") {
  const Graph g = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(block_decomposition(g), GraphError);
  CHECK_THROWS_AS(is_block_graph(g), GraphError);
}

TEST_CASE("block graph recognition") {
  CHECK_FALSE(is_block_graph(Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})));  // C4
  CHECK(is_block_graph(complete(4)));
  CHECK(is_block_graph(path(5)));
}

TEST_CASE("two K4s, two triangles and two pendant edges, glued at two hubs") {
  // hub a carries one K4, one triangle and both pendant edges; hub c (inside
  // the first K4) carries the other K4 and the other triangle
  const int a = 0, c = 2;
  std::vector<Edge> e;
  auto clique = [&](std::vector<int> vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) e.push_back({vs[i], vs[j]});
  };
  clique({a, 1, c, 3});      // K4
  clique({c, 4, 5, 6});      // K4
  clique({c, 7, 8});         // triangle
  clique({a, 9, 10});        // triangle
  e.push_back({a, 11});      // pendant edge
  e.push_back({a, 12});      // pendant edge
  const Graph g = Graph::from_edge_list(13, std::move(e));
  CHECK(is_block_graph(g));
  const BlockDecomposition d = block_decomposition(g);
  std::vector<int> sizes = d.block_size_multiset();
  CHECK(sizes == std::vector<int>{2, 2, 3, 3, 4, 4});
  CHECK(d.cut_vertices == std::vector<int>{a, c});
  check_invariants(g);
}

TEST_CASE("decomposition invariants on random connected graphs") {
  std::mt19937_64 rng(987);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    check_invariants(oracles::random_connected_graph(n, 0.25, rng));
  }
}

TEST_CASE("decomposition invariants on all connected graphs with up to 5 vertices") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : oracles::all_connected_graphs(n)) check_invariants(g);
}
