#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "blockspectra/graph.hpp"
#include "blockspectra/io.hpp"

using namespace blockspectra;

TEST_CASE("from_edge_list builds K3") {
  const Graph g = Graph::from_edge_list(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(1, 0));
  CHECK(g.is_connected());
  for (int v = 0; v < 3; ++v) CHECK(g.degree(v) == 2);
}

TEST_CASE("duplicate edges are rejected") {
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 1}, {0, 1}}), GraphError);
  // also when written in the opposite orientation
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 1}, {1, 0}}), GraphError);
}

TEST_CASE("self-loops and out-of-range endpoints are rejected") {
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{1, 1}}), GraphError);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), GraphError);
  CHECK_THROWS_AS(Graph::from_edge_list(2, {{-1, 0}}), GraphError);
}

TEST_CASE("disconnected graphs are valid at construction") {
  const Graph g = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
  CHECK(g.vertex_count() == 4);
  CHECK_FALSE(g.is_connected());
}

TEST_CASE("with_edges adds and removes with strict checking") {
  const Graph p3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
  const Graph k3 = p3.with_edges({{0, 2}}, {});
  CHECK(k3.edge_count() == 3);
  CHECK_THROWS_AS(p3.with_edges({{0, 1}}, {}), GraphError);   // already present
  CHECK_THROWS_AS(p3.with_edges({}, {{0, 2}}), GraphError);   // not present
  const Graph back = k3.with_edges({}, {{0, 2}});
  CHECK(back == p3);
}

TEST_CASE("edge list round trip") {
  const Graph g = Graph::from_edge_list(5, {{0, 1}, {0, 4}, {2, 3}, {1, 4}});
  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream in(out.str());
  const Graph h = read_edge_list(in);
  CHECK(g == h);
}

TEST_CASE("edge list text format is strict") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
  };
  CHECK_NOTHROW(parse("2 1\n0 1\n"));
  CHECK_THROWS_AS(parse(""), GraphError);
  CHECK_THROWS_AS(parse("2\n"), GraphError);
  CHECK_THROWS_AS(parse("2 2\n0 1\n"), GraphError);        // truncated
  CHECK_THROWS_AS(parse("2 1\n1 0\n"), GraphError);        // requires u < v
  CHECK_THROWS_AS(parse("2 1\n0 1 9\n"), GraphError);      // trailing tokens
  CHECK_THROWS_AS(parse("3 1\n0 3\n"), GraphError);        // v out of range
}

TEST_CASE("dot export declares all vertices") {
  const Graph g = Graph::from_edge_list(3, {{0, 1}});
  const std::string dot = to_dot(g);
  CHECK(dot.find("graph G {") == 0);
  CHECK(dot.find("  2;") != std::string::npos);
  CHECK(dot.find("  0 -- 1;") != std::string::npos);
}

TEST_CASE("single vertex graph") {
  const Graph g = Graph::from_edge_list(1, {});
  CHECK(g.is_connected());
  CHECK(g.edge_count() == 0);
  std::ostringstream out;
  write_edge_list(out, g);
  CHECK(out.str() == "1 0\n");
}
