#include "blockspectra/io.hpp"

#include <fstream>
#include <sstream>

namespace blockspectra {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw GraphError("edge list: " + msg); }

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) fail("missing header line");
  std::istringstream head(line);
  long long n = -1, m = -1;
  if (!(head >> n >> m)) fail("header must be 'n m'");
  std::string rest;
  if (head >> rest) fail("trailing tokens on header line");
  if (n < 0 || m < 0) fail("negative counts in header");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!std::getline(in, line)) fail("expected " + std::to_string(m) + " edges, file ended early");
    std::istringstream ls(line);
    long long u, v;
    if (!(ls >> u >> v)) fail("bad edge line " + std::to_string(i + 2) + ": '" + line + "'");
    if (ls >> rest) fail("trailing tokens on edge line " + std::to_string(i + 2));
    if (!(0 <= u && u < v && v < n))
      fail("edge line " + std::to_string(i + 2) + " must satisfy 0 <= u < v < n");
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  return Graph::from_edge_list(static_cast<int>(n), std::move(edges));
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open file: " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw GraphError("cannot open file for writing: " + path);
  write_edge_list(out, g);
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace blockspectra
