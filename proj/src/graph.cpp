#include "blockspectra/graph.hpp"

#include <algorithm>
#include <set>

namespace blockspectra {

Graph Graph::from_edge_list(int vertex_count, std::vector<Edge> edges) {
  if (vertex_count < 0) throw GraphError("vertex count must be non-negative");
  for (auto& [u, v] : edges) {
    if (u == v)
      throw GraphError("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
      throw GraphError("edge endpoint out of range: (" + std::to_string(u) + "," +
                       std::to_string(v) + ") with n=" + std::to_string(vertex_count));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i] == edges[i - 1])
      throw GraphError("duplicate edge (" + std::to_string(edges[i].first) + "," +
                       std::to_string(edges[i].second) + ")");

  Graph g;
  g.n_ = vertex_count;
  g.edges_ = std::move(edges);
  g.adj_.assign(vertex_count, {});
  for (auto [u, v] : g.edges_) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  return g;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

bool Graph::is_connected() const {
  if (n_ == 0) return false;
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj_[u])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n_;
}

int Graph::max_degree() const {
  int m = 0;
  for (int v = 0; v < n_; ++v) m = std::max(m, degree(v));
  return m;
}

double Graph::average_degree() const {
  if (n_ == 0) return 0.0;
  return 2.0 * static_cast<double>(edges_.size()) / n_;
}

Graph Graph::with_edges(const std::vector<Edge>& add, const std::vector<Edge>& remove) const {
  std::set<Edge> es(edges_.begin(), edges_.end());
  for (auto [u, v] : remove) {
    if (u > v) std::swap(u, v);
    if (es.erase({u, v}) == 0)
      throw GraphError("cannot remove missing edge (" + std::to_string(u) + "," +
                       std::to_string(v) + ")");
  }
  for (auto [u, v] : add) {
    if (u > v) std::swap(u, v);
    if (!es.insert({u, v}).second)
      throw GraphError("cannot add existing edge (" + std::to_string(u) + "," +
                       std::to_string(v) + ")");
  }
  return from_edge_list(n_, std::vector<Edge>(es.begin(), es.end()));
}

}  // namespace blockspectra
