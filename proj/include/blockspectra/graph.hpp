#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace blockspectra {

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Edge = std::pair<int, int>;  // normalized so first < second

// Finite simple undirected graph on vertices 0..n-1. Immutable after
// construction; all derived structures may be shared freely across threads.
class Graph {
 public:
  Graph() = default;

  // Validates endpoints, rejects self-loops and duplicate edges.
  // Connectivity is not required here.
  static Graph from_edge_list(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  bool has_edge(int u, int v) const;

  bool is_connected() const;
  int max_degree() const;
  double average_degree() const;

  // New graph with the given edges added and removed. Additions must not
  // already exist and removals must exist; violations throw GraphError,
  // which flags logic bugs in rewrite implementations early.
  Graph with_edges(const std::vector<Edge>& add, const std::vector<Edge>& remove) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;            // sorted, each with first < second
  std::vector<std::vector<int>> adj_;  // sorted neighbor lists
};

}  // namespace blockspectra
