#include "blockspectra/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace blockspectra {

Permutation::Permutation(std::vector<int> m) : map(std::move(m)) {
  std::vector<char> seen(map.size(), 0);
  for (int v : map) {
    if (v < 0 || v >= static_cast<int>(map.size()) || seen[v])
      throw GraphError("permutation is not a bijection on {0.." +
                       std::to_string(map.size() ? map.size() - 1 : 0) + "}");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> m(n);
  std::iota(m.begin(), m.end(), 0);
  return Permutation(std::move(m));
}

std::string CanonicalCode::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(code.size() * 2);
  for (unsigned char c : code) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

namespace {

// Canonical string of the block-cut tree. Tree nodes: one per block
// (labeled with the clique size) and one per cut vertex.
std::string block_tree_code(const Graph& g, const BlockDecomposition& d) {
  const int nb = static_cast<int>(d.blocks.size());
  const int nc = static_cast<int>(d.cut_vertices.size());
  const int total = nb + nc;

  std::vector<int> cut_node(g.vertex_count(), -1);
  for (int i = 0; i < nc; ++i) cut_node[d.cut_vertices[i]] = nb + i;

  std::vector<std::vector<int>> tree(total);
  for (int b = 0; b < nb; ++b)
    for (int v : d.cuts_in_block[b]) {
      tree[b].push_back(cut_node[v]);
      tree[cut_node[v]].push_back(b);
    }

  auto label = [&](int node) {
    if (node < nb) return "B" + std::to_string(d.blocks[node].size());
    return std::string("C");
  };

  // Subtree sizes from node 0, then centroid(s) of the tree.
  std::vector<int> order, parent(total, -1), sz(total, 1);
  order.reserve(total);
  order.push_back(0);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int w : tree[order[i]])
      if (w != parent[order[i]]) {
        parent[w] = order[i];
        order.push_back(w);
      }
  for (int i = total - 1; i > 0; --i) sz[parent[order[i]]] += sz[order[i]];

  std::vector<int> centroids;
  for (int v = 0; v < total; ++v) {
    int worst = total - sz[v];
    for (int w : tree[v])
      if (w != parent[v]) worst = std::max(worst, sz[w]);
    if (worst <= total / 2) centroids.push_back(v);
  }

  // AHU encoding rooted at a node: label + sorted child encodings.
  auto encode_impl = [&](auto&& self, int node, int par) -> std::string {
    std::vector<std::string> kids;
    for (int w : tree[node])
      if (w != par) kids.push_back(self(self, w, node));
    std::sort(kids.begin(), kids.end());
    std::string s = label(node) + "(";
    for (const auto& k : kids) s += k;
    s += ")";
    return s;
  };

  std::string best;
  for (int c : centroids) {
    std::string s = encode_impl(encode_impl, c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

std::string generic_min_code(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 8)
    throw GraphError("generic canonical form is capped at 8 vertices (got " +
                     std::to_string(n) + ")");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  std::string cur;
  cur.resize(static_cast<std::size_t>(n) * (n - 1) / 2);
  do {
    std::size_t k = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        cur[k++] = g.has_edge(perm[i], perm[j]) ? '1' : '0';
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

CanonicalCode canonical_code(const Graph& g) {
  if (!g.is_connected()) throw GraphError("canonical code requires a connected graph");
  const std::string n = std::to_string(g.vertex_count());
  if (is_block_graph(g))
    return {"T:" + n + ":" + block_tree_code(g, block_decomposition(g))};
  return {"G:" + n + ":" + generic_min_code(g)};
}

bool is_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
    return false;
  return canonical_code(g1) == canonical_code(g2);
}

bool check_automorphism(const Graph& g, const Permutation& p) {
  if (p.size() != g.vertex_count())
    throw GraphError("permutation size does not match vertex count");
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.has_edge(u, v) != g.has_edge(p.map[u], p.map[v])) return false;
  return true;
}

}  // namespace blockspectra
