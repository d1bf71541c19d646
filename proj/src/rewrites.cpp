#include "blockspectra/rewrites.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "blockspectra/spectral.hpp"

namespace blockspectra {

namespace {

// Residual tolerance for deciding whether the output's Perron vector is an
// eigenvector of the input. Structural changes push the residual to O(1);
// genuine transfers sit at solver accuracy, so the gap is wide.
constexpr double kEigenDecisionTol = 1e-6;

[[noreturn]] void fail(RewriteOp op, const std::string& msg) {
  throw RewritePreconditionError(std::string(to_string(op)) + ": " + msg);
}

bool geq(double a, double b) { return a - b >= -kPerronSlack; }
bool gt(double a, double b) { return a - b > kPerronSlack; }

int vertex_role(const RewriteSite& site, const Graph& g, const std::string& name) {
  auto it = site.vertex_roles.find(name);
  if (it == site.vertex_roles.end()) fail(site.op, "missing vertex role '" + name + "'");
  if (it->second < 0 || it->second >= g.vertex_count())
    fail(site.op, "vertex role '" + name + "' out of range");
  return it->second;
}

int block_role(const RewriteSite& site, const BlockDecomposition& d, const std::string& name) {
  auto it = site.block_roles.find(name);
  if (it == site.block_roles.end()) fail(site.op, "missing block role '" + name + "'");
  if (it->second < 0 || it->second >= static_cast<int>(d.blocks.size()))
    fail(site.op, "block role '" + name + "' out of range");
  return it->second;
}

// Unique block containing all the given vertices; two distinct blocks share
// at most one vertex, so the block is unique whenever |verts| >= 2.
int find_block_with(const BlockDecomposition& d, const std::vector<int>& verts) {
  for (int b = 0; b < static_cast<int>(d.blocks.size()); ++b) {
    bool all = true;
    for (int v : verts)
      all = all && std::binary_search(d.blocks[b].begin(), d.blocks[b].end(), v);
    if (all) return b;
  }
  return -1;
}

// Block role with fallback inference from the vertices it must contain.
int block_role_or_infer(const RewriteSite& site, const BlockDecomposition& d,
                        const std::string& name, const std::vector<int>& must_contain) {
  int inferred = find_block_with(d, must_contain);
  auto it = site.block_roles.find(name);
  if (it == site.block_roles.end()) {
    if (inferred < 0) fail(site.op, "no block contains the vertices required for role '" + name + "'");
    return inferred;
  }
  int b = block_role(site, d, name);
  if (b != inferred)
    fail(site.op, "block role '" + name + "' does not contain its required vertices");
  return b;
}

std::vector<char> member_mask(int n, const std::vector<int>& set) {
  std::vector<char> mask(n, 0);
  for (int v : set) mask[v] = 1;
  return mask;
}

std::vector<int> block_intersection_with_set(const BlockDecomposition& d, int b,
                                             const std::vector<char>& in_set) {
  std::vector<int> out;
  for (int v : d.blocks[b])
    if (in_set[v]) out.push_back(v);
  return out;
}

// Missing edges needed to turn `verts` into a clique.
std::vector<Edge> completion_edges(const Graph& g, const std::vector<int>& verts) {
  std::vector<Edge> add;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (!g.has_edge(verts[i], verts[j])) add.push_back({verts[i], verts[j]});
  return add;
}

void validate_input(RewriteOp op, const Graph& g, const DissociationCertificate* max_set) {
  if (g.vertex_count() < 2) fail(op, "input graph needs at least 2 vertices");
  if (!g.is_connected()) fail(op, "input graph must be connected");
  if (!is_block_graph(g)) fail(op, "input graph must be a block graph");
  if (max_set) {
    if (!is_dissociation_set(g, max_set->set))
      fail(op, "provided certificate is not a dissociation set");
    if (static_cast<int>(max_set->set.size()) != max_set->phi)
      fail(op, "certificate phi does not match its set size");
    if (max_set->phi != dissociation_dp(g).phi)
      fail(op, "provided certificate is not maximum");
  }
}

struct ShapeTransform {
  std::vector<int> remove_sizes;
  std::vector<int> add_sizes;
};

bool shape_matches(const BlockDecomposition& before, const Graph& output,
                   const ShapeTransform& t) {
  std::multiset<int> expected(before.block_size_multiset().begin(),
                              before.block_size_multiset().end());
  for (int s : t.remove_sizes) {
    auto it = expected.find(s);
    if (it == expected.end()) return false;
    expected.erase(it);
  }
  for (int s : t.add_sizes) expected.insert(s);
  const auto actual_vec = block_decomposition(output).block_size_multiset();
  std::multiset<int> actual(actual_vec.begin(), actual_vec.end());
  return expected == actual;
}

RewriteReport build_report(const Graph& in, const BlockDecomposition& din, Graph out,
                           const RewriteSite& site, double rho_before, int phi_before,
                           const ShapeTransform& shape, bool cut_shift_rule) {
  RewriteReport r;
  r.input = in;
  r.output = std::move(out);
  r.site = site;
  r.rho_before = rho_before;
  r.phi_before = phi_before;

  r.verdicts.vertex_count_preserved = in.vertex_count() == r.output.vertex_count();
  r.verdicts.connected = r.output.vertex_count() > 0 && r.output.is_connected();
  r.verdicts.block_graph = r.verdicts.connected && is_block_graph(r.output);

  const SpectralResult sout = spectral_radius(r.output);
  r.rho_after = sout.rho;

  if (r.verdicts.block_graph)
    r.phi_after = dissociation_dp(r.output).phi;
  else if (r.output.vertex_count() <= 26)
    r.phi_after = dissociation_brute(r.output).phi;
  else
    r.phi_after = -1;
  r.verdicts.phi_preserved = r.phi_after == r.phi_before;

  const double delta = r.rho_after - r.rho_before;
  if (!cut_shift_rule) {
    r.rho_strict_expected = true;
    r.verdicts.rho_increased = delta > kRhoMargin;
  } else {
    const bool transfers =
        verify_eigenpair(in, r.rho_before, sout.perron, kEigenDecisionTol);
    r.rho_strict_expected = !transfers;
    r.verdicts.rho_increased =
        delta >= -kRhoMargin && (!r.rho_strict_expected || delta > kRhoMargin);
  }

  r.verdicts.shape_ok = r.verdicts.block_graph && shape_matches(din, r.output, shape);
  r.contract_ok = r.verdicts.all();
  return r;
}

}  // namespace

const char* to_string(RewriteOp op) {
  switch (op) {
    case RewriteOp::P21MergeEmpty: return "P21_MERGE_EMPTY";
    case RewriteOp::P21MergeAtCut: return "P21_MERGE_AT_CUT";
    case RewriteOp::P21MergeSingleHit: return "P21_MERGE_SINGLE_HIT";
    case RewriteOp::L22A: return "L22A";
    case RewriteOp::L22B: return "L22B";
    case RewriteOp::L23A: return "L23A";
    case RewriteOp::L23B: return "L23B";
    case RewriteOp::P22TriangleCase1: return "P22_TRIANGLE_CASE1";
    case RewriteOp::P22TriangleCase2: return "P22_TRIANGLE_CASE2";
    case RewriteOp::CutShift: return "CUT_SHIFT";
  }
  return "?";
}

RewriteOp parse_rewrite_op(const std::string& name) {
  for (RewriteOp op : kAllRewriteOps)
    if (name == to_string(op)) return op;
  throw RewritePreconditionError("unknown rewrite operation '" + name + "'");
}

RewriteReport apply_prop21(const Graph& g, const BlockDecomposition& d,
                           const DissociationCertificate& max_set, Prop21Variant variant,
                           const RewriteSite& site) {
  const RewriteOp op = site.op;
  validate_input(op, g, &max_set);
  const auto in_d = member_mask(g.vertex_count(), max_set.set);
  const double rho_before = spectral_radius(g).rho;

  std::vector<int> union_verts;
  ShapeTransform shape;

  if (variant == Prop21Variant::I) {
    if (op != RewriteOp::P21MergeEmpty) fail(op, "site op does not match variant i");
    const int b = block_role(site, d, "B");
    const int c = block_role(site, d, "C");
    if (b == c) fail(op, "roles B and C must be distinct blocks");
    std::vector<int> shared;
    std::set_intersection(d.blocks[b].begin(), d.blocks[b].end(), d.blocks[c].begin(),
                          d.blocks[c].end(), std::back_inserter(shared));
    if (shared.size() != 1) fail(op, "blocks B and C must be adjacent (share one cut vertex)");
    if (!block_intersection_with_set(d, b, in_d).empty())
      fail(op, "block B must be disjoint from the dissociation set");
    union_verts = d.blocks[b];
    for (int v : d.blocks[c])
      if (!std::binary_search(d.blocks[b].begin(), d.blocks[b].end(), v))
        union_verts.push_back(v);
    shape.remove_sizes = {d.block_size(b), d.block_size(c)};
    shape.add_sizes = {d.block_size(b) + d.block_size(c) - 1};
  } else if (variant == Prop21Variant::II) {
    if (op != RewriteOp::P21MergeAtCut) fail(op, "site op does not match variant ii");
    const int u = vertex_role(site, g, "u");
    if (!d.is_cut(u)) fail(op, "role u must be a cut vertex");
    if (!in_d[u]) fail(op, "role u must lie in the dissociation set");
    std::set<int> uni;
    for (int b : d.blocks_at_cut[u]) {
      uni.insert(d.blocks[b].begin(), d.blocks[b].end());
      shape.remove_sizes.push_back(d.block_size(b));
    }
    union_verts.assign(uni.begin(), uni.end());
    int merged = 1;
    for (int s : shape.remove_sizes) merged += s - 1;
    shape.add_sizes = {merged};
  } else {
    if (op != RewriteOp::P21MergeSingleHit) fail(op, "site op does not match variant iii");
    const int b1 = block_role(site, d, "B1");
    const int b2 = block_role(site, d, "B2");
    if (b1 == b2) fail(op, "roles B1 and B2 must be distinct blocks");
    std::vector<int> shared;
    std::set_intersection(d.blocks[b1].begin(), d.blocks[b1].end(), d.blocks[b2].begin(),
                          d.blocks[b2].end(), std::back_inserter(shared));
    if (shared.size() != 1) fail(op, "blocks B1 and B2 must be adjacent (share one cut vertex)");
    const auto h1 = block_intersection_with_set(d, b1, in_d);
    const auto h2 = block_intersection_with_set(d, b2, in_d);
    if (h1.size() != 1) fail(op, "block B1 must meet the dissociation set exactly once");
    if (h2.size() != 1) fail(op, "block B2 must meet the dissociation set exactly once");
    if (d.is_cut(h1[0]) || d.is_cut(h2[0]))
      fail(op, "the single dissociation hits must not be cut vertices");
    union_verts = d.blocks[b1];
    for (int v : d.blocks[b2])
      if (!std::binary_search(d.blocks[b1].begin(), d.blocks[b1].end(), v))
        union_verts.push_back(v);
    shape.remove_sizes = {d.block_size(b1), d.block_size(b2)};
    shape.add_sizes = {d.block_size(b1) + d.block_size(b2) - 1};
  }

  const auto add = completion_edges(g, union_verts);
  if (add.empty()) fail(op, "merge would add no edges");
  Graph out = g.with_edges(add, {});
  return build_report(g, d, std::move(out), site, rho_before, max_set.phi, shape, false);
}

RewriteReport apply_lemma22(const Graph& g, const BlockDecomposition& d,
                            const DissociationCertificate& max_set, LemmaVariant variant,
                            const RewriteSite& site) {
  const RewriteOp op = site.op;
  validate_input(op, g, &max_set);
  const auto in_d = member_mask(g.vertex_count(), max_set.set);

  const int p = vertex_role(site, g, "p");
  const int q = vertex_role(site, g, "q");
  const int r = vertex_role(site, g, "r");
  const int s = vertex_role(site, g, "s");
  const int w = vertex_role(site, g, "w");
  {
    std::set<int> uniq{p, q, r, s, w};
    if (uniq.size() != 5) fail(op, "roles p,q,r,s,w must be distinct vertices");
  }
  const int km = block_role_or_infer(site, d, "Km", {p, q, w});
  const int kn = block_role_or_infer(site, d, "Kn", {r, s, w});
  if (km == kn) fail(op, "Km and Kn must be distinct blocks");
  const int m = d.block_size(km), n = d.block_size(kn);
  if (m < 4 || n < 4) fail(op, "both blocks need at least 4 vertices");
  if (in_d[w]) fail(op, "cut vertex w must not lie in the dissociation set");
  if (block_intersection_with_set(d, km, in_d) != std::vector<int>{std::min(p, q), std::max(p, q)})
    fail(op, "Km must meet the dissociation set exactly in {p,q}");
  if (block_intersection_with_set(d, kn, in_d) != std::vector<int>{std::min(r, s), std::max(r, s)})
    fail(op, "Kn must meet the dissociation set exactly in {r,s}");

  const SpectralResult sin = spectral_radius(g);
  const auto& x = sin.perron;
  if (!geq(x[p], x[r])) fail(op, "Perron ordering requires x_p >= x_r");
  if (!geq(x[r], x[s])) fail(op, "Perron ordering requires x_r >= x_s");

  std::vector<Edge> add, remove;
  if (variant == LemmaVariant::A) {
    if (op != RewriteOp::L22A) fail(op, "site op does not match variant a");
    if (!geq(x[q], x[r])) fail(op, "variant (a) requires x_q >= x_r");
    for (int j : d.blocks[kn]) {
      if (j == r || j == s || j == w) continue;
      remove.push_back({r, j});
      remove.push_back({s, j});
      for (int i : d.blocks[km])
        if (i != w) add.push_back({i, j});
    }
  } else {
    if (op != RewriteOp::L22B) fail(op, "site op does not match variant b");
    if (!gt(x[r], x[q])) fail(op, "variant (b) requires x_r > x_q");
    for (int i : d.blocks[km])
      if (i != q && i != w) remove.push_back({q, i});
    for (int j : d.blocks[kn])
      if (j != s && j != w) remove.push_back({s, j});
    add.push_back({q, s});
    for (int i : d.blocks[km]) {
      if (i == q || i == w) continue;
      for (int j : d.blocks[kn])
        if (j != s && j != w) add.push_back({i, j});
    }
  }

  ShapeTransform shape;
  shape.remove_sizes = {m, n};
  shape.add_sizes = {m + n - 3, 3};
  Graph out = g.with_edges(add, remove);
  return build_report(g, d, std::move(out), site, sin.rho, max_set.phi, shape, false);
}

RewriteReport apply_lemma23(const Graph& g, const BlockDecomposition& d,
                            const DissociationCertificate& max_set, LemmaVariant variant,
                            const RewriteSite& site) {
  const RewriteOp op = site.op;
  validate_input(op, g, &max_set);
  const auto in_d = member_mask(g.vertex_count(), max_set.set);

  const int p = vertex_role(site, g, "p");
  const int q = vertex_role(site, g, "q");
  const int r = vertex_role(site, g, "r");
  const int w = vertex_role(site, g, "w");
  {
    std::set<int> uniq{p, q, r, w};
    if (uniq.size() != 4) fail(op, "roles p,q,r,w must be distinct vertices");
  }
  const int km = block_role_or_infer(site, d, "Km", {p, q, w});
  const int kn = block_role_or_infer(site, d, "Kn", {r, w});
  if (km == kn) fail(op, "Km and Kn must be distinct blocks");
  const int m = d.block_size(km), n = d.block_size(kn);
  if (m < 4 || n < 4) fail(op, "both blocks need at least 4 vertices");
  if (in_d[w]) fail(op, "cut vertex w must not lie in the dissociation set");
  if (block_intersection_with_set(d, km, in_d) != std::vector<int>{std::min(p, q), std::max(p, q)})
    fail(op, "Km must meet the dissociation set exactly in {p,q}");
  if (block_intersection_with_set(d, kn, in_d) != std::vector<int>{r})
    fail(op, "Kn must meet the dissociation set exactly in {r}");

  const SpectralResult sin = spectral_radius(g);
  const auto& x = sin.perron;

  std::vector<Edge> add, remove;
  if (variant == LemmaVariant::A) {
    if (op != RewriteOp::L23A) fail(op, "site op does not match variant a");
    if (!geq(x[p], x[r])) fail(op, "variant (a) requires x_p >= x_r");
    for (int j : d.blocks[kn]) {
      if (j == r || j == w) continue;
      remove.push_back({r, j});
      for (int i : d.blocks[km])
        if (i != w) add.push_back({i, j});
    }
  } else {
    if (op != RewriteOp::L23B) fail(op, "site op does not match variant b");
    if (!gt(x[r], x[p])) fail(op, "variant (b) requires x_r > x_p");
    if (!gt(x[r], x[q])) fail(op, "variant (b) requires x_r > x_q");
    for (int i : d.blocks[km]) {
      if (i == p || i == w) continue;
      remove.push_back({p, i});
      for (int j : d.blocks[kn])
        if (j != w) add.push_back({i, j});
    }
  }

  ShapeTransform shape;
  shape.remove_sizes = {m, n};
  shape.add_sizes = {m + n - 2, 2};
  Graph out = g.with_edges(add, remove);
  return build_report(g, d, std::move(out), site, sin.rho, max_set.phi, shape, false);
}

RewriteReport apply_prop22_triangle(const Graph& g, const BlockDecomposition& d,
                                    const DissociationCertificate& max_set, TriangleCase which,
                                    const RewriteSite& site) {
  const RewriteOp op = site.op;
  validate_input(op, g, &max_set);
  const auto in_d = member_mask(g.vertex_count(), max_set.set);

  const int u = vertex_role(site, g, "u");
  const int v = vertex_role(site, g, "v");
  const int w = vertex_role(site, g, "w");
  {
    std::set<int> uniq{u, v, w};
    if (uniq.size() != 3) fail(op, "roles u,v,w must be distinct vertices");
  }
  const int t = block_role_or_infer(site, d, "T", {u, v, w});
  if (d.block_size(t) != 3) fail(op, "role T must be a triangle block");
  if (d.pendant[t]) fail(op, "triangle T must not be a pendant block");
  if (!d.is_cut(u)) fail(op, "role u must be a cut vertex");
  if (!d.is_cut(v)) fail(op, "role v must be a cut vertex");
  if (d.is_cut(w)) fail(op, "role w must not be a cut vertex");
  if (!in_d[w]) fail(op, "role w must lie in the dissociation set");
  if (in_d[u] || in_d[v]) fail(op, "cut vertices u,v must not lie in the dissociation set");

  auto pick_adjacent_block = [&](const char* name, int at) {
    auto it = site.block_roles.find(name);
    if (it != site.block_roles.end()) {
      const int b = block_role(site, d, name);
      if (b == t) fail(op, std::string("role ") + name + " must differ from T");
      if (!std::binary_search(d.blocks[b].begin(), d.blocks[b].end(), at))
        fail(op, std::string("role ") + name + " must contain its cut vertex");
      return b;
    }
    std::vector<int> others;
    for (int b : d.blocks_at_cut[at])
      if (b != t) others.push_back(b);
    if (others.size() != 1)
      fail(op, std::string("role ") + name + " is ambiguous; specify the block index");
    return others[0];
  };
  const int km = pick_adjacent_block("Km", u);
  const int kn = pick_adjacent_block("Kn", v);
  if (km == kn) fail(op, "Km and Kn must be distinct blocks");
  const int n = d.block_size(kn);
  if (d.block_size(km) < 3 || n < 3) fail(op, "adjacent blocks need at least 3 vertices");
  if (block_intersection_with_set(d, km, in_d).size() != 2)
    fail(op, "Km must meet the dissociation set exactly twice");
  const auto kn_hits = block_intersection_with_set(d, kn, in_d);
  if (kn_hits.size() != 2) fail(op, "Kn must meet the dissociation set exactly twice");

  const SpectralResult sin = spectral_radius(g);
  const auto& x = sin.perron;
  if (!geq(x[u], x[v])) fail(op, "roles require x_u >= x_v (swap u and v)");

  bool all_below = true;
  for (int j : d.blocks[kn])
    if (j != v && !gt(x[w], x[j])) all_below = false;

  std::vector<Edge> add, remove;
  if (which == TriangleCase::One) {
    if (op != RewriteOp::P22TriangleCase1) fail(op, "site op does not match case 1");
    if (!all_below)
      fail(op, "case 1 requires x_j < x_w for every j in Kn\\{v} (case 2 applies)");
    int p = kn_hits[0], qh = kn_hits[1];
    if (auto it = site.vertex_roles.find("p"); it != site.vertex_roles.end()) {
      p = it->second;
      if (p != kn_hits[0] && p != kn_hits[1])
        fail(op, "role p must be one of Kn's dissociation hits");
      qh = (p == kn_hits[0]) ? kn_hits[1] : kn_hits[0];
    }
    if (auto it = site.vertex_roles.find("q");
        it != site.vertex_roles.end() && it->second != qh)
      fail(op, "role q must be Kn's other dissociation hit");
    for (int j : d.blocks[kn])
      if (j != p) remove.push_back({p, j});
    add.push_back({p, u});
    for (int j : d.blocks[kn]) {
      if (j == v || j == p) continue;
      add.push_back({u, j});
      add.push_back({w, j});
    }
  } else {
    if (op != RewriteOp::P22TriangleCase2) fail(op, "site op does not match case 2");
    if (all_below)
      fail(op, "case 2 requires some j in Kn\\{v} with x_j >= x_w (case 1 applies)");
    remove.push_back({v, w});
    for (int j : d.blocks[kn])
      if (j != v) add.push_back({u, j});
  }

  ShapeTransform shape;
  shape.remove_sizes = {3, n};
  shape.add_sizes = {n + 1, 2};
  Graph out = g.with_edges(add, remove);
  return build_report(g, d, std::move(out), site, sin.rho, max_set.phi, shape, false);
}

RewriteReport apply_cut_shift(const Graph& g, const BlockDecomposition& d,
                              const RewriteSite& site) {
  const RewriteOp op = site.op;
  if (op != RewriteOp::CutShift) fail(op, "site op does not match CUT_SHIFT");
  validate_input(op, g, nullptr);

  const int u = vertex_role(site, g, "u");
  const int v = vertex_role(site, g, "v");
  if (u == v) fail(op, "roles u and v must be distinct");
  const int h = block_role_or_infer(site, d, "H", {u, v});
  if (!d.is_cut(u)) fail(op, "role u must be a cut vertex");

  const SpectralResult sin = spectral_radius(g);
  if (!geq(sin.perron[u], sin.perron[v]))
    fail(op, "requires x_u >= x_v (swap the roles)");

  const int phi_before = dissociation_dp(g).phi;
  ShapeTransform shape;  // block multiset is unchanged

  if (!d.is_cut(v)) {
    // nothing to move: v lies only in H
    return build_report(g, d, Graph(g), site, sin.rho, phi_before, shape, true);
  }

  std::vector<Edge> add, remove;
  for (int b : d.blocks_at_cut[v]) {
    if (b == h) continue;
    for (int z : d.blocks[b])
      if (z != v) {
        remove.push_back({v, z});
        add.push_back({u, z});
      }
  }
  Graph out = g.with_edges(add, remove);
  return build_report(g, d, std::move(out), site, sin.rho, phi_before, shape, true);
}

RewriteReport apply_rewrite(const Graph& g, const BlockDecomposition& d,
                            const DissociationCertificate& max_set, const RewriteSite& site) {
  switch (site.op) {
    case RewriteOp::P21MergeEmpty:
      return apply_prop21(g, d, max_set, Prop21Variant::I, site);
    case RewriteOp::P21MergeAtCut:
      return apply_prop21(g, d, max_set, Prop21Variant::II, site);
    case RewriteOp::P21MergeSingleHit:
      return apply_prop21(g, d, max_set, Prop21Variant::III, site);
    case RewriteOp::L22A:
      return apply_lemma22(g, d, max_set, LemmaVariant::A, site);
    case RewriteOp::L22B:
      return apply_lemma22(g, d, max_set, LemmaVariant::B, site);
    case RewriteOp::L23A:
      return apply_lemma23(g, d, max_set, LemmaVariant::A, site);
    case RewriteOp::L23B:
      return apply_lemma23(g, d, max_set, LemmaVariant::B, site);
    case RewriteOp::P22TriangleCase1:
      return apply_prop22_triangle(g, d, max_set, TriangleCase::One, site);
    case RewriteOp::P22TriangleCase2:
      return apply_prop22_triangle(g, d, max_set, TriangleCase::Two, site);
    case RewriteOp::CutShift:
      return apply_cut_shift(g, d, site);
  }
  throw RewritePreconditionError("unknown rewrite operation");
}

std::string rewrite_report_json(const RewriteReport& r) {
  nlohmann::json j;
  j["operation"] = to_string(r.site.op);
  j["site"]["vertices"] = r.site.vertex_roles;
  j["site"]["blocks"] = r.site.block_roles;
  j["rho_before"] = r.rho_before;
  j["rho_after"] = r.rho_after;
  j["phi_before"] = r.phi_before;
  j["phi_after"] = r.phi_after;
  j["rho_strict_expected"] = r.rho_strict_expected;
  j["verdicts"] = {
      {"connected", r.verdicts.connected},
      {"block_graph", r.verdicts.block_graph},
      {"vertex_count_preserved", r.verdicts.vertex_count_preserved},
      {"phi_preserved", r.verdicts.phi_preserved},
      {"rho_increased", r.verdicts.rho_increased},
      {"shape_ok", r.verdicts.shape_ok},
  };
  j["contract_ok"] = r.contract_ok;
  nlohmann::json edges = nlohmann::json::array();
  for (auto [a, b] : r.output.edges()) edges.push_back({a, b});
  j["output"] = {{"vertex_count", r.output.vertex_count()}, {"edges", edges}};
  return j.dump();
}

}  // namespace blockspectra
