#include "blockspectra/dissociation.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>

namespace blockspectra {

namespace {

std::vector<int> induced_degrees_of(const Graph& g, const std::vector<int>& set) {
  std::vector<char> in(g.vertex_count(), 0);
  for (int v : set) in[v] = 1;
  std::vector<int> deg;
  deg.reserve(set.size());
  for (int v : set) {
    int d = 0;
    for (int w : g.neighbors(v)) d += in[w];
    deg.push_back(d);
  }
  return deg;
}

}  // namespace

bool is_dissociation_set(const Graph& g, const std::vector<int>& d) {
  for (int v : d)
    if (v < 0 || v >= g.vertex_count())
      throw DissociationError("vertex " + std::to_string(v) + " out of range");
  for (int deg : induced_degrees_of(g, d))
    if (deg > 1) return false;
  return true;
}

DissociationCertificate dissociation_brute(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 26) throw DissociationError("brute-force dissociation is capped at 26 vertices");

  std::vector<char> chosen(n, 0);
  std::vector<int> chosen_deg(n, 0);
  std::vector<int> current, best;
  current.reserve(n);

  // Include-first DFS in ascending vertex order visits subsets in
  // lexicographic order, so the first maximum found is the lex-least one.
  std::function<void(int)> rec = [&](int v) {
    if (static_cast<int>(current.size()) + (n - v) <= static_cast<int>(best.size())) return;
    if (v == n) {
      if (current.size() > best.size()) best = current;
      return;
    }
    int nb_in = 0;
    bool ok = true;
    for (int w : g.neighbors(v)) {
      if (!chosen[w]) continue;
      ++nb_in;
      if (nb_in > 1 || chosen_deg[w] >= 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      chosen[v] = 1;
      chosen_deg[v] = nb_in;
      for (int w : g.neighbors(v))
        if (chosen[w] && w != v) ++chosen_deg[w];
      current.push_back(v);
      rec(v + 1);
      current.pop_back();
      for (int w : g.neighbors(v))
        if (chosen[w] && w != v) --chosen_deg[w];
      chosen[v] = 0;
      chosen_deg[v] = 0;
    }
    rec(v + 1);
  };
  rec(0);

  DissociationCertificate cert;
  cert.set = best;
  cert.phi = static_cast<int>(best.size());
  cert.induced_degrees = induced_degrees_of(g, best);
  return cert;
}

// ---------------------------------------------------------------------------
// Block-cut-tree dynamic program.
//
// The tree alternates blocks and cut vertices; we root it at block 0. For a
// cut vertex v, f[v][s] is the best count in v's subtree with
//   s = 0: v excluded, 1: v in D with no chosen neighbor yet,
//   2: v in D with its one allowed neighbor already chosen below.
// A block contributes at most two chosen vertices (three would induce degree
// two inside the clique) and a chosen pair saturates both members.
// ---------------------------------------------------------------------------

namespace {

constexpr int kNegInf = std::numeric_limits<int>::min() / 4;

struct BlockOption {
  int value = kNegInf;
  int interiors_chosen = 0;
  // chosen child cuts with the state they take below (1 = IN0, 2 = IN1)
  std::vector<std::pair<int, int>> cut_choices;
};

struct DpContext {
  std::vector<std::vector<int>> child_cuts_of_block;
  std::vector<std::vector<int>> child_blocks_of_cut;  // indexed by vertex
  std::vector<std::vector<int>> interiors_of_block;
  std::vector<std::array<int, 3>> f;                      // per vertex
  std::vector<std::array<BlockOption, 3>> block_options;  // per block, by parent state
  std::vector<int> in1_upgraded_block;                    // per vertex
};

// Best assignment inside block b given the parent cut vertex's state ws
// (0 parent excluded, 1 parent chosen with no partner here, 2 parent chosen
// taking its one partner here). The root block uses ws = 0.
BlockOption solve_block(DpContext& ctx, int b, int ws) {
  const auto& cuts = ctx.child_cuts_of_block[b];
  const int m = static_cast<int>(ctx.interiors_of_block[b].size());
  const int t = static_cast<int>(cuts.size());

  int base = 0;
  for (int c : cuts) base += ctx.f[c][0];

  auto gain_free = [&](int i) {  // chosen with no partner inside this block
    int c = cuts[i];
    return std::max(ctx.f[c][1], ctx.f[c][2]) - ctx.f[c][0];
  };
  auto gain_paired = [&](int i) {  // chosen with a partner inside this block
    int c = cuts[i];
    return ctx.f[c][1] - ctx.f[c][0];
  };
  auto state_for_free = [&](int i) {
    return ctx.f[cuts[i]][2] > ctx.f[cuts[i]][1] ? 2 : 1;
  };

  BlockOption best;
  auto consider = [&](int value, int ints, std::vector<std::pair<int, int>> cc) {
    if (value > best.value) {
      best.value = value;
      best.interiors_chosen = ints;
      best.cut_choices = std::move(cc);
    }
  };

  if (ws == 0) {
    consider(base, 0, {});
    if (m >= 1) consider(base + 1, 1, {});
    for (int i = 0; i < t; ++i)
      consider(base + gain_free(i), 0, {{cuts[i], state_for_free(i)}});
    if (m >= 2) consider(base + 2, 2, {});
    if (m >= 1)
      for (int i = 0; i < t; ++i)
        consider(base + 1 + gain_paired(i), 1, {{cuts[i], 1}});
    for (int i = 0; i < t; ++i)
      for (int j = i + 1; j < t; ++j)
        consider(base + gain_paired(i) + gain_paired(j), 0, {{cuts[i], 1}, {cuts[j], 1}});
  } else if (ws == 1) {
    consider(base, 0, {});
  } else {
    if (m >= 1) consider(base + 1, 1, {});
    for (int i = 0; i < t; ++i)
      consider(base + gain_paired(i), 0, {{cuts[i], 1}});
  }
  return best;
}

void solve_cut(DpContext& ctx, int v);

void solve_block_subtree(DpContext& ctx, int b) {
  for (int c : ctx.child_cuts_of_block[b]) solve_cut(ctx, c);
  for (int ws = 0; ws < 3; ++ws) ctx.block_options[b][ws] = solve_block(ctx, b, ws);
}

void solve_cut(DpContext& ctx, int v) {
  for (int b : ctx.child_blocks_of_cut[v]) solve_block_subtree(ctx, b);
  const auto& kids = ctx.child_blocks_of_cut[v];
  int sum_out = 0, sum_in0 = 0;
  for (int b : kids) {
    sum_out += ctx.block_options[b][0].value;
    sum_in0 += ctx.block_options[b][1].value;
  }
  ctx.f[v][0] = sum_out;
  ctx.f[v][1] = 1 + sum_in0;
  int best_in1 = kNegInf, best_b = -1;
  for (int b : kids) {
    const int up = ctx.block_options[b][2].value;
    if (up == kNegInf) continue;
    const int cand = 1 + sum_in0 - ctx.block_options[b][1].value + up;
    if (cand > best_in1) {
      best_in1 = cand;
      best_b = b;
    }
  }
  ctx.f[v][2] = best_in1;
  ctx.in1_upgraded_block[v] = best_b;
}

void collect_cut(DpContext& ctx, int v, int state, std::vector<int>& out);

void collect_block(DpContext& ctx, int b, int ws, std::vector<int>& out) {
  const BlockOption& opt = ctx.block_options[b][ws];
  for (int i = 0; i < opt.interiors_chosen; ++i)
    out.push_back(ctx.interiors_of_block[b][i]);
  for (auto [c, st] : opt.cut_choices) out.push_back(c);
  for (int c : ctx.child_cuts_of_block[b]) {
    int st = 0;
    for (auto [cc, s] : opt.cut_choices)
      if (cc == c) st = s;
    collect_cut(ctx, c, st, out);
  }
}

void collect_cut(DpContext& ctx, int v, int state, std::vector<int>& out) {
  for (int b : ctx.child_blocks_of_cut[v]) {
    int ws;
    if (state == 0)
      ws = 0;
    else if (state == 1)
      ws = 1;
    else
      ws = (b == ctx.in1_upgraded_block[v]) ? 2 : 1;
    collect_block(ctx, b, ws, out);
  }
}

}  // namespace

DissociationCertificate dissociation_dp(const Graph& g) {
  if (!g.is_connected()) throw DissociationError("dissociation DP requires a connected graph");
  if (!is_block_graph(g)) throw DissociationError("dissociation DP requires a block graph");
  const BlockDecomposition d = block_decomposition(g);
  const int n = g.vertex_count();
  const int nb = static_cast<int>(d.blocks.size());

  DpContext ctx;
  ctx.child_cuts_of_block.assign(nb, {});
  ctx.child_blocks_of_cut.assign(n, {});
  ctx.interiors_of_block.assign(nb, {});
  ctx.f.assign(n, {kNegInf, kNegInf, kNegInf});
  ctx.block_options.assign(nb, {});
  ctx.in1_upgraded_block.assign(n, -1);

  // Root the block-cut tree at block 0 by BFS.
  std::vector<int> parent_cut_of_block(nb, -1);
  std::vector<char> block_seen(nb, 0);
  std::vector<int> order{0};
  block_seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int b = order[i];
    for (int v : d.cuts_in_block[b]) {
      if (v == parent_cut_of_block[b]) continue;
      ctx.child_cuts_of_block[b].push_back(v);
      for (int b2 : d.blocks_at_cut[v])
        if (!block_seen[b2]) {
          block_seen[b2] = 1;
          parent_cut_of_block[b2] = v;
          ctx.child_blocks_of_cut[v].push_back(b2);
          order.push_back(b2);
        }
    }
  }
  for (int b = 0; b < nb; ++b)
    for (int v : d.blocks[b])
      if (!d.is_cut(v)) ctx.interiors_of_block[b].push_back(v);

  solve_block_subtree(ctx, 0);
  const int phi = ctx.block_options[0][0].value;

  std::vector<int> set;
  collect_block(ctx, 0, 0, set);
  std::sort(set.begin(), set.end());

  DissociationCertificate cert;
  cert.set = std::move(set);
  cert.phi = phi;
  cert.induced_degrees = induced_degrees_of(g, cert.set);
  if (static_cast<int>(cert.set.size()) != phi)
    throw DissociationError("internal: DP traceback size mismatch");
  return cert;
}

// ---------------------------------------------------------------------------

namespace {

int max_independent_set(const std::vector<uint32_t>& nbr, uint32_t candidates) {
  if (candidates == 0) return 0;
  int best_v = -1, best_deg = -1;
  for (uint32_t rest = candidates; rest;) {
    const int v = std::countr_zero(rest);
    rest &= rest - 1;
    const int deg = std::popcount(nbr[v] & candidates);
    if (deg > best_deg) {
      best_deg = deg;
      best_v = v;
    }
  }
  if (best_deg <= 1) {
    // matching plus isolated vertices: one pick per component
    int count = 0;
    uint32_t rest = candidates;
    while (rest) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      ++count;
      rest &= ~nbr[v];
    }
    return count;
  }
  const uint32_t bit = 1u << best_v;
  const int with = 1 + max_independent_set(nbr, candidates & ~(nbr[best_v] | bit));
  const int without = max_independent_set(nbr, candidates & ~bit);
  return std::max(with, without);
}

// Vertex-disjoint packing of 3-vertex paths; each one forces a deletion.
int p3_packing_bound(const std::vector<uint32_t>& nbr, uint32_t alive) {
  int count = 0;
  uint32_t rest = alive;
  bool progress = true;
  while (progress) {
    progress = false;
    for (uint32_t scan = rest; scan;) {
      const int u = std::countr_zero(scan);
      scan &= scan - 1;
      uint32_t nn = nbr[u] & rest;
      if (std::popcount(nn) >= 2) {
        const int a = std::countr_zero(nn);
        nn &= nn - 1;
        const int b = std::countr_zero(nn);
        rest &= ~((1u << u) | (1u << a) | (1u << b));
        ++count;
        progress = true;
        break;
      }
    }
  }
  return count;
}

// Minimum size of a set meeting every path on three vertices; returns the
// true minimum if it is below `limit`, otherwise any value >= limit.
int min_p3_cover(const std::vector<uint32_t>& nbr, uint32_t alive, int limit) {
  int u = -1, a = -1, b = -1;
  for (uint32_t rest = alive; rest;) {
    const int v = std::countr_zero(rest);
    rest &= rest - 1;
    uint32_t nn = nbr[v] & alive;
    if (std::popcount(nn) >= 2) {
      u = v;
      a = std::countr_zero(nn);
      nn &= nn - 1;
      b = std::countr_zero(nn);
      break;
    }
  }
  if (u < 0) return 0;
  if (limit <= p3_packing_bound(nbr, alive)) return limit;
  int best = limit;
  for (int x : {u, a, b}) {
    const int sub = min_p3_cover(nbr, alive & ~(1u << x), best - 1);
    if (1 + sub < best) best = 1 + sub;
  }
  return best;
}

}  // namespace

CoverReport cover_report(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 22) throw DissociationError("cover report is capped at 22 vertices");

  std::vector<uint32_t> nbr(n, 0);
  for (auto [u, v] : g.edges()) {
    nbr[u] |= 1u << v;
    nbr[v] |= 1u << u;
  }

  CoverReport r;
  r.n = n;
  const uint32_t all = n == 0 ? 0u : ((1u << n) - 1);
  r.alpha = max_independent_set(nbr, all);
  r.phi = dissociation_brute(g).phi;
  r.psi2 = n - r.alpha;
  r.psi3 = min_p3_cover(nbr, all, n);
  if (r.psi3 + r.phi != n)
    throw DissociationError("internal: direct psi3 disagrees with n - phi");
  return r;
}

}  // namespace blockspectra
