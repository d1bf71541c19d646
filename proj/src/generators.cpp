#include "blockspectra/generators.hpp"

#include <algorithm>
#include <functional>

#include "blockspectra/spectral.hpp"

namespace blockspectra {

DissociationCertificate max_dissociation_excluding(const Graph& g,
                                                   const std::vector<int>& forbidden) {
  const int n = g.vertex_count();
  std::vector<char> banned(n, 0);
  for (int v : forbidden) banned.at(v) = 1;

  std::vector<char> chosen(n, 0);
  std::vector<int> chosen_deg(n, 0);
  std::vector<int> current, best;

  std::function<void(int)> rec = [&](int v) {
    if (static_cast<int>(current.size()) + (n - v) <= static_cast<int>(best.size())) return;
    if (v == n) {
      if (current.size() > best.size()) best = current;
      return;
    }
    if (!banned[v]) {
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
    }
    rec(v + 1);
  };
  rec(0);

  DissociationCertificate cert;
  cert.set = best;
  cert.phi = static_cast<int>(best.size());
  std::vector<char> in(n, 0);
  for (int v : best) in[v] = 1;
  for (int v : best) {
    int deg = 0;
    for (int w : g.neighbors(v)) deg += in[w];
    cert.induced_degrees.push_back(deg);
  }
  return cert;
}

namespace {

constexpr int kMaxAttempts = 400;
constexpr int kVertexBudget = 14;

int pick(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

struct Builder {
  int n = 0;
  std::vector<Edge> edges;

  int add_vertex() { return n++; }

  // clique on `base` plus `extra` fresh vertices; returns the fresh ones
  std::vector<int> add_clique(const std::vector<int>& base, int extra) {
    std::vector<int> fresh;
    std::vector<int> all = base;
    for (int i = 0; i < extra; ++i) {
      const int v = add_vertex();
      fresh.push_back(v);
      all.push_back(v);
    }
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j)
        if (!has(all[i], all[j])) edges.push_back({std::min(all[i], all[j]), std::max(all[i], all[j])});
    return fresh;
  }

  bool has(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::find(edges.begin(), edges.end(), Edge{a, b}) != edges.end();
  }

  Graph build() const { return Graph::from_edge_list(n, edges); }
};

int block_index_of(const BlockDecomposition& d, const std::vector<int>& verts) {
  for (int b = 0; b < static_cast<int>(d.blocks.size()); ++b) {
    bool all = true;
    for (int v : verts)
      all = all && std::binary_search(d.blocks[b].begin(), d.blocks[b].end(), v);
    if (all) return b;
  }
  return -1;
}

std::vector<int> in_set_of_block(const BlockDecomposition& d, int b, const std::vector<int>& set) {
  std::vector<int> out;
  for (int v : d.blocks[b])
    if (std::binary_search(set.begin(), set.end(), v)) out.push_back(v);
  return out;
}

bool geq(double a, double b) { return a - b >= -kPerronSlack; }
bool gt(double a, double b) { return a - b > kPerronSlack; }

struct Candidate {
  Graph graph;
  BlockDecomposition decomposition;
  DissociationCertificate cert;
  SpectralResult spectral;
};

// Assembles graph-level data; returns false if the certificate obtained under
// the exclusions is not maximum.
bool finish(Builder& b, const std::vector<int>& exclude, Candidate& out) {
  out.graph = b.build();
  out.decomposition = block_decomposition(out.graph);
  const int phi = dissociation_dp(out.graph).phi;
  out.cert = exclude.empty() ? dissociation_brute(out.graph)
                             : max_dissociation_excluding(out.graph, exclude);
  if (out.cert.phi != phi) return false;
  out.spectral = spectral_radius(out.graph);
  return true;
}

bool gen_p21_merge_empty(std::mt19937_64& rng, RewriteInstance& inst) {
  Builder b;
  const int base_size = pick(rng, 2, 4);
  std::vector<int> base;
  for (int i = 0; i < base_size; ++i) base.push_back(b.add_vertex());
  b.add_clique(base, 0);
  for (int v : base) b.add_clique({v}, 2);  // pendant triangle at every base vertex
  if (b.n + 2 <= kVertexBudget && pick(rng, 0, 1))
    b.add_clique({base[static_cast<std::size_t>(pick(rng, 0, base_size - 1))]},
                 pick(rng, 1, 2));

  Candidate c;
  if (!finish(b, {}, c)) return false;
  const int bidx = block_index_of(c.decomposition, base);
  if (bidx < 0) return false;
  if (!in_set_of_block(c.decomposition, bidx, c.cert.set).empty()) return false;

  // adjacent block via a random cut vertex of B
  const auto& cuts = c.decomposition.cuts_in_block[bidx];
  if (cuts.empty()) return false;
  const int cv = cuts[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(cuts.size()) - 1))];
  std::vector<int> adj;
  for (int blk : c.decomposition.blocks_at_cut[cv])
    if (blk != bidx) adj.push_back(blk);
  if (adj.empty()) return false;
  const int cidx = adj[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(adj.size()) - 1))];

  inst.graph = c.graph;
  inst.decomposition = c.decomposition;
  inst.max_set = c.cert;
  inst.site.op = RewriteOp::P21MergeEmpty;
  inst.site.block_roles = {{"B", bidx}, {"C", cidx}};
  inst.site.vertex_roles = {};
  return true;
}

bool gen_p21_merge_at_cut(std::mt19937_64& rng, RewriteInstance& inst) {
  Builder b;
  const int len = pick(rng, 4, 8);
  for (int i = 0; i < len; ++i) b.add_vertex();
  for (int i = 0; i + 1 < len; ++i) b.edges.push_back({i, i + 1});
  const int leaves = pick(rng, 0, std::min(3, kVertexBudget - len));
  for (int i = 0; i < leaves; ++i) {
    const int at = pick(rng, 0, len - 1);
    b.add_clique({at}, 1);
  }

  Candidate c;
  if (!finish(b, {}, c)) return false;
  std::vector<int> cuts_in_d;
  for (int v : c.cert.set)
    if (c.decomposition.is_cut(v)) cuts_in_d.push_back(v);
  if (cuts_in_d.empty()) return false;
  const int u =
      cuts_in_d[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(cuts_in_d.size()) - 1))];

  inst.graph = c.graph;
  inst.decomposition = c.decomposition;
  inst.max_set = c.cert;
  inst.site.op = RewriteOp::P21MergeAtCut;
  inst.site.vertex_roles = {{"u", u}};
  inst.site.block_roles = {};
  return true;
}

bool gen_p21_merge_single_hit(std::mt19937_64& rng, RewriteInstance& inst) {
  Builder b;
  const int w = b.add_vertex();
  std::vector<std::vector<int>> sides;  // full vertex list of B1, B2
  for (int side = 0; side < 2; ++side) {
    if (pick(rng, 0, 1) == 0) {
      const auto fresh = b.add_clique({w}, 1);  // K2 block
      sides.push_back({w, fresh[0]});
    } else {
      const auto fresh = b.add_clique({w}, 2);  // triangle
      const int anchor = fresh[0];
      b.add_clique({anchor}, pick(rng, 2, 3));  // pendant load keeps anchor out of D
      sides.push_back({w, fresh[0], fresh[1]});
    }
  }
  if (b.n > kVertexBudget) return false;

  Candidate c;
  if (!finish(b, {w}, c)) return false;
  const int b1 = block_index_of(c.decomposition, sides[0]);
  const int b2 = block_index_of(c.decomposition, sides[1]);
  if (b1 < 0 || b2 < 0 || b1 == b2) return false;
  for (int blk : {b1, b2}) {
    const auto hits = in_set_of_block(c.decomposition, blk, c.cert.set);
    if (hits.size() != 1 || c.decomposition.is_cut(hits[0])) return false;
  }

  inst.graph = c.graph;
  inst.decomposition = c.decomposition;
  inst.max_set = c.cert;
  inst.site.op = RewriteOp::P21MergeSingleHit;
  inst.site.block_roles = {{"B1", b1}, {"B2", b2}};
  inst.site.vertex_roles = {};
  return true;
}

// Shared scaffolding for the two-clique lemmas: K_m and K_n joined at w.
struct TwoCliques {
  int w = 0;
  std::vector<int> km, kn;  // full vertex lists
};

TwoCliques make_two_cliques(Builder& b, int m, int n) {
  TwoCliques t;
  t.w = b.add_vertex();
  t.km = {t.w};
  for (int v : b.add_clique({t.w}, m - 1)) t.km.push_back(v);
  t.kn = {t.w};
  for (int v : b.add_clique({t.w}, n - 1)) t.kn.push_back(v);
  return t;
}

bool gen_l22a(std::mt19937_64& rng, RewriteInstance& inst) {
  Builder b;
  const int m = pick(rng, 4, 6);
  const int n = pick(rng, 4, m);
  TwoCliques t = make_two_cliques(b, m, n);
  if (b.n + 2 <= kVertexBudget && pick(rng, 0, 1))
    b.add_clique({t.w}, pick(rng, 1, 2));  // optional pendant at w

  Candidate c;
  if (!finish(b, {t.w}, c)) return false;
  const int km = block_index_of(c.decomposition, t.km);
  const int kn = block_index_of(c.decomposition, t.kn);
  if (km < 0 || kn < 0) return false;
  const auto hm = in_set_of_block(c.decomposition, km, c.cert.set);
  const auto hn = in_set_of_block(c.decomposition, kn, c.cert.set);
  if (hm.size() != 2 || hn.size() != 2) return false;

  const auto& x = c.spectral.perron;
  const int p = x[hm[0]] >= x[hm[1]] ? hm[0] : hm[1];
  const int q = hm[0] + hm[1] - p;
  const int r = x[hn[0]] >= x[hn[1]] ? hn[0] : hn[1];
  const int s = hn[0] + hn[1] - r;
  if (!geq(x[p], x[r]) || !geq(x[r], x[s]) || !geq(x[q], x[r])) return false;

  inst.graph = c.graph;
  inst.decomposition = c.decomposition;
  inst.max_set = c.cert;
  inst.site.op = RewriteOp::L22A;
  inst.site.vertex_roles = {{"p", p}, {"q", q}, {"r", r}, {"s", s}, {"w", t.w}};
  inst.site.block_roles = {{"Km", km}, {"Kn", kn}};
  return true;
}

bool gen_l22b(std::mt19937_64& rng, RewriteInstance& inst) {
  Builder b;
  const int m = pick(rng, 4, 5);
  const int n = pick(rng, 4, 5);
  const int heavy = pick(rng, 4, 5);
  const int light = pick(rng, 2, 3);
  if (m + n - 1 + heavy + light > kVertexBudget) return false;
  TwoCliques t = make_two_cliques(b, m, n);

  // bridge + heavy pendant at a Km interior boosts x_p above everything
  const int p = t.km[1];
  const int zp = b.add_clique({p}, 1)[0];
  b.add_clique({zp}, heavy - 1);
  // bridge + light pendant at a Kn interior lifts x_r above plain interiors
  const int r = t.kn[1];
  const int zr = b.add_clique({r}, 1)[0];
  b.add_clique({zr}, light - 1);

  Candidate c;
  if (!finish(b, {t.w, zp, zr}, c)) return false;
  const int km = block_index_of(c.decomposition, t.km);
  const int kn = block_index_of(c.decomposition, t.kn);
  if (km < 0 || kn < 0) return false;
  const auto hm = in_set_of_block(c.decomposition, km, c.cert.set);
  const auto hn = in_set_of_block(c.decomposition, kn, c.cert.set);
  if (hm.size() != 2 || hn.size() != 2) return false;
  if (!std::binary_search(hm.begin(), hm.end(), p)) return false;
  if (!std::binary_search(hn.begin(), hn.end(), r)) return false;
  const int q = hm[0] == p ? hm[1] : hm[0];
  const int s = hn[0] == r ? hn[1] : hn[0];

  const auto& x = c.spectral.perron;
  if (!geq(x[p], x[r]) || !geq(x[r], x[s]) || !gt(x[r], x[q])) return false;

  inst.graph = c.graph;
  inst.decomposition = c.decomposition;
  inst.max_set = c.cert;
  inst.site.op = RewriteOp::L22B;
  inst.site.vertex_roles = {{"p", p}, {"q", q}, {"r", r}, {"s", s}, {"w", t.w}};
  inst.site.block_roles = {{"Km", km}, {"Kn", kn}};
  return true;
}

// Kn = K4 at w whose two non-designated interiors carry pendant triangles,
// forcing |Kn ∩ D| = {r}.
struct LoadedK4 {
  int r = 0;
  std::vector<int> kn;
  std::vector<int> blocked;  // the two loaded interiors
};

LoadedK4 make_loaded_k4(Builder& b, int w) {
  LoadedK4 out;
  auto fresh = b.add_clique({w}, 3);
  out.kn = {w, fresh[0], fresh[1], fresh[2]};
  out.r = fresh[0];
  out.blocked = {fresh[1], fresh[2]};
  for (int cvert : out.blocked) b.add_clique({cvert}, 2);
  return out;
}

bool gen_l23a(std::mt19937_64& rng, RewriteInstance& inst) {
  Builder b;
  const int m = pick(rng, 5, 7);
  const int w = b.add_vertex();
  std::vector<int> km{w};
  for (int v : b.add_clique({w}, m - 1)) km.push_back(v);
  LoadedK4 lk = make_loaded_k4(b, w);
  if (b.n > kVertexBudget) return false;

  Candidate c;
  if (!finish(b, {w}, c)) return false;
  const int kmi = block_index_of(c.decomposition, km);
  const int kni = block_index_of(c.decomposition, lk.kn);
  if (kmi < 0 || kni < 0) return false;
  const auto hm = in_set_of_block(c.decomposition, kmi, c.cert.set);
  const auto hn = in_set_of_block(c.decomposition, kni, c.cert.set);
  if (hm.size() != 2 || hn != std::vector<int>{lk.r}) return false;

  const auto& x = c.spectral.perron;
  const int p = x[hm[0]] >= x[hm[1]] ? hm[0] : hm[1];
  const int q = hm[0] + hm[1] - p;
  if (!geq(x[p], x[lk.r])) return false;

  inst.graph = c.graph;
  inst.decomposition = c.decomposition;
  inst.max_set = c.cert;
  inst.site.op = RewriteOp::L23A;
  inst.site.vertex_roles = {{"p", p}, {"q", q}, {"r", lk.r}, {"w", w}};
  inst.site.block_roles = {{"Km", kmi}, {"Kn", kni}};
  return true;
}

bool gen_l23b(std::mt19937_64& rng, RewriteInstance& inst) {
  Builder b;
  const int w = b.add_vertex();
  std::vector<int> km{w};
  for (int v : b.add_clique({w}, 3)) km.push_back(v);  // bare K4
  LoadedK4 lk = make_loaded_k4(b, w);
  // bridge + pendant at r pushes x_r above the bare-K4 interiors
  const int zr = b.add_clique({lk.r}, 1)[0];
  b.add_clique({zr}, pick(rng, 1, 2));
  if (b.n > kVertexBudget) return false;

  Candidate c;
  if (!finish(b, {w, zr}, c)) return false;
  const int kmi = block_index_of(c.decomposition, km);
  const int kni = block_index_of(c.decomposition, lk.kn);
  if (kmi < 0 || kni < 0) return false;
  const auto hm = in_set_of_block(c.decomposition, kmi, c.cert.set);
  const auto hn = in_set_of_block(c.decomposition, kni, c.cert.set);
  if (hm.size() != 2 || hn != std::vector<int>{lk.r}) return false;
  const int p = hm[0], q = hm[1];

  const auto& x = c.spectral.perron;
  if (!gt(x[lk.r], x[p]) || !gt(x[lk.r], x[q])) return false;

  inst.graph = c.graph;
  inst.decomposition = c.decomposition;
  inst.max_set = c.cert;
  inst.site.op = RewriteOp::L23B;
  inst.site.vertex_roles = {{"p", p}, {"q", q}, {"r", lk.r}, {"w", w}};
  inst.site.block_roles = {{"Km", kmi}, {"Kn", kni}};
  return true;
}

bool gen_p22(std::mt19937_64& rng, bool case1, RewriteInstance& inst) {
  Builder b;
  const int u = b.add_vertex();
  const int v = b.add_vertex();
  const int w = b.add_vertex();
  b.edges.push_back({u, v});
  b.edges.push_back({u, w});
  b.edges.push_back({v, w});
  int m, n;
  if (case1) {
    m = pick(rng, 5, 8);
    n = 3;
  } else {
    n = pick(rng, 4, 5);
    m = pick(rng, n, std::min(6, kVertexBudget + 3 - n - 2));
  }
  std::vector<int> km{u};
  for (int z : b.add_clique({u}, m - 1)) km.push_back(z);
  std::vector<int> kn{v};
  for (int z : b.add_clique({v}, n - 1)) kn.push_back(z);
  if (b.n > kVertexBudget) return false;

  Candidate c;
  if (!finish(b, {u, v}, c)) return false;
  const int t = block_index_of(c.decomposition, {u, v, w});
  const int kmi = block_index_of(c.decomposition, km);
  const int kni = block_index_of(c.decomposition, kn);
  if (t < 0 || kmi < 0 || kni < 0) return false;
  if (!std::binary_search(c.cert.set.begin(), c.cert.set.end(), w)) return false;
  if (in_set_of_block(c.decomposition, kmi, c.cert.set).size() != 2) return false;
  const auto hn = in_set_of_block(c.decomposition, kni, c.cert.set);
  if (hn.size() != 2) return false;

  const auto& x = c.spectral.perron;
  if (!geq(x[u], x[v])) return false;
  bool all_below = true;
  for (int j : kn)
    if (j != v && !gt(x[w], x[j])) all_below = false;
  if (case1 != all_below) return false;

  inst.graph = c.graph;
  inst.decomposition = c.decomposition;
  inst.max_set = c.cert;
  inst.site.op = case1 ? RewriteOp::P22TriangleCase1 : RewriteOp::P22TriangleCase2;
  inst.site.vertex_roles = {{"u", u}, {"v", v}, {"w", w}};
  if (case1) {
    inst.site.vertex_roles["p"] = hn[0];
    inst.site.vertex_roles["q"] = hn[1];
  }
  inst.site.block_roles = {{"T", t}, {"Km", kmi}, {"Kn", kni}};
  return true;
}

bool gen_cut_shift(std::mt19937_64& rng, RewriteInstance& inst) {
  Builder b;
  const int hsize = pick(rng, 4, 5);
  std::vector<int> h;
  for (int i = 0; i < hsize; ++i) h.push_back(b.add_vertex());
  b.add_clique(h, 0);
  const int pu = h[0], pv = h[1];
  const int blocks_u = pick(rng, 1, 2);
  const int blocks_v = pick(rng, 0, 2);
  for (int i = 0; i < blocks_u; ++i) {
    if (b.n + 2 > kVertexBudget) break;
    b.add_clique({pu}, pick(rng, 1, 2));
  }
  for (int i = 0; i < blocks_v; ++i) {
    if (b.n + 3 > kVertexBudget) break;
    b.add_clique({pv}, pick(rng, 1, 3));
  }
  if (b.n > kVertexBudget) return false;

  Candidate c;
  if (!finish(b, {}, c)) return false;
  if (!c.decomposition.is_cut(pu) && !c.decomposition.is_cut(pv)) return false;

  const auto& x = c.spectral.perron;
  int u = pu, v = pv;
  if (!geq(x[u], x[v])) std::swap(u, v);
  if (!geq(x[u], x[v])) return false;
  if (!c.decomposition.is_cut(u)) return false;

  inst.graph = c.graph;
  inst.decomposition = c.decomposition;
  inst.max_set = c.cert;
  inst.site.op = RewriteOp::CutShift;
  inst.site.vertex_roles = {{"u", u}, {"v", v}};
  inst.site.block_roles = {{"H", block_index_of(c.decomposition, {u, v})}};
  return true;
}

}  // namespace

RewriteInstance generate_rewrite_instance(RewriteOp op, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    RewriteInstance inst;
    bool ok = false;
    switch (op) {
      case RewriteOp::P21MergeEmpty: ok = gen_p21_merge_empty(rng, inst); break;
      case RewriteOp::P21MergeAtCut: ok = gen_p21_merge_at_cut(rng, inst); break;
      case RewriteOp::P21MergeSingleHit: ok = gen_p21_merge_single_hit(rng, inst); break;
      case RewriteOp::L22A: ok = gen_l22a(rng, inst); break;
      case RewriteOp::L22B: ok = gen_l22b(rng, inst); break;
      case RewriteOp::L23A: ok = gen_l23a(rng, inst); break;
      case RewriteOp::L23B: ok = gen_l23b(rng, inst); break;
      case RewriteOp::P22TriangleCase1: ok = gen_p22(rng, true, inst); break;
      case RewriteOp::P22TriangleCase2: ok = gen_p22(rng, false, inst); break;
      case RewriteOp::CutShift: ok = gen_cut_shift(rng, inst); break;
    }
    if (ok) return inst;
  }
  throw std::runtime_error(std::string("instance generator for ") + to_string(op) +
                           " failed to satisfy its preconditions");
}

}  // namespace blockspectra
