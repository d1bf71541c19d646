#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <json.hpp>

#include "blockspectra/canonical.hpp"
#include "blockspectra/constructions.hpp"
#include "blockspectra/generators.hpp"
#include "blockspectra/rewrites.hpp"
#include "blockspectra/spectral.hpp"
#include "oracles.hpp"

using namespace blockspectra;

namespace {

struct Prepared {
  Graph g;
  BlockDecomposition d;
  DissociationCertificate cert;
};

Prepared prepare(const Graph& g) { return {g, block_decomposition(g), dissociation_brute(g)}; }

int block_of(const BlockDecomposition& d, std::vector<int> verts) {
  std::sort(verts.begin(), verts.end());
  for (int b = 0; b < static_cast<int>(d.blocks.size()); ++b)
    if (d.blocks[b] == verts) return b;
  return -1;
}

// K_m and K_n joined at w = 0; K_m interiors come first
Graph two_cliques(int m, int n) {
  std::vector<Edge> e;
  std::vector<int> km{0}, kn{0};
  for (int i = 1; i <= m - 1; ++i) km.push_back(i);
  for (int i = m; i <= m + n - 2; ++i) kn.push_back(i);
  for (auto& blk : {km, kn})
    for (std::size_t i = 0; i < blk.size(); ++i)
      for (std::size_t j = i + 1; j < blk.size(); ++j) e.push_back({blk[i], blk[j]});
  return Graph::from_edge_list(m + n - 1, std::move(e));
}

}  // namespace

TEST_CASE("operation names round trip") {
  for (RewriteOp op : kAllRewriteOps) CHECK(parse_rewrite_op(to_string(op)) == op);
  CHECK_THROWS_AS(parse_rewrite_op("NOPE"), RewritePreconditionError);
}

TEST_CASE("L22A on the symmetric K4*K4") {
  const Prepared in = prepare(two_cliques(4, 4));
  REQUIRE(in.cert.phi == 4);
  RewriteSite site;
  site.op = RewriteOp::L22A;
  // D = {1,2} in K_m and {4,5} in K_n by lexicographic choice
  site.vertex_roles = {{"p", 1}, {"q", 2}, {"r", 4}, {"s", 5}, {"w", 0}};
  const RewriteReport rep = apply_lemma22(in.g, in.d, in.cert, LemmaVariant::A, site);
  CHECK(rep.contract_ok);
  CHECK(rep.phi_after == 4);
  CHECK(rep.rho_after - rep.rho_before > 1e-9);
  const auto sizes = block_decomposition(rep.output).block_size_multiset();
  CHECK(sizes == std::vector<int>{3, 5});
  CHECK(is_isomorphic(rep.output, build_central(parse_block_spec("K3+K5"))));
}

TEST_CASE("L22B needs a strict gap, so the symmetric instance is rejected") {
  const Prepared in = prepare(two_cliques(4, 4));
  RewriteSite site;
  site.op = RewriteOp::L22B;
  site.vertex_roles = {{"p", 1}, {"q", 2}, {"r", 4}, {"s", 5}, {"w", 0}};
  CHECK_THROWS_AS(apply_lemma22(in.g, in.d, in.cert, LemmaVariant::B, site),
                  RewritePreconditionError);
}

TEST_CASE("L22A on K5*K4 merges into K6 plus a triangle") {
  const Prepared in = prepare(two_cliques(5, 4));
  RewriteSite site;
  site.op = RewriteOp::L22A;
  site.vertex_roles = {{"p", 1}, {"q", 2}, {"r", 5}, {"s", 6}, {"w", 0}};
  const RewriteReport rep = apply_lemma22(in.g, in.d, in.cert, LemmaVariant::A, site);
  CHECK(rep.contract_ok);
  CHECK(block_decomposition(rep.output).block_size_multiset() == std::vector<int>{3, 6});
}

TEST_CASE("L22 size preconditions") {
  const Prepared in = prepare(two_cliques(3, 4));
  RewriteSite site;
  site.op = RewriteOp::L22A;
  site.vertex_roles = {{"p", 1}, {"q", 2}, {"r", 3}, {"s", 4}, {"w", 0}};
  CHECK_THROWS_AS(apply_lemma22(in.g, in.d, in.cert, LemmaVariant::A, site),
                  RewritePreconditionError);
}

TEST_CASE("L23 on a loaded instance: single-hit side collapses to a pendant edge") {
  // K6 at w plus a K4 whose two other interiors carry pendant triangles,
  // which forces the K4 to meet the maximum set only in r
  std::mt19937_64 rng(1);
  RewriteInstance inst = generate_rewrite_instance(RewriteOp::L23A, rng);
  const RewriteReport rep = apply_rewrite(inst.graph, inst.decomposition, inst.max_set, inst.site);
  CHECK(rep.contract_ok);
  const int m = inst.decomposition.block_size(inst.site.block_roles.at("Km"));
  const int n = inst.decomposition.block_size(inst.site.block_roles.at("Kn"));
  // merged clique keeps every vertex but r: sizes {m+n-2, 2} replace {m, n}
  auto sizes = block_decomposition(rep.output).block_size_multiset();
  CHECK(std::count(sizes.begin(), sizes.end(), m + n - 2) >= 1);
  CHECK(std::count(sizes.begin(), sizes.end(), 2) >= 1);
}

TEST_CASE("L23 rejects m = 3 and wrong Perron orderings") {
  const Prepared small = prepare(two_cliques(3, 4));
  RewriteSite site;
  site.op = RewriteOp::L23A;
  site.vertex_roles = {{"p", 1}, {"q", 2}, {"r", 3}, {"w", 0}};
  CHECK_THROWS_AS(apply_lemma23(small.g, small.d, small.cert, LemmaVariant::A, site),
                  RewritePreconditionError);

  std::mt19937_64 rng(2);
  RewriteInstance inst = generate_rewrite_instance(RewriteOp::L23A, rng);
  RewriteSite bad = inst.site;
  bad.op = RewriteOp::L23B;  // requires x_r strictly above x_p and x_q; here x_p >= x_r
  CHECK_THROWS_AS(
      apply_lemma23(inst.graph, inst.decomposition, inst.max_set, LemmaVariant::B, bad),
      RewritePreconditionError);
}

TEST_CASE("prop 2.1 (iii): the P5 middle blocks are not a legal site") {
  // The middle blocks of P5 are each hit once by D = {0,1,3,4}, but the hits
  // are cut vertices and the operation's precondition refuses them.
  const Graph p5 = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  const Prepared in = prepare(p5);
  REQUIRE(in.cert.set == std::vector<int>{0, 1, 3, 4});
  RewriteSite site;
  site.op = RewriteOp::P21MergeSingleHit;
  site.block_roles = {{"B1", block_of(in.d, {1, 2})}, {"B2", block_of(in.d, {2, 3})}};
  CHECK_THROWS_AS(apply_prop21(in.g, in.d, in.cert, Prop21Variant::III, site),
                  RewritePreconditionError);
}

TEST_CASE("prop 2.1 (ii) rejects a non-cut designated vertex") {
  const Prepared in = prepare(two_cliques(4, 4));
  RewriteSite site;
  site.op = RewriteOp::P21MergeAtCut;
  site.vertex_roles = {{"u", 1}};  // interior vertex, not cut
  CHECK_THROWS_AS(apply_prop21(in.g, in.d, in.cert, Prop21Variant::II, site),
                  RewritePreconditionError);
}

TEST_CASE("prop 2.1 (ii) merges all blocks at a chosen cut vertex") {
  // P4: D = {0,1,3} contains the cut vertex 1
  const Graph p4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
  const Prepared in = prepare(p4);
  REQUIRE(in.cert.set == std::vector<int>{0, 1, 3});
  RewriteSite site;
  site.op = RewriteOp::P21MergeAtCut;
  site.vertex_roles = {{"u", 1}};
  const RewriteReport rep = apply_prop21(in.g, in.d, in.cert, Prop21Variant::II, site);
  CHECK(rep.contract_ok);
  CHECK(rep.phi_after == 3);
  CHECK(block_decomposition(rep.output).block_size_multiset() == std::vector<int>{2, 3});
}

TEST_CASE("prop 2.2 triangle: exactly one case applies") {
  for (unsigned seed : {11u, 12u, 13u}) {
    std::mt19937_64 rng(seed);
    const RewriteInstance inst = generate_rewrite_instance(RewriteOp::P22TriangleCase1, rng);
    const RewriteReport rep =
        apply_rewrite(inst.graph, inst.decomposition, inst.max_set, inst.site);
    CHECK(rep.contract_ok);
    // requesting the other case on the same site must fail
    RewriteSite other = inst.site;
    other.op = RewriteOp::P22TriangleCase2;
    CHECK_THROWS_AS(
        apply_prop22_triangle(inst.graph, inst.decomposition, inst.max_set, TriangleCase::Two,
                              other),
        RewritePreconditionError);
  }
  for (unsigned seed : {21u, 22u}) {
    std::mt19937_64 rng(seed);
    const RewriteInstance inst = generate_rewrite_instance(RewriteOp::P22TriangleCase2, rng);
    RewriteSite other = inst.site;
    other.op = RewriteOp::P22TriangleCase1;
    other.vertex_roles.erase("p");
    other.vertex_roles.erase("q");
    CHECK_THROWS_AS(
        apply_prop22_triangle(inst.graph, inst.decomposition, inst.max_set, TriangleCase::One,
                              other),
        RewritePreconditionError);
  }
}

TEST_CASE("prop 2.2 rejects a pendant triangle") {
  const Graph g = build_central(parse_block_spec("K3+K4"));
  const Prepared in = prepare(g);
  RewriteSite site;
  site.op = RewriteOp::P22TriangleCase1;
  site.vertex_roles = {{"u", 0}, {"v", 1}, {"w", 2}};
  CHECK_THROWS_AS(apply_prop22_triangle(in.g, in.d, in.cert, TriangleCase::One, site),
                  RewritePreconditionError);
}

TEST_CASE("cut shift on the triangle chain gathers the blocks centrally") {
  // chain K3-K3-K3: the middle triangle {2,3,4} has both cut vertices
  const Graph chain = Graph::from_edge_list(
      7, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {4, 5}, {4, 6}, {5, 6}});
  const BlockDecomposition d = block_decomposition(chain);
  RewriteSite site;
  site.op = RewriteOp::CutShift;
  site.vertex_roles = {{"u", 2}, {"v", 4}};
  const RewriteReport rep = apply_cut_shift(chain, d, site);
  CHECK(rep.verdicts.connected);
  CHECK(rep.verdicts.block_graph);
  CHECK(rep.verdicts.shape_ok);
  CHECK(rep.rho_after - rep.rho_before > 1e-9);
  CHECK(rep.rho_strict_expected);
  CHECK(is_isomorphic(rep.output, build_central(parse_block_spec("K3^3"))));
  // moving the blocks frees the second cut vertex, so phi genuinely grows
  CHECK(rep.phi_before == 5);
  CHECK(rep.phi_after == 6);
  CHECK_FALSE(rep.contract_ok);
}

TEST_CASE("cut shift no-op when v has no other blocks") {
  const Graph g = build_central(parse_block_spec("K4+K2"));  // cut vertex 0
  const BlockDecomposition d = block_decomposition(g);
  RewriteSite site;
  site.op = RewriteOp::CutShift;
  site.vertex_roles = {{"u", 0}, {"v", 1}};
  const RewriteReport rep = apply_cut_shift(g, d, site);
  CHECK(rep.output == g);
  CHECK(rep.contract_ok);
  CHECK_FALSE(rep.rho_strict_expected);
  CHECK(rep.rho_after == doctest::Approx(rep.rho_before).epsilon(1e-12));
}

TEST_CASE("cut shift rejects a reversed Perron ordering") {
  // pendant load at vertex 1 makes x_1 > x_2 among the K4's cut vertices
  std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  e.push_back({1, 4});
  e.push_back({1, 5});
  e.push_back({4, 5});  // triangle at 1
  e.push_back({2, 6});  // pendant edge at 2
  const Graph g = Graph::from_edge_list(7, std::move(e));
  const BlockDecomposition d = block_decomposition(g);
  RewriteSite site;
  site.op = RewriteOp::CutShift;
  site.vertex_roles = {{"u", 2}, {"v", 1}};
  CHECK_THROWS_AS(apply_cut_shift(g, d, site), RewritePreconditionError);
  site.vertex_roles = {{"u", 1}, {"v", 2}};
  const RewriteReport rep = apply_cut_shift(g, d, site);
  CHECK(rep.contract_ok);
  CHECK(rep.rho_after - rep.rho_before > 1e-9);
}

TEST_CASE("generated instances satisfy the full contract") {
  std::mt19937_64 rng(20240809);
  for (RewriteOp op : kAllRewriteOps) {
    CAPTURE(to_string(op));
    for (int i = 0; i < 12; ++i) {
      const RewriteInstance inst = generate_rewrite_instance(op, rng);
      REQUIRE(inst.graph.vertex_count() <= 14);
      const RewriteReport rep =
          apply_rewrite(inst.graph, inst.decomposition, inst.max_set, inst.site);
      CHECK(rep.verdicts.connected);
      CHECK(rep.verdicts.block_graph);
      CHECK(rep.verdicts.vertex_count_preserved);
      CHECK(rep.verdicts.shape_ok);
      CHECK(rep.contract_ok);
      // brute-force oracle for the dissociation number on both sides
      CHECK(dissociation_brute(rep.output).phi == dissociation_brute(inst.graph).phi);
    }
  }
}

TEST_CASE("report serializes to parseable JSON") {
  std::mt19937_64 rng(5);
  const RewriteInstance inst = generate_rewrite_instance(RewriteOp::L22A, rng);
  const RewriteReport rep = apply_rewrite(inst.graph, inst.decomposition, inst.max_set, inst.site);
  const auto j = nlohmann::json::parse(rewrite_report_json(rep));
  CHECK(j.at("operation") == "L22A");
  CHECK(j.at("contract_ok").is_boolean());
  CHECK(j.at("verdicts").at("rho_increased").is_boolean());
  CHECK(j.at("rho_after").get<double>() > j.at("rho_before").get<double>());
  CHECK(j.at("output").at("edges").is_array());
}
