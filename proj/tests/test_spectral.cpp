#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "blockspectra/canonical.hpp"
#include "blockspectra/constructions.hpp"
#include "blockspectra/spectral.hpp"
#include "oracles.hpp"

using namespace blockspectra;

namespace {

Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph::from_edge_list(n, std::move(e));
}

Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph::from_edge_list(n, std::move(e));
}

Graph bowtie() {
  return Graph::from_edge_list(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
}

double rayleigh_of(const Graph& g, const std::vector<double>& x) {
  double acc = 0.0;
  for (auto [u, v] : g.edges()) acc += 2.0 * x[u] * x[v];
  return acc;
}

}  // namespace

TEST_CASE("complete graphs have radius n-1") {
  for (int n = 2; n <= 20; ++n) {
    const SpectralResult r = spectral_radius(complete(n));
    CHECK(std::fabs(r.rho - (n - 1)) <= 1e-10);
  }
}

TEST_CASE("path on three vertices has radius sqrt(2)") {
  const SpectralResult r = spectral_radius(path(3));
  CHECK(std::fabs(r.rho - std::sqrt(2.0)) <= 1e-10);
  // independent route: exact characteristic polynomial, bisected
  CHECK(std::fabs(oracles::rho_by_char_poly(path(3)) - std::sqrt(2.0)) <= 1e-9);
}

TEST_CASE("bowtie radius is (1+sqrt(17))/2") {
  const double expected = (1.0 + std::sqrt(17.0)) / 2.0;
  CHECK(std::fabs(spectral_radius(bowtie()).rho - expected) <= 1e-10);
  CHECK(std::fabs(oracles::rho_by_char_poly(bowtie()) - expected) <= 1e-9);
}

TEST_CASE("solver agrees with the characteristic-polynomial oracle on small graphs") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Graph g = oracles::random_connected_graph(n, 0.3, rng);
    CHECK(std::fabs(spectral_radius(g).rho - oracles::rho_by_char_poly(g)) <= 1e-8);
  }
}

TEST_CASE("result invariants") {
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const Graph g = oracles::random_connected_graph(n, 0.2, rng);
    const SpectralResult r = spectral_radius(g);
    double norm = 0.0, min_entry = 1.0;
    for (double x : r.perron) {
      norm += x * x;
      min_entry = std::min(min_entry, x);
    }
    CHECK(std::fabs(std::sqrt(norm) - 1.0) <= 1e-12);
    CHECK(min_entry > 0.0);
    CHECK(r.residual <= kDefaultSpectralTol * std::max(1.0, r.rho));
    CHECK(g.average_degree() <= r.rho + 1e-9);
    CHECK(r.rho <= g.max_degree() + 1e-9);
    CHECK(std::fabs(rayleigh_of(g, r.perron) - r.rho) <= 10 * kDefaultSpectralTol);
  }
}

TEST_CASE("rejects bad input") {
  CHECK_THROWS_AS(spectral_radius(Graph::from_edge_list(1, {})), SpectralError);
  CHECK_THROWS_AS(spectral_radius(Graph::from_edge_list(4, {{0, 1}, {2, 3}})), SpectralError);
  CHECK_THROWS_AS(spectral_radius(complete(3), -1.0), SpectralError);
}

TEST_CASE("verify_eigenpair") {
  const Graph k3 = complete(3);
  const double s = 1.0 / std::sqrt(3.0);
  CHECK(verify_eigenpair(k3, 2.0, std::vector<double>{s, s, s}, 1e-12));
  CHECK_FALSE(verify_eigenpair(k3, 2.0, std::vector<double>{1.0, 0.0, 0.0}, 1e-12));
  // negative scaling of an eigenvector still verifies (one shared sign)
  CHECK(verify_eigenpair(k3, 2.0, std::vector<double>{-s, -s, -s}, 1e-12));
  // mixed signs never verify
  CHECK_FALSE(verify_eigenpair(k3, 2.0, std::vector<double>{s, -s, s}, 1e-12));
}

TEST_CASE("pendant complete blocks: interior entries equal, cut entry larger") {
  const Graph g = build_central(parse_block_spec("K3+K4"));  // cut vertex is 0
  const SpectralResult r = spectral_radius(g);
  CHECK(verify_eigenpair(g, r.rho, r.perron, 1e-10));
  // K4 pendant occupies vertices 3,4,5 with cut vertex 0
  CHECK(std::fabs(r.perron[3] - r.perron[4]) <= 1e-9);
  CHECK(std::fabs(r.perron[3] - r.perron[5]) <= 1e-9);
  CHECK(r.perron[0] - r.perron[3] > 1e-9);
  // same structure on the K3 block
  CHECK(std::fabs(r.perron[1] - r.perron[2]) <= 1e-9);
  CHECK(r.perron[0] - r.perron[1] > 1e-9);
}

TEST_CASE("automorphism transfer: symmetric vertices share Perron entries") {
  const Graph g = bowtie();
  const SpectralResult r = spectral_radius(g);
  const Permutation p({0, 3, 4, 1, 2});
  REQUIRE(check_automorphism(g, p));
  for (int v = 0; v < 5; ++v) CHECK(std::fabs(r.perron[v] - r.perron[p.map[v]]) <= 1e-9);
}

TEST_CASE("adding an edge strictly increases the radius") {
  std::mt19937_64 rng(2024);
  int done = 0;
  while (done < 40) {
    const int n = 4 + static_cast<int>(rng() % 9);
    const Graph g = oracles::random_connected_graph(n, 0.15, rng);
    std::vector<Edge> non_edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!g.has_edge(u, v)) non_edges.push_back({u, v});
    if (non_edges.empty()) continue;
    const Edge uv = non_edges[rng() % non_edges.size()];
    const Graph h = g.with_edges({uv}, {});
    CHECK(spectral_radius(h).rho - spectral_radius(g).rho > 1e-9);
    CHECK(compare_spectral_radii(g, h, 1e-9) == RadiusOrder::Less);
    ++done;
  }
}

TEST_CASE("relabeled copies are indistinguishable") {
  std::mt19937_64 rng(99);
  const Graph g = oracles::random_connected_graph(9, 0.25, rng);
  const Graph h = oracles::relabel(g, oracles::random_permutation(9, rng));
  CHECK(compare_spectral_radii(g, h, 1e-9) == RadiusOrder::Indistinguishable);
}

TEST_CASE("K3+K4 compound beats the K3+K3+K2 compound on six vertices") {
  const Graph a = build_central(parse_block_spec("K3+K4"));
  const Graph b = build_central(parse_block_spec("K3^2+K2"));
  REQUIRE(b.vertex_count() == 6);
  CHECK(compare_spectral_radii(a, b, 1e-9) == RadiusOrder::Greater);
  CHECK(oracles::rho_by_char_poly(a) > oracles::rho_by_char_poly(b) + 1e-9);
}

TEST_CASE("margin must dominate the solver tolerance") {
  CHECK_THROWS_AS(compare_spectral_radii(complete(3), complete(4), 1e-13), SpectralError);
}
