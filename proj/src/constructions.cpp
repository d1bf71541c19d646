#include "blockspectra/constructions.hpp"

#include <cctype>

#include "blockspectra/dissociation.hpp"

namespace blockspectra {

int BlockSpec::total_blocks() const {
  int t = 0;
  for (const auto& term : terms) t += term.multiplicity;
  return t;
}

int BlockSpec::central_vertex_count() const {
  int n = 1;
  for (const auto& term : terms) n += term.multiplicity * (term.clique_size - 1);
  return n;
}

std::string BlockSpec::render() const {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += '+';
    out += 'K' + std::to_string(terms[i].clique_size);
    if (terms[i].multiplicity != 1) out += '^' + std::to_string(terms[i].multiplicity);
  }
  return out;
}

BlockSpec parse_block_spec(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto parse_int = [&]() -> long long {
    skip_ws();
    const std::size_t start = pos;
    long long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > 1'000'000) throw SpecParseError("integer too large", start);
      ++pos;
    }
    if (pos == start) throw SpecParseError("expected integer", pos);
    return value;
  };

  BlockSpec spec;
  while (true) {
    skip_ws();
    if (pos >= text.size() || (text[pos] != 'K' && text[pos] != 'k'))
      throw SpecParseError("expected 'K'", pos);
    ++pos;
    const std::size_t size_off = pos;
    const long long clique = parse_int();
    if (clique < 2) throw SpecParseError("clique size must be >= 2", size_off);
    long long mult = 1;
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      const std::size_t mult_off = pos;
      mult = parse_int();
      if (mult < 1) throw SpecParseError("multiplicity must be >= 1", mult_off);
    }
    spec.terms.push_back({static_cast<int>(clique), static_cast<int>(mult)});
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != '+') throw SpecParseError("expected '+' or end of input", pos);
    ++pos;
  }
  if (spec.terms.empty()) throw SpecParseError("empty block spec", 0);
  return spec;
}

Graph build_central(const BlockSpec& spec) {
  if (spec.terms.empty()) throw ConstructionError("block spec has no terms");
  for (const auto& term : spec.terms) {
    if (term.clique_size < 2) throw ConstructionError("clique size must be >= 2");
    if (term.multiplicity < 1) throw ConstructionError("multiplicity must be >= 1");
  }
  std::vector<Edge> edges;
  int next = 1;
  for (const auto& term : spec.terms) {
    for (int rep = 0; rep < term.multiplicity; ++rep) {
      std::vector<int> verts{0};
      for (int i = 0; i < term.clique_size - 1; ++i) verts.push_back(next++);
      for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
          edges.push_back({verts[i], verts[j]});
    }
  }
  return Graph::from_edge_list(next, std::move(edges));
}

Graph build_extremal(int k, int phi) {
  const auto [lo, hi] = feasible_phi_range(k);
  if (phi < lo || phi > hi)
    throw ConstructionError("infeasible (k, phi) = (" + std::to_string(k) + ", " +
                            std::to_string(phi) + "); feasible phi range for k is [" +
                            std::to_string(lo) + ", " + std::to_string(hi) + "]");

  BlockSpec spec;
  if (phi == 2) {
    spec.terms.push_back({k, 1});
  } else if (phi % 2 == 0) {
    spec.terms.push_back({3, (phi - 2) / 2});
    spec.terms.push_back({k - phi + 2, 1});
  } else {
    spec.terms.push_back({2, 1});
    if (phi >= 5) spec.terms.push_back({3, (phi - 3) / 2});
    spec.terms.push_back({k - phi + 2, 1});
  }

  Graph g = build_central(spec);
  if (g.vertex_count() != k)
    throw ConstructionError("internal: extremal construction produced wrong vertex count");
  const int got = dissociation_dp(g).phi;
  if (got != phi)
    throw ConstructionError("internal: extremal construction has dissociation number " +
                            std::to_string(got) + ", expected " + std::to_string(phi));
  return g;
}

std::pair<int, int> feasible_phi_range(int k) {
  if (k < 2) throw ConstructionError("k must be >= 2");
  if (k <= 3) return {2, 2};
  return {2, k - 1};
}

}  // namespace blockspectra
