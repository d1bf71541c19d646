#include "blockspectra/enumerate.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <thread>

#include <json.hpp>

#include "blockspectra/constructions.hpp"
#include "blockspectra/dissociation.hpp"
#include "blockspectra/spectral.hpp"

namespace blockspectra {

namespace {

int resolve_workers(int workers) {
  if (workers > 0) return workers;
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

Graph attach_clique(const Graph& g, int at, int block_size) {
  const int n = g.vertex_count();
  std::vector<Edge> edges = g.edges();
  std::vector<int> verts{at};
  for (int i = 0; i < block_size - 1; ++i) verts.push_back(n + i);
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      edges.push_back({verts[i], verts[j]});
  return Graph::from_edge_list(n + block_size - 1, std::move(edges));
}

bool edge_list_less(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count()) return a.vertex_count() < b.vertex_count();
  return a.edges() < b.edges();
}

// Run fn(i) for i in [0, count) across the workers.
void parallel_for(int count, int workers, const std::function<void(int)>& fn) {
  if (workers <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  const int stride = workers;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (int i = w; i < count; i += stride) fn(i);
    });
  for (auto& t : pool) t.join();
}

std::string format_sig12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::vector<CensusEntry> enumerate_block_graphs(int k, int workers) {
  if (k < 1 || k > 10)
    throw EnumerateError("enumeration is capped at 1 <= k <= 10 (got " + std::to_string(k) + ")");
  workers = resolve_workers(workers);

  // levels[j]: canonical code -> representative graph on j vertices.
  std::vector<std::map<std::string, Graph>> levels(k + 1);
  {
    const Graph k1 = Graph::from_edge_list(1, {});
    levels[1].emplace(canonical_code(k1).code, k1);
  }

  for (int j = 1; j < k; ++j) {
    std::vector<const Graph*> parents;
    parents.reserve(levels[j].size());
    for (const auto& [code, graph] : levels[j]) parents.push_back(&graph);

    std::vector<std::vector<std::pair<std::string, Graph>>> buckets(parents.size());
    parallel_for(static_cast<int>(parents.size()), workers, [&](int idx) {
      const Graph& parent = *parents[idx];
      for (int b = 2; j + b - 1 <= k; ++b)
        for (int at = 0; at < j; ++at) {
          Graph child = attach_clique(parent, at, b);
          buckets[idx].push_back({canonical_code(child).code, std::move(child)});
        }
    });
    for (auto& bucket : buckets)
      for (auto& [code, child] : bucket) {
        auto& level = levels[child.vertex_count()];
        auto it = level.find(code);
        if (it == level.end())
          level.emplace(code, std::move(child));
        else if (edge_list_less(child, it->second))
          it->second = std::move(child);  // deterministic representative
      }
  }

  std::vector<CensusEntry> census;
  census.reserve(levels[k].size());
  for (const auto& [code, graph] : levels[k])
    census.push_back(CensusEntry{CanonicalCode{code}, graph, 0, 0.0, false});

  parallel_for(static_cast<int>(census.size()), workers, [&](int i) {
    census[i].phi = dissociation_dp(census[i].graph).phi;
    census[i].rho =
        census[i].graph.vertex_count() < 2 ? 0.0 : spectral_radius(census[i].graph).rho;
  });

  // mark per-stratum maximizers
  std::map<int, double> stratum_max;
  for (const auto& e : census) {
    auto it = stratum_max.find(e.phi);
    if (it == stratum_max.end() || e.rho > it->second) stratum_max[e.phi] = e.rho;
  }
  for (auto& e : census)
    e.is_extremal = e.rho >= stratum_max[e.phi] - kUniquenessMargin;
  return census;
}

StratumResult extremal_search_in(const std::vector<CensusEntry>& census, int k, int phi) {
  StratumResult r;
  r.phi = phi;
  std::vector<const CensusEntry*> stratum;
  for (const auto& e : census)
    if (e.phi == phi) stratum.push_back(&e);
  r.count = static_cast<int>(stratum.size());
  if (stratum.empty()) return r;  // empty class reported as such, not an error

  double max_rho = stratum[0]->rho;
  for (const auto* e : stratum) max_rho = std::max(max_rho, e->rho);
  r.max_rho = max_rho;

  std::vector<const CensusEntry*> near;
  for (const auto* e : stratum)
    if (e->rho >= max_rho - kUniquenessMargin) near.push_back(e);
  r.numeric_ties = static_cast<int>(near.size()) - 1;

  if (near.size() > 1) {
    // Distinct census classes are never isomorphic, so a surviving tie means
    // non-uniqueness. Re-check with a 10x tighter solver tolerance first.
    std::vector<std::pair<double, const CensusEntry*>> refined;
    double refined_max = 0.0;
    for (const auto* e : near) {
      const double rho = spectral_radius(e->graph, kDefaultSpectralTol * 0.1).rho;
      refined.push_back({rho, e});
      refined_max = std::max(refined_max, rho);
    }
    near.clear();
    for (const auto& [rho, e] : refined)
      if (rho >= refined_max - kUniquenessMargin) near.push_back(e);
  }

  for (const auto* e : near) r.maximizer_codes_hex.push_back(e->canonical.hex());
  std::sort(r.maximizer_codes_hex.begin(), r.maximizer_codes_hex.end());
  r.unique = near.size() == 1;

  bool feasible = false;
  try {
    const auto [lo, hi] = feasible_phi_range(k);
    feasible = phi >= lo && phi <= hi;
  } catch (const ConstructionError&) {
    feasible = false;
  }
  if (feasible && r.unique) {
    const CanonicalCode expected = canonical_code(build_extremal(k, phi));
    r.matches_extremal = near[0]->canonical == expected;
  }
  return r;
}

StratumResult extremal_search(int k, int phi, int workers) {
  return extremal_search_in(enumerate_block_graphs(k, workers), k, phi);
}

TheoremReport verify_main_theorem(int k, int workers) {
  if (k < 2) throw EnumerateError("theorem verification needs k >= 2");
  const auto census = enumerate_block_graphs(k, workers);
  std::vector<int> phis;
  for (const auto& e : census)
    if (std::find(phis.begin(), phis.end(), e.phi) == phis.end()) phis.push_back(e.phi);
  std::sort(phis.begin(), phis.end());

  TheoremReport t;
  t.k = k;
  t.all_pass = true;
  for (int phi : phis) {
    StratumResult row = extremal_search_in(census, k, phi);
    t.all_pass = t.all_pass && row.unique && row.matches_extremal;
    t.strata.push_back(std::move(row));
  }
  return t;
}

StructureReport verify_structure_corollaries(int k, int workers) {
  if (k < 2) throw EnumerateError("structure verification needs k >= 2");
  const auto census = enumerate_block_graphs(k, workers);
  std::vector<int> phis;
  for (const auto& e : census)
    if (std::find(phis.begin(), phis.end(), e.phi) == phis.end()) phis.push_back(e.phi);
  std::sort(phis.begin(), phis.end());

  StructureReport rep;
  rep.k = k;
  rep.all_pass = true;
  for (int phi : phis) {
    const StratumResult row = extremal_search_in(census, k, phi);
    const CensusEntry* maximizer = nullptr;
    for (const auto& e : census)
      if (e.phi == phi && !row.maximizer_codes_hex.empty() &&
          e.canonical.hex() == row.maximizer_codes_hex.front()) {
        maximizer = &e;
        break;
      }
    StructureChecks c;
    c.phi = phi;
    if (maximizer == nullptr) {
      rep.failures.push_back("phi=" + std::to_string(phi) + ": no maximizer found");
      rep.all_pass = false;
      rep.strata.push_back(c);
      continue;
    }
    const BlockDecomposition d = block_decomposition(maximizer->graph);
    const auto dset = dissociation_dp(maximizer->graph).set;
    auto hits = [&](int b) {
      int h = 0;
      for (int v : d.blocks[b])
        if (std::binary_search(dset.begin(), dset.end(), v)) ++h;
      return h;
    };

    if (phi == 2) {
      // the complete graph: a single block and no cut vertices
      c.one_cut_vertex = d.cut_vertices.empty() && d.blocks.size() == 1;
      c.at_most_one_big_block = true;
      c.small_blocks_pendant = true;
      c.intersection_dichotomy = true;
    } else {
      c.one_cut_vertex = d.cut_vertices.size() == 1;
      int big = 0;
      for (std::size_t b = 0; b < d.blocks.size(); ++b)
        if (d.block_size(static_cast<int>(b)) >= 4) ++big;
      c.at_most_one_big_block = big <= 1;
      c.small_blocks_pendant = true;
      c.intersection_dichotomy = true;
      for (std::size_t b = 0; b < d.blocks.size(); ++b) {
        const int size = d.block_size(static_cast<int>(b));
        if (size <= 3 && !d.pendant[b]) c.small_blocks_pendant = false;
        const int expected = size == 2 ? 1 : 2;
        if (hits(static_cast<int>(b)) != expected) c.intersection_dichotomy = false;
      }
    }
    c.pass = c.one_cut_vertex && c.at_most_one_big_block && c.small_blocks_pendant &&
             c.intersection_dichotomy;
    if (!c.pass)
      rep.failures.push_back("phi=" + std::to_string(phi) + ": maximizer " +
                             maximizer->canonical.hex() + " fails a structural check");
    rep.all_pass = rep.all_pass && c.pass;
    rep.strata.push_back(c);
  }
  return rep;
}

std::string census_entry_jsonl(const CensusEntry& e) {
  std::string out = "{\"canonical\":\"" + e.canonical.hex() + "\"";
  out += ",\"n\":" + std::to_string(e.graph.vertex_count());
  out += ",\"phi\":" + std::to_string(e.phi);
  out += ",\"rho\":" + format_sig12(e.rho);
  out += ",\"edges\":[";
  bool first = true;
  for (auto [u, v] : e.graph.edges()) {
    if (!first) out += ',';
    first = false;
    out += '[' + std::to_string(u) + ',' + std::to_string(v) + ']';
  }
  out += "],\"is_extremal\":";
  out += e.is_extremal ? "true" : "false";
  out += '}';
  return out;
}

std::string theorem_report_json(const TheoremReport& t) {
  nlohmann::json j;
  j["k"] = t.k;
  j["all_pass"] = t.all_pass;
  j["strata"] = nlohmann::json::array();
  for (const auto& s : t.strata) {
    nlohmann::json row;
    row["phi"] = s.phi;
    row["count"] = s.count;
    row["max_rho"] = s.max_rho;
    row["maximizers"] = s.maximizer_codes_hex;
    row["unique"] = s.unique;
    row["matches_extremal"] = s.matches_extremal;
    row["numeric_ties"] = s.numeric_ties;
    j["strata"].push_back(std::move(row));
  }
  return j.dump();
}

std::string structure_report_json(const StructureReport& s) {
  nlohmann::json j;
  j["k"] = s.k;
  j["all_pass"] = s.all_pass;
  j["failures"] = s.failures;
  j["strata"] = nlohmann::json::array();
  for (const auto& c : s.strata) {
    nlohmann::json row;
    row["phi"] = c.phi;
    row["one_cut_vertex"] = c.one_cut_vertex;
    row["at_most_one_big_block"] = c.at_most_one_big_block;
    row["small_blocks_pendant"] = c.small_blocks_pendant;
    row["intersection_dichotomy"] = c.intersection_dichotomy;
    row["pass"] = c.pass;
    j["strata"].push_back(std::move(row));
  }
  return j.dump();
}

}  // namespace blockspectra
