#include "blockspectra/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "blockspectra/constructions.hpp"
#include "blockspectra/dissociation.hpp"
#include "blockspectra/enumerate.hpp"
#include "blockspectra/generators.hpp"
#include "blockspectra/io.hpp"
#include "blockspectra/rewrites.hpp"
#include "blockspectra/spectral.hpp"

namespace blockspectra::cli {

namespace {

std::string fixed12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

Graph load_graph(const std::string& path) { return read_edge_list_file(path); }

void emit_graph(const Graph& g, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    write_edge_list(out, g);
  } else {
    write_edge_list_file(out_path, g);
  }
}

std::map<std::string, int> parse_site_assignments(const std::string& text) {
  std::map<std::string, int> roles;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw RewritePreconditionError("site entry '" + item + "' is not of the form role=index");
    const std::string key = item.substr(0, eq);
    const std::string val = item.substr(eq + 1);
    try {
      roles[key] = std::stoi(val);
    } catch (const std::exception&) {
      throw RewritePreconditionError("site entry '" + item + "' has a non-integer index");
    }
  }
  return roles;
}

RewriteSite build_site(RewriteOp op, const std::map<std::string, int>& roles) {
  static const std::vector<std::string> vertex_keys{"p", "q", "r", "s", "u", "v", "w"};
  static const std::vector<std::string> block_keys{"B", "C", "B1", "B2", "Km", "Kn", "H", "T"};
  RewriteSite site;
  site.op = op;
  for (const auto& [key, value] : roles) {
    if (std::find(vertex_keys.begin(), vertex_keys.end(), key) != vertex_keys.end())
      site.vertex_roles[key] = value;
    else if (std::find(block_keys.begin(), block_keys.end(), key) != block_keys.end())
      site.block_roles[key] = value;
    else
      throw RewritePreconditionError("unknown site role '" + key + "'");
  }
  return site;
}

int cmd_construct(int k, int phi, const std::string& spec_text, const std::string& out_path,
                  std::ostream& out) {
  Graph g;
  if (!spec_text.empty()) {
    g = build_central(parse_block_spec(spec_text));
  } else {
    g = build_extremal(k, phi);
  }
  emit_graph(g, out_path, out);
  return 0;
}

int cmd_rho(const std::string& in_path, double tol, bool json, std::ostream& out) {
  const Graph g = load_graph(in_path);
  const SpectralResult r = spectral_radius(g, tol);
  if (json) {
    nlohmann::json j;
    j["rho"] = r.rho;
    j["perron"] = r.perron;
    j["residual"] = r.residual;
    j["iterations"] = r.iterations;
    out << j.dump() << '\n';
  } else {
    out << "rho = " << fixed12(r.rho) << '\n';
    out << "perron = [";
    for (std::size_t i = 0; i < r.perron.size(); ++i)
      out << (i ? ", " : "") << fixed12(r.perron[i]);
    out << "]\n";
    out << "residual = " << r.residual << '\n';
    out << "iterations = " << r.iterations << '\n';
  }
  return 0;
}

int cmd_dissociation(const std::string& in_path, const std::string& method, bool json,
                     std::ostream& out) {
  const Graph g = load_graph(in_path);
  DissociationCertificate cert;
  if (method == "brute")
    cert = dissociation_brute(g);
  else if (method == "dp")
    cert = dissociation_dp(g);
  else
    throw DissociationError("unknown method '" + method + "' (expected dp or brute)");
  if (json) {
    nlohmann::json j;
    j["phi"] = cert.phi;
    j["set"] = cert.set;
    j["induced_degrees"] = cert.induced_degrees;
    j["method"] = method;
    out << j.dump() << '\n';
  } else {
    out << "phi = " << cert.phi << '\n';
    out << "set = [";
    for (std::size_t i = 0; i < cert.set.size(); ++i) out << (i ? ", " : "") << cert.set[i];
    out << "]\n";
  }
  return 0;
}

int cmd_rewrite(const std::string& in_path, const std::string& op_name,
                const std::string& site_text, bool json, std::ostream& out) {
  const Graph g = load_graph(in_path);
  const RewriteOp op = parse_rewrite_op(op_name);
  const RewriteSite site = build_site(op, parse_site_assignments(site_text));
  const BlockDecomposition d = block_decomposition(g);
  const DissociationCertificate cert = dissociation_dp(g);
  const RewriteReport report = apply_rewrite(g, d, cert, site);
  if (json) {
    out << rewrite_report_json(report) << '\n';
  } else {
    out << "operation = " << to_string(op) << '\n';
    out << "rho: " << fixed12(report.rho_before) << " -> " << fixed12(report.rho_after) << '\n';
    out << "phi: " << report.phi_before << " -> " << report.phi_after << '\n';
    out << "contract_ok = " << (report.contract_ok ? "true" : "false") << '\n';
    out << "output:\n";
    write_edge_list(out, report.output);
  }
  return report.contract_ok ? 0 : 1;
}

int cmd_enumerate(int k, int phi_filter, const std::string& jsonl_path, int workers,
                  std::ostream& out) {
  const auto census = enumerate_block_graphs(k, workers);
  std::ofstream file;
  std::ostream* sink = &out;
  if (!jsonl_path.empty()) {
    file.open(jsonl_path);
    if (!file) throw EnumerateError("cannot open output file: " + jsonl_path);
    sink = &file;
  }
  for (const auto& e : census) {
    if (phi_filter >= 0 && e.phi != phi_filter) continue;
    *sink << census_entry_jsonl(e) << '\n';
  }
  return 0;
}

int cmd_verify(int k, bool json, int workers, std::ostream& out) {
  const TheoremReport theorem = verify_main_theorem(k, workers);
  const StructureReport structure = verify_structure_corollaries(k, workers);
  const bool pass = theorem.all_pass && structure.all_pass;
  if (json) {
    nlohmann::json j;
    j["k"] = k;
    j["pass"] = pass;
    j["theorem"] = nlohmann::json::parse(theorem_report_json(theorem));
    j["structure"] = nlohmann::json::parse(structure_report_json(structure));
    out << j.dump() << '\n';
  } else {
    out << "k = " << k << '\n';
    out << "phi  count  max_rho          unique  matches  structure\n";
    for (std::size_t i = 0; i < theorem.strata.size(); ++i) {
      const auto& s = theorem.strata[i];
      const bool sok = i < structure.strata.size() && structure.strata[i].pass;
      char line[128];
      std::snprintf(line, sizeof line, "%-4d %-6d %-16.12f %-7s %-8s %s\n", s.phi, s.count,
                    s.max_rho, s.unique ? "yes" : "NO", s.matches_extremal ? "yes" : "NO",
                    sok ? "ok" : "FAIL");
      out << line;
    }
    out << "RESULT: " << (pass ? "PASS" : "FAIL") << '\n';
    if (!pass)
      for (const auto& f : structure.failures) out << "  " << f << '\n';
  }
  return pass ? 0 : 1;
}

int cmd_export_dot(const std::string& in_path, const std::string& out_path, std::ostream& out) {
  const Graph g = load_graph(in_path);
  if (out_path.empty()) {
    out << to_dot(g);
  } else {
    std::ofstream file(out_path);
    if (!file) throw GraphError("cannot open output file: " + out_path);
    file << to_dot(g);
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"block graphs: spectral radii, dissociation numbers, rewrites, and"
               " exhaustive extremal verification"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "build an extremal or central block graph");
  int k = 0, phi = 0;
  std::string spec_text, out_path;
  auto* opt_k = construct->add_option("--k", k, "vertex count of the extremal graph");
  auto* opt_phi = construct->add_option("--phi", phi, "dissociation number");
  auto* opt_spec =
      construct->add_option("--spec", spec_text, "central graph spec, e.g. \"K2+K3^2+K6\"");
  construct->add_option("--out", out_path, "output edge-list file (default stdout)");
  opt_k->needs(opt_phi);
  opt_phi->needs(opt_k);
  opt_spec->excludes(opt_k);

  // rho
  auto* rho_cmd = app.add_subcommand("rho", "spectral radius and Perron vector");
  std::string rho_in;
  double tol = kDefaultSpectralTol;
  bool rho_json = false;
  rho_cmd->add_option("--in", rho_in, "edge-list input file")->required();
  rho_cmd->add_option("--tol", tol, "solver tolerance (default 1e-12)");
  rho_cmd->add_flag("--json", rho_json, "JSON output");

  // dissociation
  auto* dis_cmd = app.add_subcommand("dissociation", "maximum dissociation set");
  std::string dis_in, method = "dp";
  bool dis_json = false;
  dis_cmd->add_option("--in", dis_in, "edge-list input file")->required();
  dis_cmd->add_option("--method", method, "dp or brute (default dp)");
  dis_cmd->add_flag("--json", dis_json, "JSON output");

  // rewrite
  auto* rw_cmd = app.add_subcommand("rewrite", "apply a checked graph rewrite");
  std::string rw_in, rw_op, rw_site;
  bool rw_json = false;
  rw_cmd->add_option("--in", rw_in, "edge-list input file")->required();
  rw_cmd->add_option("--op", rw_op, "operation id, e.g. L22A or CUT_SHIFT")->required();
  rw_cmd->add_option("--site", rw_site, "role assignments, e.g. p=3,q=4,r=7,s=8,w=0");
  rw_cmd->add_flag("--json", rw_json, "JSON report");

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "isomorph-free census of block graphs");
  int enum_k = 0, enum_phi = -1, workers = 0;
  std::string jsonl_path;
  enum_cmd->add_option("--k", enum_k, "vertex count (1..10)")->required();
  enum_cmd->add_option("--phi", enum_phi, "restrict to one dissociation number");
  enum_cmd->add_option("--jsonl", jsonl_path, "write JSON-lines to this file");
  enum_cmd->add_option("--workers", workers, "worker threads (default: hardware)");

  // verify
  auto* ver_cmd = app.add_subcommand("verify", "exhaustive extremal verification for one k");
  int ver_k = 0, ver_workers = 0;
  bool ver_json = false;
  ver_cmd->add_option("--k", ver_k, "vertex count (2..10)")->required();
  ver_cmd->add_flag("--json", ver_json, "JSON report");
  ver_cmd->add_option("--workers", ver_workers, "worker threads (default: hardware)");

  // export-dot
  auto* dot_cmd = app.add_subcommand("export-dot", "render an edge list as DOT");
  std::string dot_in, dot_out;
  dot_cmd->add_option("--in", dot_in, "edge-list input file")->required();
  dot_cmd->add_option("--out", dot_out, "output DOT file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (construct->parsed()) {
      if (spec_text.empty() && opt_k->count() == 0)
        throw ConstructionError("construct needs either --k/--phi or --spec");
      return cmd_construct(k, phi, spec_text, out_path, out);
    }
    if (rho_cmd->parsed()) return cmd_rho(rho_in, tol, rho_json, out);
    if (dis_cmd->parsed()) return cmd_dissociation(dis_in, method, dis_json, out);
    if (rw_cmd->parsed()) return cmd_rewrite(rw_in, rw_op, rw_site, rw_json, out);
    if (enum_cmd->parsed()) return cmd_enumerate(enum_k, enum_phi, jsonl_path, workers, out);
    if (ver_cmd->parsed()) return cmd_verify(ver_k, ver_json, ver_workers, out);
    if (dot_cmd->parsed()) return cmd_export_dot(dot_in, dot_out, out);
    err << "error: no subcommand\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

CommandOutcome run_capture(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CommandOutcome outcome;
  outcome.exit_code = run(args, out, err);
  outcome.output = out.str();
  outcome.diagnostics = err.str();
  return outcome;
}

}  // namespace blockspectra::cli
