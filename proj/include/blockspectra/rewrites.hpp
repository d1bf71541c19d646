#pragma once

#include <array>
#include <map>
#include <string>

#include "blockspectra/blocks.hpp"
#include "blockspectra/dissociation.hpp"
#include "blockspectra/graph.hpp"

namespace blockspectra {

struct RewritePreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class RewriteOp {
  P21MergeEmpty,
  P21MergeAtCut,
  P21MergeSingleHit,
  L22A,
  L22B,
  L23A,
  L23B,
  P22TriangleCase1,
  P22TriangleCase2,
  CutShift,
};

inline constexpr std::array<RewriteOp, 10> kAllRewriteOps = {
    RewriteOp::P21MergeEmpty,    RewriteOp::P21MergeAtCut, RewriteOp::P21MergeSingleHit,
    RewriteOp::L22A,             RewriteOp::L22B,          RewriteOp::L23A,
    RewriteOp::L23B,             RewriteOp::P22TriangleCase1,
    RewriteOp::P22TriangleCase2, RewriteOp::CutShift,
};

const char* to_string(RewriteOp op);  // e.g. "P21_MERGE_EMPTY", "L22A", "CUT_SHIFT"
RewriteOp parse_rewrite_op(const std::string& name);

// Designated vertices (roles p,q,r,s,u,v,w) and blocks (roles B,C,B1,B2,
// Km,Kn,H,T, as indices into the decomposition's block list). Block roles
// may be omitted where they are inferable from the vertex roles.
struct RewriteSite {
  RewriteOp op = RewriteOp::CutShift;
  std::map<std::string, int> vertex_roles;
  std::map<std::string, int> block_roles;
};

struct RewriteVerdicts {
  bool connected = false;
  bool block_graph = false;
  bool vertex_count_preserved = false;
  bool phi_preserved = false;
  bool rho_increased = false;  // for CUT_SHIFT: the relaxed rule with the eigenvector criterion
  bool shape_ok = false;       // output block multiset matches the operation's stated shape

  bool all() const {
    return connected && block_graph && vertex_count_preserved && phi_preserved &&
           rho_increased && shape_ok;
  }
};

struct RewriteReport {
  Graph input;
  Graph output;
  RewriteSite site;
  double rho_before = 0.0;
  double rho_after = 0.0;
  int phi_before = 0;
  int phi_after = 0;
  // CUT_SHIFT only: whether the strict-increase branch of the contract was
  // triggered (the output's Perron vector is not an eigenvector of the input).
  bool rho_strict_expected = true;
  RewriteVerdicts verdicts;
  bool contract_ok = false;
};

std::string rewrite_report_json(const RewriteReport& r);

// Perron-entry preconditions are evaluated with slack: ">=" means >= -1e-9,
// strict ">" means > +1e-9, so exact symmetric ties satisfy the weak
// inequalities.
inline constexpr double kPerronSlack = 1e-9;
inline constexpr double kRhoMargin = 1e-9;

enum class Prop21Variant { I, II, III };
enum class LemmaVariant { A, B };
enum class TriangleCase { One, Two };

// All operations validate the provided certificate (it must be a maximum
// dissociation set of g) and every role-level precondition, then return the
// transformed graph plus machine-checked contract verdicts. Precondition
// violations throw RewritePreconditionError with the offending role.

RewriteReport apply_prop21(const Graph& g, const BlockDecomposition& d,
                           const DissociationCertificate& max_set, Prop21Variant variant,
                           const RewriteSite& site);

RewriteReport apply_lemma22(const Graph& g, const BlockDecomposition& d,
                            const DissociationCertificate& max_set, LemmaVariant variant,
                            const RewriteSite& site);

RewriteReport apply_lemma23(const Graph& g, const BlockDecomposition& d,
                            const DissociationCertificate& max_set, LemmaVariant variant,
                            const RewriteSite& site);

RewriteReport apply_prop22_triangle(const Graph& g, const BlockDecomposition& d,
                                    const DissociationCertificate& max_set, TriangleCase which,
                                    const RewriteSite& site);

RewriteReport apply_cut_shift(const Graph& g, const BlockDecomposition& d,
                              const RewriteSite& site);

// Dispatch on site.op.
RewriteReport apply_rewrite(const Graph& g, const BlockDecomposition& d,
                            const DissociationCertificate& max_set, const RewriteSite& site);

}  // namespace blockspectra
