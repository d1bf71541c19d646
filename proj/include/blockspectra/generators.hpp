#pragma once

#include <random>

#include "blockspectra/rewrites.hpp"

namespace blockspectra {

// A block graph together with a planted, precondition-satisfying site and
// the maximum dissociation certificate the site was validated against.
struct RewriteInstance {
  Graph graph;
  BlockDecomposition decomposition;
  DissociationCertificate max_set;
  RewriteSite site;
};

// Lex-least maximum dissociation set among those avoiding `forbidden`.
// The result is a maximum set of g only if its phi matches the true one;
// callers check that.
DissociationCertificate max_dissociation_excluding(const Graph& g,
                                                   const std::vector<int>& forbidden);

// Randomized central/chain block graphs (14 vertices or fewer) with a
// planted site satisfying every precondition of `op`, deterministic for a
// fixed rng state. Draws and validates candidates; throws after too many
// failed attempts (which would indicate a broken family).
RewriteInstance generate_rewrite_instance(RewriteOp op, std::mt19937_64& rng);

}  // namespace blockspectra
