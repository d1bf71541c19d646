#pragma once

#include <span>
#include <vector>

#include "blockspectra/graph.hpp"

namespace blockspectra {

struct SpectralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SpectralResult {
  double rho = 0.0;            // adjacency spectral radius
  std::vector<double> perron;  // unit 2-norm, entry-wise positive
  double residual = 0.0;       // ||A x - rho x||_inf
  long iterations = 0;
};

enum class RadiusOrder { Less, Greater, Indistinguishable };

inline constexpr double kDefaultSpectralTol = 1e-12;
inline constexpr long kPowerIterationCap = 1'000'000;

// Shifted power iteration on A + I with the deterministic all-ones start.
// The shift keeps the dominant eigenvalue strictly dominant in magnitude
// even for bipartite graphs; rho is the Rayleigh quotient of the converged
// vector minus the shift. Requires a connected graph on >= 2 vertices.
// Throws SpectralError on bad input or if the iteration cap is hit.
SpectralResult spectral_radius(const Graph& g, double tol = kDefaultSpectralTol);

// True iff ||A x - rho x||_inf <= tol * max(1, |rho|) and all entries of x
// share one strict sign. Pure predicate, never throws on value mismatches.
bool verify_eigenpair(const Graph& g, double rho, std::span<const double> x, double tol);

// Greater/Less only when the radii differ by more than margin; otherwise
// Indistinguishable and the caller decides (e.g. via isomorphism).
// margin must be at least twice the solver tolerance.
RadiusOrder compare_spectral_radii(const Graph& g1, const Graph& g2, double margin,
                                   double tol = kDefaultSpectralTol);

}  // namespace blockspectra
