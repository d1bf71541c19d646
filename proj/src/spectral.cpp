#include "blockspectra/spectral.hpp"

#include <cmath>

#include "blockspectra/kernels.hpp"

namespace blockspectra {

namespace {

std::vector<double> dense_matrix(const Graph& g, double diagonal) {
  const std::size_t n = g.vertex_count();
  std::vector<double> a(n * n, 0.0);
  for (auto [u, v] : g.edges()) {
    a[static_cast<std::size_t>(u) * n + v] = 1.0;
    a[static_cast<std::size_t>(v) * n + u] = 1.0;
  }
  for (std::size_t i = 0; i < n; ++i) a[i * n + i] = diagonal;
  return a;
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, double tol) {
  if (tol <= 0.0) throw SpectralError("tolerance must be positive");
  if (g.vertex_count() < 2) throw SpectralError("spectral radius needs at least 2 vertices");
  if (!g.is_connected()) throw SpectralError("spectral radius requires a connected graph");

  const std::size_t n = g.vertex_count();
  const std::vector<double> m = dense_matrix(g, 1.0);  // A + I

  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(n, 0.0);

  double shifted = 0.0, prev = -1.0, residual = 0.0;
  long iter = 0;
  bool converged = false;
  while (iter < kPowerIterationCap) {
    ++iter;
    kernels::matvec(m.data(), x.data(), y.data(), n);
    shifted = kernels::dot(x.data(), y.data(), n);  // Rayleigh quotient, ||x|| = 1
    residual = kernels::max_abs_residual(y.data(), shifted, x.data(), n);
    const double rho_est = shifted - 1.0;
    if (std::fabs(shifted - prev) <= tol &&
        residual <= tol * std::max(1.0, std::fabs(rho_est))) {
      converged = true;
      break;
    }
    prev = shifted;
    const double norm = std::sqrt(kernels::dot(y.data(), y.data(), n));
    kernels::scale(1.0 / norm, y.data(), n);
    x.swap(y);
  }
  if (!converged)
    throw SpectralError("power iteration did not converge within " +
                        std::to_string(kPowerIterationCap) + " iterations (tol=" +
                        std::to_string(tol) + ")");

  SpectralResult r;
  r.rho = shifted - 1.0;
  r.perron = std::move(x);
  r.residual = residual;  // equals ||A x - rho x||_inf since (A+I)x - (rho+1)x = Ax - rho x
  r.iterations = iter;
  return r;
}

bool verify_eigenpair(const Graph& g, double rho, std::span<const double> x, double tol) {
  const std::size_t n = g.vertex_count();
  if (x.size() != n) throw SpectralError("eigenvector length does not match vertex count");
  bool pos = true, neg = true;
  for (double v : x) {
    pos = pos && v > 0.0;
    neg = neg && v < 0.0;
  }
  if (!pos && !neg) return false;

  const std::vector<double> a = dense_matrix(g, 0.0);
  std::vector<double> y(n, 0.0);
  kernels::matvec(a.data(), x.data(), y.data(), n);
  const double res = kernels::max_abs_residual(y.data(), rho, x.data(), n);
  return res <= tol * std::max(1.0, std::fabs(rho));
}

RadiusOrder compare_spectral_radii(const Graph& g1, const Graph& g2, double margin, double tol) {
  if (margin < 2.0 * tol)
    throw SpectralError("margin must be at least twice the solver tolerance");
  const double r1 = spectral_radius(g1, tol).rho;
  const double r2 = spectral_radius(g2, tol).rho;
  if (r1 - r2 > margin) return RadiusOrder::Greater;
  if (r2 - r1 > margin) return RadiusOrder::Less;
  return RadiusOrder::Indistinguishable;
}

}  // namespace blockspectra
