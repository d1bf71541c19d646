#pragma once

#include <cstddef>

// Dense double-precision kernels used by the eigensolver. A scalar reference
// implementation always exists; AVX2 (x86-64) and NEON (aarch64) variants are
// selected at runtime and must agree with the reference to rounding error.
namespace blockspectra::kernels {

enum class Backend { Auto, Scalar, Avx2, Neon };

const char* backend_name(Backend b);
bool backend_available(Backend b);

// Backend that will actually execute (Auto resolved via CPU detection).
Backend active_backend();

// Force a backend, mainly for equivalence tests. Throws std::runtime_error
// if the requested backend is unavailable on this machine/build.
void set_backend(Backend b);

// y = a * x, with a row-major n x n.
void matvec(const double* a, const double* x, double* y, std::size_t n);

double dot(const double* x, const double* y, std::size_t n);

// y += alpha * x
void axpy(double alpha, const double* x, double* y, std::size_t n);

void scale(double alpha, double* x, std::size_t n);

// max_i |y_i - lambda * x_i|  (eigen-residual in the max norm)
double max_abs_residual(const double* y, double lambda, const double* x, std::size_t n);

}  // namespace blockspectra::kernels
