#include "blockspectra/kernels.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "kernels_detail.hpp"

namespace blockspectra::kernels {

namespace {

void matvec_scalar(const double* a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = a + i * n;
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += row[j] * x[j];
    y[i] = s;
  }
}

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t j = 0; j < n; ++j) s += x[j] * y[j];
  return s;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) y[j] += alpha * x[j];
}

void scale_scalar(double alpha, double* x, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) x[j] *= alpha;
}

double residual_scalar(const double* y, double lambda, const double* x, std::size_t n) {
  double m = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double r = std::fabs(y[j] - lambda * x[j]);
    if (r > m) m = r;
  }
  return m;
}

detail::Vtable scalar_vtable() {
  return {matvec_scalar, dot_scalar, axpy_scalar, scale_scalar, residual_scalar};
}

Backend detect_backend() {
#if defined(BLOCKSPECTRA_KERNELS_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Backend::Avx2;
#endif
#if defined(BLOCKSPECTRA_KERNELS_NEON_TU)
  return Backend::Neon;  // NEON is baseline on aarch64
#endif
  return Backend::Scalar;
}

detail::Vtable vtable_for(Backend b) {
  switch (b) {
#if defined(BLOCKSPECTRA_KERNELS_AVX2_TU)
    case Backend::Avx2:
      return detail::avx2_vtable();
#endif
#if defined(BLOCKSPECTRA_KERNELS_NEON_TU)
    case Backend::Neon:
      return detail::neon_vtable();
#endif
    default:
      return scalar_vtable();
  }
}

struct State {
  Backend active = Backend::Scalar;
  detail::Vtable vt = scalar_vtable();
};

State& state() {
  static State s = [] {
    State init;
    init.active = detect_backend();
    init.vt = vtable_for(init.active);
    return init;
  }();
  return s;
}

}  // namespace

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::Auto: return "auto";
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
  }
  return "?";
}

bool backend_available(Backend b) {
  switch (b) {
    case Backend::Auto:
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
#if defined(BLOCKSPECTRA_KERNELS_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Backend::Neon:
#if defined(BLOCKSPECTRA_KERNELS_NEON_TU)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Backend active_backend() { return state().active; }

void set_backend(Backend b) {
  if (!backend_available(b))
    throw std::runtime_error(std::string("kernel backend unavailable: ") + backend_name(b));
  State& s = state();
  s.active = (b == Backend::Auto) ? detect_backend() : b;
  s.vt = vtable_for(s.active);
}

void matvec(const double* a, const double* x, double* y, std::size_t n) {
  state().vt.matvec(a, x, y, n);
}

double dot(const double* x, const double* y, std::size_t n) {
  return state().vt.dot(x, y, n);
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  state().vt.axpy(alpha, x, y, n);
}

void scale(double alpha, double* x, std::size_t n) {
  state().vt.scale(alpha, x, n);
}

double max_abs_residual(const double* y, double lambda, const double* x, std::size_t n) {
  return state().vt.max_abs_residual(y, lambda, x, n);
}

}  // namespace blockspectra::kernels
