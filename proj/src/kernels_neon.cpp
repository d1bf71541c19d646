// NEON kernel variants for aarch64. NEON is baseline there, so no runtime
// feature probe is needed beyond the architecture itself.

#include <arm_neon.h>

#include <cmath>

#include "kernels_detail.hpp"

namespace blockspectra::kernels::detail {

namespace {

void matvec_neon(const double* a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = a + i * n;
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t j = 0;
    for (; j + 2 <= n; j += 2)
      acc = vfmaq_f64(acc, vld1q_f64(row + j), vld1q_f64(x + j));
    double s = vaddvq_f64(acc);
    for (; j < n; ++j) s += row[j] * x[j];
    y[i] = s;
  }
}

double dot_neon(const double* x, const double* y, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2)
    acc = vfmaq_f64(acc, vld1q_f64(x + j), vld1q_f64(y + j));
  double s = vaddvq_f64(acc);
  for (; j < n; ++j) s += x[j] * y[j];
  return s;
}

void axpy_neon(double alpha, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    float64x2_t vy = vld1q_f64(y + j);
    vy = vfmaq_f64(vy, va, vld1q_f64(x + j));
    vst1q_f64(y + j, vy);
  }
  for (; j < n; ++j) y[j] += alpha * x[j];
}

void scale_neon(double alpha, double* x, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2)
    vst1q_f64(x + j, vmulq_f64(va, vld1q_f64(x + j)));
  for (; j < n; ++j) x[j] *= alpha;
}

double residual_neon(const double* y, double lambda, const double* x, std::size_t n) {
  const float64x2_t vl = vdupq_n_f64(lambda);
  float64x2_t vmax = vdupq_n_f64(0.0);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    float64x2_t r = vfmsq_f64(vld1q_f64(y + j), vl, vld1q_f64(x + j));
    vmax = vmaxq_f64(vmax, vabsq_f64(r));
  }
  double m = vmaxvq_f64(vmax);
  for (; j < n; ++j) {
    double r = std::fabs(y[j] - lambda * x[j]);
    if (r > m) m = r;
  }
  return m;
}

}  // namespace

Vtable neon_vtable() {
  return {matvec_neon, dot_neon, axpy_neon, scale_neon, residual_neon};
}

}  // namespace blockspectra::kernels::detail
