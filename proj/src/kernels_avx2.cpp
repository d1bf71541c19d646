// AVX2+FMA kernel variants. Compiled with -mavx2 -mfma; only ever called
// after runtime detection in kernels.cpp confirms support.

#include <immintrin.h>

#include <cmath>

#include "kernels_detail.hpp"

namespace blockspectra::kernels::detail {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d h = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, h));
}

void matvec_avx2(const double* a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = a + i * n;
    __m256d acc = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4)
      acc = _mm256_fmadd_pd(_mm256_loadu_pd(row + j), _mm256_loadu_pd(x + j), acc);
    double s = hsum(acc);
    for (; j < n; ++j) s += row[j] * x[j];
    y[i] = s;
  }
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4)
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + j), _mm256_loadu_pd(y + j), acc);
  double s = hsum(acc);
  for (; j < n; ++j) s += x[j] * y[j];
  return s;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    __m256d vy = _mm256_loadu_pd(y + j);
    vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + j), vy);
    _mm256_storeu_pd(y + j, vy);
  }
  for (; j < n; ++j) y[j] += alpha * x[j];
}

void scale_avx2(double alpha, double* x, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4)
    _mm256_storeu_pd(x + j, _mm256_mul_pd(va, _mm256_loadu_pd(x + j)));
  for (; j < n; ++j) x[j] *= alpha;
}

double residual_avx2(const double* y, double lambda, const double* x, std::size_t n) {
  const __m256d vl = _mm256_set1_pd(lambda);
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  __m256d vmax = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    __m256d r = _mm256_fnmadd_pd(vl, _mm256_loadu_pd(x + j), _mm256_loadu_pd(y + j));
    r = _mm256_andnot_pd(sign_mask, r);
    vmax = _mm256_max_pd(vmax, r);
  }
  double buf[4];
  _mm256_storeu_pd(buf, vmax);
  double m = buf[0];
  for (int t = 1; t < 4; ++t)
    if (buf[t] > m) m = buf[t];
  for (; j < n; ++j) {
    double r = std::fabs(y[j] - lambda * x[j]);
    if (r > m) m = r;
  }
  return m;
}

}  // namespace

Vtable avx2_vtable() {
  return {matvec_avx2, dot_avx2, axpy_avx2, scale_avx2, residual_avx2};
}

}  // namespace blockspectra::kernels::detail
