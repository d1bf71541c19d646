#pragma once

#include <cstddef>

namespace blockspectra::kernels::detail {

struct Vtable {
  void (*matvec)(const double*, const double*, double*, std::size_t);
  double (*dot)(const double*, const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  void (*scale)(double, double*, std::size_t);
  double (*max_abs_residual)(const double*, double, const double*, std::size_t);
};

#if defined(BLOCKSPECTRA_KERNELS_AVX2_TU)
Vtable avx2_vtable();
#endif
#if defined(BLOCKSPECTRA_KERNELS_NEON_TU)
Vtable neon_vtable();
#endif

}  // namespace blockspectra::kernels::detail
