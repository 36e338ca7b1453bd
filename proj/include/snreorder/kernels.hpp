#ifndef SNREORDER_KERNELS_HPP_
#define SNREORDER_KERNELS_HPP_

#include <string_view>

#include "snreorder/types.hpp"

// Dense column-major kernels used by the supernodal factorization. Each has a
// portable scalar reference and, on x86-64, an AVX2/FMA variant picked at
// runtime. Both variants run the same loop order; they differ only in fused
// multiply-add rounding.
namespace snr::kernels {

struct KernelSet {
  const char* name;

  // In-place lower Cholesky of the n x n block `a`. Returns -1 on success,
  // otherwise the local column whose pivot was not positive.
  Index (*potrf)(double* a, Index n, Index lda);

  // b (m x n) <- b * L^{-T}, with L the n x n lower triangle in `l`.
  void (*trsm)(const double* l, Index n, Index ldl, double* b, Index m,
               Index ldb);

  // Lower triangle of c (k x k) -= a * a^T, a is k x w.
  void (*syrk)(double* c, Index k, Index ldc, const double* a, Index w,
               Index lda);

  // c (m x k) -= a * b^T, a is m x w, b is k x w.
  void (*gemm)(double* c, Index m, Index k, Index ldc, const double* a,
               Index lda, const double* b, Index ldb, Index w);
};

const KernelSet& scalar_kernels();

// nullptr when the AVX2 variant is not compiled in or the CPU lacks AVX2/FMA.
const KernelSet* avx2_kernels();

// The variant used by default: AVX2 when available, unless the environment
// variable SNREORDER_KERNELS is set to "scalar".
const KernelSet& active_kernels();

// Looks a variant up by name ("scalar" or "avx2"); nullptr if unavailable.
const KernelSet* find_kernels(std::string_view name);

}  // namespace snr::kernels

#endif  // SNREORDER_KERNELS_HPP_
