#ifndef SNREORDER_KERNELS_IMPL_HPP_
#define SNREORDER_KERNELS_IMPL_HPP_

#include <cstddef>
#include <cstdint>

namespace snr {
using Index = std::int32_t;  // matches snreorder/types.hpp
}

// Per-variant entry points. The AVX2 translation unit is built with
// -mavx2 -mfma and must only be entered after a CPU check.
namespace snr::kernels {

namespace scalar {
Index potrf(double* a, Index n, Index lda);
void trsm(const double* l, Index n, Index ldl, double* b, Index m, Index ldb);
void syrk(double* c, Index k, Index ldc, const double* a, Index w, Index lda);
void gemm(double* c, Index m, Index k, Index ldc, const double* a, Index lda,
          const double* b, Index ldb, Index w);
}  // namespace scalar

namespace avx2 {
Index potrf(double* a, Index n, Index lda);
void trsm(const double* l, Index n, Index ldl, double* b, Index m, Index ldb);
void syrk(double* c, Index k, Index ldc, const double* a, Index w, Index lda);
void gemm(double* c, Index m, Index k, Index ldc, const double* a, Index lda,
          const double* b, Index ldb, Index w);
}  // namespace avx2

}  // namespace snr::kernels

#endif  // SNREORDER_KERNELS_IMPL_HPP_
