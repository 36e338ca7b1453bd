// Built with -mavx2 -mfma. Keep this file free of library templates so no
// AVX2-compiled inline code can leak into other translation units.
#include <immintrin.h>


#include "kernels_impl.hpp"

namespace snr::kernels::avx2 {
namespace {

// y[0..len) -= s * x[0..len)
inline void axpy_neg(double* y, const double* x, double s, Index len) {
  const __m256d vs = _mm256_set1_pd(s);
  Index i = 0;
  for (; i + 8 <= len; i += 8) {
    __m256d y0 = _mm256_loadu_pd(y + i);
    __m256d y1 = _mm256_loadu_pd(y + i + 4);
    y0 = _mm256_fnmadd_pd(_mm256_loadu_pd(x + i), vs, y0);
    y1 = _mm256_fnmadd_pd(_mm256_loadu_pd(x + i + 4), vs, y1);
    _mm256_storeu_pd(y + i, y0);
    _mm256_storeu_pd(y + i + 4, y1);
  }
  for (; i + 4 <= len; i += 4) {
    __m256d y0 = _mm256_loadu_pd(y + i);
    y0 = _mm256_fnmadd_pd(_mm256_loadu_pd(x + i), vs, y0);
    _mm256_storeu_pd(y + i, y0);
  }
  for (; i < len; ++i) y[i] = __builtin_fma(-x[i], s, y[i]);
}

inline void scale_div(double* y, double d, Index len) {
  const __m256d vd = _mm256_set1_pd(d);
  Index i = 0;
  for (; i + 4 <= len; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_div_pd(_mm256_loadu_pd(y + i), vd));
  }
  for (; i < len; ++i) y[i] /= d;
}

}  // namespace

Index potrf(double* a, Index n, Index lda) {
  for (Index j = 0; j < n; ++j) {
    double* col = a + static_cast<std::ptrdiff_t>(j) * lda;
    for (Index k = 0; k < j; ++k) {
      const double* ck = a + static_cast<std::ptrdiff_t>(k) * lda;
      axpy_neg(col + j, ck + j, ck[j], n - j);
    }
    const double d = col[j];
    if (!(d > 0.0) || !__builtin_isfinite(d)) return j;
    const double l = __builtin_sqrt(d);
    col[j] = l;
    scale_div(col + j + 1, l, n - j - 1);
  }
  return -1;
}

void trsm(const double* l, Index n, Index ldl, double* b, Index m, Index ldb) {
  for (Index c = 0; c < n; ++c) {
    double* bc = b + static_cast<std::ptrdiff_t>(c) * ldb;
    for (Index k = 0; k < c; ++k) {
      axpy_neg(bc, b + static_cast<std::ptrdiff_t>(k) * ldb,
               l[c + static_cast<std::ptrdiff_t>(k) * ldl], m);
    }
    scale_div(bc, l[c + static_cast<std::ptrdiff_t>(c) * ldl], m);
  }
}

void syrk(double* c, Index k, Index ldc, const double* a, Index w, Index lda) {
  for (Index j = 0; j < k; ++j) {
    double* cj = c + static_cast<std::ptrdiff_t>(j) * ldc;
    for (Index p = 0; p < w; ++p) {
      const double* ap = a + static_cast<std::ptrdiff_t>(p) * lda;
      axpy_neg(cj + j, ap + j, ap[j], k - j);
    }
  }
}

void gemm(double* c, Index m, Index k, Index ldc, const double* a, Index lda,
          const double* b, Index ldb, Index w) {
  for (Index j = 0; j < k; ++j) {
    double* cj = c + static_cast<std::ptrdiff_t>(j) * ldc;
    for (Index p = 0; p < w; ++p) {
      axpy_neg(cj, a + static_cast<std::ptrdiff_t>(p) * lda,
               b[j + static_cast<std::ptrdiff_t>(p) * ldb], m);
    }
  }
}

}  // namespace snr::kernels::avx2
