#include <cmath>

#include "kernels_impl.hpp"

namespace snr::kernels::scalar {
namespace {

// y[0..len) -= s * x[0..len)
inline void axpy_neg(double* y, const double* x, double s, Index len) {
  for (Index i = 0; i < len; ++i) y[i] -= x[i] * s;
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
    if (!(d > 0.0) || !std::isfinite(d)) return j;
    const double l = std::sqrt(d);
    col[j] = l;
    for (Index i = j + 1; i < n; ++i) col[i] /= l;
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
    const double d = l[c + static_cast<std::ptrdiff_t>(c) * ldl];
    for (Index i = 0; i < m; ++i) bc[i] /= d;
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

}  // namespace snr::kernels::scalar
