#include <immintrin.h>

#include "bhwalk/kernels.hpp"

namespace bhw::kernels {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

void gemv_t_avx2(const double* A, int rows, int cols, const double* x,
                 double* y) {
  for (int j = 0; j < cols; ++j) {
    const double* col = A + static_cast<long>(j) * rows;
    __m256d acc = _mm256_setzero_pd();
    int r = 0;
    for (; r + 4 <= rows; r += 4)
      acc = _mm256_fmadd_pd(_mm256_loadu_pd(col + r), _mm256_loadu_pd(x + r),
                            acc);
    double tail = 0.0;
    for (; r < rows; ++r) tail += col[r] * x[r];
    y[j] = hsum(acc) + tail;
  }
}

void gemv_n_avx2(const double* A, int rows, int cols, const double* x,
                 double* y) {
  for (int r = 0; r < rows; ++r) y[r] = 0.0;
  for (int j = 0; j < cols; ++j) {
    const double* col = A + static_cast<long>(j) * rows;
    const __m256d xj = _mm256_set1_pd(x[j]);
    int r = 0;
    for (; r + 4 <= rows; r += 4) {
      __m256d acc = _mm256_fmadd_pd(xj, _mm256_loadu_pd(col + r),
                                    _mm256_loadu_pd(y + r));
      _mm256_storeu_pd(y + r, acc);
    }
    for (; r < rows; ++r) y[r] += x[j] * col[r];
  }
}

void phase_apply_avx2(const double* c, const double* s, double* re, double* im,
                      int n) {
  int k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d r = _mm256_loadu_pd(re + k);
    const __m256d i = _mm256_loadu_pd(im + k);
    const __m256d vc = _mm256_loadu_pd(c + k);
    const __m256d vs = _mm256_loadu_pd(s + k);
    _mm256_storeu_pd(re + k, _mm256_fmadd_pd(r, vc, _mm256_mul_pd(i, vs)));
    _mm256_storeu_pd(im + k, _mm256_fmsub_pd(i, vc, _mm256_mul_pd(r, vs)));
  }
  for (; k < n; ++k) {
    const double r = re[k], i = im[k];
    re[k] = r * c[k] + i * s[k];
    im[k] = i * c[k] - r * s[k];
  }
}

void abs2_avx2(const double* re, const double* im, double* out, int n) {
  int k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d r = _mm256_loadu_pd(re + k);
    const __m256d i = _mm256_loadu_pd(im + k);
    _mm256_storeu_pd(out + k, _mm256_fmadd_pd(r, r, _mm256_mul_pd(i, i)));
  }
  for (; k < n; ++k) out[k] = re[k] * re[k] + im[k] * im[k];
}

double sum_abs2_avx2(const double* re, const double* im, int n) {
  __m256d acc = _mm256_setzero_pd();
  int k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d r = _mm256_loadu_pd(re + k);
    const __m256d i = _mm256_loadu_pd(im + k);
    acc = _mm256_fmadd_pd(r, r, acc);
    acc = _mm256_fmadd_pd(i, i, acc);
  }
  double tail = 0.0;
  for (; k < n; ++k) tail += re[k] * re[k] + im[k] * im[k];
  return hsum(acc) + tail;
}

}  // namespace

const Ops& avx2_ops() {
  static const Ops ops{gemv_t_avx2, gemv_n_avx2, phase_apply_avx2, abs2_avx2,
                       sum_abs2_avx2, "avx2"};
  return ops;
}

}  // namespace bhw::kernels
