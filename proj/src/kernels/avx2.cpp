#include "kernels_impl.hpp"

#if MCDM_HAVE_AVX2_KERNELS

#include <immintrin.h>

// Compiled for the baseline ISA; only these functions are AVX2 encoded, and the
// dispatcher calls them after a CPUID check. FMA is deliberately not enabled.
#define MCDM_AVX2 __attribute__((target("avx2")))

namespace mcdm::kernels::detail {

MCDM_AVX2 void column_sum_squares_avx2(const double* x, std::size_t rows, std::size_t cols,
                                       double* out) {
  std::size_t j = 0;
  for (; j + 4 <= cols; j += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < rows; ++i) {
      const __m256d v = _mm256_loadu_pd(x + i * cols + j);
      acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
    }
    _mm256_storeu_pd(out + j, acc);
  }
  for (; j < cols; ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < rows; ++i) acc += x[i * cols + j] * x[i * cols + j];
    out[j] = acc;
  }
}

MCDM_AVX2 void scale_columns_avx2(const double* x, std::size_t rows, std::size_t cols,
                                  const double* scale, double* out) {
  for (std::size_t i = 0; i < rows; ++i) {
    const double* src = x + i * cols;
    double* dst = out + i * cols;
    std::size_t j = 0;
    for (; j + 4 <= cols; j += 4) {
      _mm256_storeu_pd(dst + j, _mm256_mul_pd(_mm256_loadu_pd(src + j), _mm256_loadu_pd(scale + j)));
    }
    for (; j < cols; ++j) dst[j] = src[j] * scale[j];
  }
}

MCDM_AVX2 void row_distances_avx2(const double* v, std::size_t rows, std::size_t cols,
                                  const double* point, double* out) {
  std::size_t i = 0;
  for (; i + 4 <= rows; i += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t j = 0; j < cols; ++j) {
      const __m256d vals = _mm256_set_pd(v[(i + 3) * cols + j], v[(i + 2) * cols + j],
                                         v[(i + 1) * cols + j], v[i * cols + j]);
      const __m256d t = _mm256_sub_pd(vals, _mm256_set1_pd(point[j]));
      acc = _mm256_add_pd(acc, _mm256_mul_pd(t, t));
    }
    _mm256_storeu_pd(out + i, _mm256_sqrt_pd(acc));
  }
  if (i < rows) row_distances_scalar(v + i * cols, rows - i, cols, point, out + i);
}

MCDM_AVX2 void matvec_avx2(const double* a, std::size_t n, const double* x, double* y) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t j = 0; j < n; ++j) {
      const __m256d col = _mm256_set_pd(a[(i + 3) * n + j], a[(i + 2) * n + j], a[(i + 1) * n + j],
                                        a[i * n + j]);
      acc = _mm256_add_pd(acc, _mm256_mul_pd(col, _mm256_set1_pd(x[j])));
    }
    _mm256_storeu_pd(y + i, acc);
  }
  for (; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += a[i * n + j] * x[j];
    y[i] = acc;
  }
}

MCDM_AVX2 void closeness_batch_avx2(const double* r, std::size_t rows, std::size_t cols,
                                    const double* best, const double* worst, const double* weights,
                                    std::size_t samples, double* cc) {
  const __m256d zero = _mm256_setzero_pd();
  const __m256d half = _mm256_set1_pd(0.5);
  std::size_t s = 0;
  for (; s + 4 <= samples; s += 4) {
    for (std::size_t i = 0; i < rows; ++i) {
      __m256d plus = _mm256_setzero_pd();
      __m256d minus = _mm256_setzero_pd();
      for (std::size_t j = 0; j < cols; ++j) {
        const __m256d w = _mm256_loadu_pd(weights + j * samples + s);
        const __m256d v = _mm256_mul_pd(_mm256_set1_pd(r[i * cols + j]), w);
        const __m256d tp = _mm256_sub_pd(v, _mm256_mul_pd(_mm256_set1_pd(best[j]), w));
        const __m256d tm = _mm256_sub_pd(v, _mm256_mul_pd(_mm256_set1_pd(worst[j]), w));
        plus = _mm256_add_pd(plus, _mm256_mul_pd(tp, tp));
        minus = _mm256_add_pd(minus, _mm256_mul_pd(tm, tm));
      }
      const __m256d dp = _mm256_sqrt_pd(plus);
      const __m256d dm = _mm256_sqrt_pd(minus);
      const __m256d total = _mm256_add_pd(dp, dm);
      const __m256d ratio = _mm256_div_pd(dm, total);
      const __m256d positive = _mm256_cmp_pd(total, zero, _CMP_GT_OQ);
      _mm256_storeu_pd(cc + i * samples + s, _mm256_blendv_pd(half, ratio, positive));
    }
  }
  for (; s < samples; ++s) {
    for (std::size_t i = 0; i < rows; ++i) {
      double plus = 0.0;
      double minus = 0.0;
      for (std::size_t j = 0; j < cols; ++j) {
        const double w = weights[j * samples + s];
        const double v = r[i * cols + j] * w;
        const double tp = v - best[j] * w;
        const double tm = v - worst[j] * w;
        plus += tp * tp;
        minus += tm * tm;
      }
      const double dp = __builtin_sqrt(plus);
      const double dm = __builtin_sqrt(minus);
      const double total = dp + dm;
      cc[i * samples + s] = total > 0.0 ? dm / total : 0.5;
    }
  }
}

}  // namespace mcdm::kernels::detail

#endif
