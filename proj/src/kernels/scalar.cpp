#include <cmath>

#include "kernels_impl.hpp"

namespace mcdm::kernels::detail {

void column_sum_squares_scalar(const double* x, std::size_t rows, std::size_t cols, double* out) {
  for (std::size_t j = 0; j < cols; ++j) out[j] = 0.0;
  for (std::size_t i = 0; i < rows; ++i) {
    const double* row = x + i * cols;
    for (std::size_t j = 0; j < cols; ++j) out[j] += row[j] * row[j];
  }
}

void scale_columns_scalar(const double* x, std::size_t rows, std::size_t cols, const double* scale,
                          double* out) {
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out[i * cols + j] = x[i * cols + j] * scale[j];
  }
}

void row_distances_scalar(const double* v, std::size_t rows, std::size_t cols, const double* point,
                          double* out) {
  for (std::size_t i = 0; i < rows; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < cols; ++j) {
      const double t = v[i * cols + j] - point[j];
      acc += t * t;
    }
    out[i] = std::sqrt(acc);
  }
}

void matvec_scalar(const double* a, std::size_t n, const double* x, double* y) {
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += a[i * n + j] * x[j];
    y[i] = acc;
  }
}

void closeness_batch_scalar(const double* r, std::size_t rows, std::size_t cols, const double* best,
                            const double* worst, const double* weights, std::size_t samples,
                            double* cc) {
  for (std::size_t s = 0; s < samples; ++s) {
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
      const double dp = std::sqrt(plus);
      const double dm = std::sqrt(minus);
      const double total = dp + dm;
      cc[i * samples + s] = total > 0.0 ? dm / total : 0.5;
    }
  }
}

}  // namespace mcdm::kernels::detail
