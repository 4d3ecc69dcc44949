#pragma once

#include <cstddef>

namespace mcdm::kernels::detail {

void column_sum_squares_scalar(const double* x, std::size_t rows, std::size_t cols, double* out);
void scale_columns_scalar(const double* x, std::size_t rows, std::size_t cols, const double* scale,
                          double* out);
void row_distances_scalar(const double* v, std::size_t rows, std::size_t cols, const double* point,
                          double* out);
void matvec_scalar(const double* a, std::size_t n, const double* x, double* y);
void closeness_batch_scalar(const double* r, std::size_t rows, std::size_t cols, const double* best,
                            const double* worst, const double* weights, std::size_t samples,
                            double* cc);

#if defined(__x86_64__) || defined(_M_X64)
#define MCDM_HAVE_AVX2_KERNELS 1
void column_sum_squares_avx2(const double* x, std::size_t rows, std::size_t cols, double* out);
void scale_columns_avx2(const double* x, std::size_t rows, std::size_t cols, const double* scale,
                        double* out);
void row_distances_avx2(const double* v, std::size_t rows, std::size_t cols, const double* point,
                        double* out);
void matvec_avx2(const double* a, std::size_t n, const double* x, double* y);
void closeness_batch_avx2(const double* r, std::size_t rows, std::size_t cols, const double* best,
                          const double* worst, const double* weights, std::size_t samples,
                          double* cc);
#endif

}  // namespace mcdm::kernels::detail
