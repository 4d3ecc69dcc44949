#pragma once

// Hot inner loops, scalar and AVX2.
//
// Each kernel has a scalar reference and, on x86-64, an AVX2 variant selected at
// runtime. The vector variants put independent outputs in separate lanes and keep
// the scalar per-output operation order (no FMA, no cross-lane reductions), so
// both backends produce bit-identical results.
//
// All matrices are dense row-major.

#include <cstddef>
#include <string_view>

namespace mcdm::kernels {

struct KernelTable {
  const char* name;

  // out[j] = sum_i x[i][j]^2
  void (*column_sum_squares)(const double* x, std::size_t rows, std::size_t cols, double* out);

  // out[i][j] = x[i][j] * scale[j]
  void (*scale_columns)(const double* x, std::size_t rows, std::size_t cols, const double* scale,
                        double* out);

  // out[i] = sqrt(sum_j (v[i][j] - point[j])^2)
  void (*row_distances)(const double* v, std::size_t rows, std::size_t cols, const double* point,
                        double* out);

  // y = a x for square a of order n
  void (*matvec)(const double* a, std::size_t n, const double* x, double* y);

  // Closeness coefficients for a batch of weight vectors against one normalized
  // decision matrix r (rows x cols). weights is cols x samples (one column per
  // sample); best/worst are the per-criterion normalized ideals, so the weighted
  // ideal for sample s is weights[j][s] * best[j]. cc is rows x samples.
  void (*closeness_batch)(const double* r, std::size_t rows, std::size_t cols, const double* best,
                          const double* worst, const double* weights, std::size_t samples,
                          double* cc);
};

enum class Backend { Auto, Scalar, Avx2 };

const KernelTable& scalar_kernels();
// nullptr when not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

// Kernels used by the engines. Auto picks AVX2 when available; the
// MCDM_KERNELS environment variable ("scalar" or "avx2") overrides Auto.
const KernelTable& active();
// Forces a backend for the process; requesting Avx2 where unavailable falls back
// to scalar and returns false.
bool select(Backend backend);
std::string_view active_name();

}  // namespace mcdm::kernels
