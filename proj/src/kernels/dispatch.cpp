#include <atomic>
#include <cstdlib>
#include <string_view>

#include "kernels_impl.hpp"
#include "mcdm/kernels.hpp"

namespace mcdm::kernels {

namespace {

const KernelTable kScalar{
    "scalar",
    detail::column_sum_squares_scalar,
    detail::scale_columns_scalar,
    detail::row_distances_scalar,
    detail::matvec_scalar,
    detail::closeness_batch_scalar,
};

#if MCDM_HAVE_AVX2_KERNELS
const KernelTable kAvx2{
    "avx2",
    detail::column_sum_squares_avx2,
    detail::scale_columns_avx2,
    detail::row_distances_avx2,
    detail::matvec_avx2,
    detail::closeness_batch_avx2,
};
#endif

bool cpu_has_avx2() {
#if MCDM_HAVE_AVX2_KERNELS
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable& pick_auto() {
  const char* env = std::getenv("MCDM_KERNELS");
  if (env != nullptr && std::string_view(env) == "scalar") return kScalar;
  if (const KernelTable* vec = avx2_kernels()) return *vec;
  return kScalar;
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{&pick_auto()};
  return table;
}

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

const KernelTable* avx2_kernels() {
#if MCDM_HAVE_AVX2_KERNELS
  static const bool available = cpu_has_avx2();
  return available ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() { return *current().load(std::memory_order_acquire); }

bool select(Backend backend) {
  const KernelTable* table = &kScalar;
  bool honoured = true;
  switch (backend) {
    case Backend::Auto:
      table = &pick_auto();
      break;
    case Backend::Scalar:
      break;
    case Backend::Avx2:
      if (const KernelTable* vec = avx2_kernels()) {
        table = vec;
      } else {
        honoured = false;
      }
      break;
  }
  current().store(table, std::memory_order_release);
  return honoured;
}

std::string_view active_name() { return active().name; }

}  // namespace mcdm::kernels
