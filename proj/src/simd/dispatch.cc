#include <cstdlib>
#include <string_view>

#include "cmcf/simd/kernels.h"

namespace cmcf {
namespace simd {

#if defined(CMCF_HAVE_AVX2)
namespace internal {
const KernelTable& Avx2Table();
}  // namespace internal
#endif

const KernelTable* Avx2Kernels() {
#if defined(CMCF_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  if (supported) return &internal::Avx2Table();
#endif
  return nullptr;
}

const KernelTable& ActiveKernels() {
  static const KernelTable* active = [] {
    const char* env = std::getenv("CMCF_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") {
      return &ScalarKernels();
    }
    const KernelTable* avx2 = Avx2Kernels();
    return avx2 != nullptr ? avx2 : &ScalarKernels();
  }();
  return *active;
}

}  // namespace simd
}  // namespace cmcf
