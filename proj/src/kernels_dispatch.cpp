#include <cstdlib>
#include <string_view>

#include "cpident/kernels.hpp"

namespace cpident::kernels {

#ifdef CPIDENT_HAVE_AVX2_TU
extern const KernelSet kAvx2Kernels;
#endif

const KernelSet* avx2() {
#ifdef CPIDENT_HAVE_AVX2_TU
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &kAvx2Kernels : nullptr;
#else
  return nullptr;
#endif
}

const KernelSet& active() {
  static const KernelSet* chosen = [] {
    const char* env = std::getenv("CPIDENT_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") return &scalar();
    const KernelSet* v = avx2();
    return v != nullptr ? v : &scalar();
  }();
  return *chosen;
}

}  // namespace cpident::kernels
