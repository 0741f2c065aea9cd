#pragma once

// Integer kernels for the enumeration hot loops.
//
// Values live in the group ring Z[x]/(x^M - 1), M = 2N, stored as M int64
// coefficients; x maps to zeta when a result is finally reduced into a
// CycNum.  Every kernel exists as a scalar reference and, where the CPU
// supports it, an AVX2 variant; active() picks one at runtime.

#include <cstdint>
#include <string_view>

namespace cpident::kernels {

struct KernelSet {
  std::string_view name;
  /// out[t] += sum_k b[k] * a[(t - k - shift) mod M] for t in [0, M).
  /// `a2` holds a twice (2M entries) so every rotation is a contiguous read.
  /// 0 <= shift < M.
  void (*cyclic_mac)(const std::int64_t* a2, const std::int64_t* b, int order, int shift,
                     std::int64_t* out);
  /// acc[t] += in[t] for t in [0, M).
  void (*accumulate)(const std::int64_t* in, int order, std::int64_t* acc);
};

const KernelSet& scalar();
/// nullptr when the AVX2 variant is not compiled in or the CPU lacks AVX2.
const KernelSet* avx2();
/// AVX2 when available, unless CPIDENT_SIMD=scalar is set in the environment.
const KernelSet& active();

}  // namespace cpident::kernels
