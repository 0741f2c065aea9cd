// Built with -mavx2; reached only through the dispatcher after a CPU check.

#include <immintrin.h>

#include "cpident/kernels.hpp"

namespace cpident::kernels {

namespace {

// Low 64 bits of a 64x64 product; AVX2 has no vpmullq.  b_hi holds b >> 32.
inline __m256i mullo_epi64(__m256i a, __m256i b, __m256i b_hi) {
  const __m256i lo = _mm256_mul_epu32(a, b);
  const __m256i a_hi = _mm256_srli_epi64(a, 32);
  const __m256i cross = _mm256_add_epi64(_mm256_mul_epu32(a_hi, b), _mm256_mul_epu32(a, b_hi));
  return _mm256_add_epi64(lo, _mm256_slli_epi64(cross, 32));
}

void cyclic_mac_avx2(const std::int64_t* a2, const std::int64_t* b, int order, int shift,
                     std::int64_t* out) {
  for (int k = 0; k < order; ++k) {
    const std::int64_t bk = b[k];
    if (bk == 0) continue;
    int off = -k - shift;
    off %= order;
    if (off < 0) off += order;
    const std::int64_t* src = a2 + off;
    const __m256i vb = _mm256_set1_epi64x(bk);
    const __m256i vb_hi = _mm256_srli_epi64(vb, 32);
    int t = 0;
    for (; t + 4 <= order; t += 4) {
      const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + t));
      __m256i acc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(out + t));
      acc = _mm256_add_epi64(acc, mullo_epi64(va, vb, vb_hi));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + t), acc);
    }
    for (; t < order; ++t) out[t] += bk * src[t];
  }
}

void accumulate_avx2(const std::int64_t* in, int order, std::int64_t* acc) {
  int t = 0;
  for (; t + 4 <= order; t += 4) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + t));
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + t));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + t), _mm256_add_epi64(a, s));
  }
  for (; t < order; ++t) acc[t] += in[t];
}

}  // namespace

extern const KernelSet kAvx2Kernels;
const KernelSet kAvx2Kernels{"avx2", &cyclic_mac_avx2, &accumulate_avx2};

}  // namespace cpident::kernels
