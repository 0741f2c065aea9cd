#include "cpident/kernels.hpp"

namespace cpident::kernels {

namespace {

void cyclic_mac_scalar(const std::int64_t* a2, const std::int64_t* b, int order, int shift,
                       std::int64_t* out) {
  for (int k = 0; k < order; ++k) {
    const std::int64_t bk = b[k];
    if (bk == 0) continue;
    int off = -k - shift;
    off %= order;
    if (off < 0) off += order;
    const std::int64_t* src = a2 + off;
    for (int t = 0; t < order; ++t) out[t] += bk * src[t];
  }
}

void accumulate_scalar(const std::int64_t* in, int order, std::int64_t* acc) {
  for (int t = 0; t < order; ++t) acc[t] += in[t];
}

constexpr KernelSet kScalar{"scalar", &cyclic_mac_scalar, &accumulate_scalar};

}  // namespace

const KernelSet& scalar() { return kScalar; }

}  // namespace cpident::kernels
