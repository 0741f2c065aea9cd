#pragma once

// Direct enumeration of L-fold sums over bounded compositions,
//
//   sum over {n_j} of  prod_j factor_j(n_j) * zeta^shift(j, n_j, N_j),
//
// with every factor an element of Z[x]/(x^M - 1).  Products along a prefix
// are shared depth-first, so each tree node costs one cyclic_mac.

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "cpident/kernels.hpp"

namespace cpident {

/// factors[n] for n in [0, N-1]; each of length M (empty vector = zero).
struct SiteFactors {
  std::vector<std::vector<std::int64_t>> by_value;
};

namespace detail {

inline void check_magnitude(std::span<const SiteFactors> sites) {
  // The l1 norm is submultiplicative in the group ring, so the l1 norm of
  // every partial sum is bounded by prod_j sum_n |factor_j(n)|_1.
  long double bound = 1.0L;
  for (const auto& s : sites) {
    long double site = 0.0L;
    for (const auto& f : s.by_value) {
      for (auto c : f) site += std::fabs(static_cast<long double>(c));
    }
    bound *= site;
  }
  if (bound > 4.0e18L) {
    throw std::overflow_error("cyclic_sum: coefficient bound exceeds the int64 range");
  }
}

template <class Shift>
class CyclicSummer {
 public:
  CyclicSummer(int order, std::span<const SiteFactors> sites, Shift shift,
               const kernels::KernelSet& k, std::optional<int> fixed_total)
      : order_(order), sites_(sites), shift_(shift), kernels_(k), fixed_(fixed_total) {
    const std::size_t len = sites.size();
    bound_ = len == 0 ? 0 : static_cast<int>(sites[0].by_value.size()) - 1;
    prefix_.assign(len + 1, std::vector<std::int64_t>(2 * static_cast<std::size_t>(order), 0));
    prefix_[0][0] = 1;
    prefix_[0][static_cast<std::size_t>(order)] = 1;
    const int buckets = fixed_ ? 1 : bound_ * static_cast<int>(len) + 1;
    result_.assign(static_cast<std::size_t>(buckets), std::vector<std::int64_t>(static_cast<std::size_t>(order), 0));
  }

  std::vector<std::vector<std::int64_t>> run() {
    descend(0, 0);
    return std::move(result_);
  }

 private:
  void descend(std::size_t j, int sum) {
    if (j == sites_.size()) {
      auto& bucket = result_[fixed_ ? 0 : static_cast<std::size_t>(sum)];
      kernels_.accumulate(prefix_[j].data(), order_, bucket.data());
      return;
    }
    const int remaining_sites = static_cast<int>(sites_.size() - j) - 1;
    for (int n = 0; n <= bound_; ++n) {
      if (fixed_) {
        const int rest = *fixed_ - sum - n;
        if (rest < 0) break;
        if (rest > bound_ * remaining_sites) continue;
      }
      const auto& factor = sites_[j].by_value[static_cast<std::size_t>(n)];
      if (factor.empty()) continue;
      long s = shift_(static_cast<int>(j), n, sum) % order_;
      if (s < 0) s += order_;
      auto& out = prefix_[j + 1];
      std::fill(out.begin(), out.begin() + order_, 0);
      kernels_.cyclic_mac(prefix_[j].data(), factor.data(), order_, static_cast<int>(s), out.data());
      std::copy(out.begin(), out.begin() + order_, out.begin() + order_);
      descend(j + 1, sum + n);
    }
  }

  int order_;
  std::span<const SiteFactors> sites_;
  Shift shift_;
  const kernels::KernelSet& kernels_;
  std::optional<int> fixed_;
  int bound_ = 0;
  std::vector<std::vector<std::int64_t>> prefix_;
  std::vector<std::vector<std::int64_t>> result_;
};

}  // namespace detail

/// One group-ring sum per total m in [0, (N-1)L].  `shift(j, n, N_j)` gives
/// the zeta exponent of site j when n_j = n and the prefix sum is N_j.
template <class Shift>
std::vector<std::vector<std::int64_t>> cyclic_sum_by_total(int order, std::span<const SiteFactors> sites,
                                                           Shift shift,
                                                           const kernels::KernelSet& k = kernels::active()) {
  detail::check_magnitude(sites);
  return detail::CyclicSummer<Shift>(order, sites, shift, k, std::nullopt).run();
}

/// The group-ring sum restricted to compositions of `total`.
template <class Shift>
std::vector<std::int64_t> cyclic_sum_fixed_total(int order, std::span<const SiteFactors> sites, int total,
                                                 Shift shift,
                                                 const kernels::KernelSet& k = kernels::active()) {
  detail::check_magnitude(sites);
  if (total < 0) return std::vector<std::int64_t>(static_cast<std::size_t>(order), 0);
  return detail::CyclicSummer<Shift>(order, sites, shift, k, total).run().front();
}

/// a * b in Z[x]/(x^M - 1).
std::vector<std::int64_t> cyclic_multiply(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                                          const kernels::KernelSet& k = kernels::active());

}  // namespace cpident
