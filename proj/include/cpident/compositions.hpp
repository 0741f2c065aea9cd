#pragma once

// Bounded compositions {n_j}: 0 <= n_j <= N-1, n_1 + ... + n_L = m.

#include <iterator>
#include <optional>
#include <span>
#include <vector>

#include "cpident/cyclotomic.hpp"

namespace cpident {

class Composition {
 public:
  /// Throws std::invalid_argument unless every part lies in [0, bound-1].
  Composition(std::vector<int> parts, int bound);
  static Composition zeros(int length, int bound);

  std::span<const int> parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  /// N: parts are at most N-1.
  int bound() const noexcept { return bound_; }
  int total() const noexcept;
  int operator[](std::size_t j) const { return parts_[j]; }

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  friend class CompositionRange;
  Composition() = default;

  std::vector<int> parts_;
  int bound_ = 2;
};

/// Prefix and suffix sums of a vector v of length L:
///   before[j] = sum_{l<j} v_l  (L+1 entries; before[L] is the total)
///   after[j]  = sum_{l>j} v_l  (L entries)
/// With v = n these are N_j and Nbar_j; with mu and lambda they give a_j,
/// abar_j, b_j and bbar_j.
struct PrefixData {
  std::vector<long> before;
  std::vector<long> after;
};

PrefixData prefix_data(std::span<const int> values);
inline PrefixData prefix_data(const Composition& c) { return prefix_data(c.parts()); }

/// All bounded compositions of m into L parts, lazily, in lexicographic
/// order of the parts.  A range restricted to one first-part value is a
/// contiguous slice of the full order, which makes chunked parallel
/// reductions deterministic.
class CompositionRange {
 public:
  /// Throws std::invalid_argument for L < 1 or N < 2.  Out-of-range m gives
  /// an empty range.
  CompositionRange(int length, int bound, int total);
  CompositionRange(int length, int bound, int total, int first_part);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Composition;
    using difference_type = std::ptrdiff_t;
    using pointer = const Composition*;
    using reference = const Composition&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

   private:
    friend class CompositionRange;
    Composition current_;
    std::optional<int> first_;
    bool done_ = true;
  };

  iterator begin() const;
  iterator end() const { return iterator{}; }

  /// Number of compositions, by walking the range.
  std::size_t count() const;

 private:
  int length_;
  int bound_;
  int total_;
  std::optional<int> first_;
};

/// Coefficients c_0..c_{(N-1)L} of ((1 - t^N)/(1 - t))^L.
std::vector<Integer> count_cm(int length, int bound);

}  // namespace cpident
