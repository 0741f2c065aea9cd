#include "cpident/compositions.hpp"

#include <numeric>
#include <stdexcept>

namespace cpident {

namespace {

// Lexicographically smallest arrangement of `sum` into parts[from..]: fill
// from the right.
void fill_smallest(std::vector<int>& parts, std::size_t from, int sum, int max_part) {
  for (std::size_t j = parts.size(); j-- > from;) {
    parts[j] = std::min(max_part, sum);
    sum -= parts[j];
  }
}

void check_shape(int length, int bound) {
  if (length < 1) throw std::invalid_argument("compositions: L must be at least 1");
  if (bound < 2) throw std::invalid_argument("compositions: N must be at least 2");
}

}  // namespace

Composition::Composition(std::vector<int> parts, int bound) : parts_(std::move(parts)), bound_(bound) {
  if (bound < 2) throw std::invalid_argument("Composition: N must be at least 2");
  for (int p : parts_) {
    if (p < 0 || p > bound - 1) throw std::invalid_argument("Composition: parts must lie in [0, N-1]");
  }
}

Composition Composition::zeros(int length, int bound) {
  return Composition(std::vector<int>(static_cast<std::size_t>(length), 0), bound);
}

int Composition::total() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

PrefixData prefix_data(std::span<const int> values) {
  PrefixData d;
  const std::size_t len = values.size();
  d.before.assign(len + 1, 0);
  d.after.assign(len, 0);
  for (std::size_t j = 0; j < len; ++j) d.before[j + 1] = d.before[j] + values[j];
  for (std::size_t j = 0; j < len; ++j) d.after[j] = d.before[len] - d.before[j + 1];
  return d;
}

CompositionRange::CompositionRange(int length, int bound, int total)
    : length_(length), bound_(bound), total_(total) {
  check_shape(length, bound);
}

CompositionRange::CompositionRange(int length, int bound, int total, int first_part)
    : length_(length), bound_(bound), total_(total), first_(first_part) {
  check_shape(length, bound);
}

CompositionRange::iterator CompositionRange::begin() const {
  iterator it;
  const int max_part = bound_ - 1;
  if (total_ < 0 || total_ > max_part * length_) return it;
  std::vector<int> parts(static_cast<std::size_t>(length_), 0);
  if (first_) {
    const int f = *first_;
    const int rest = total_ - f;
    if (f < 0 || f > max_part || rest < 0 || rest > max_part * (length_ - 1)) return it;
    parts[0] = f;
    fill_smallest(parts, 1, rest, max_part);
  } else {
    fill_smallest(parts, 0, total_, max_part);
  }
  it.current_.parts_ = std::move(parts);
  it.current_.bound_ = bound_;
  it.first_ = first_;
  it.done_ = false;
  return it;
}

CompositionRange::iterator& CompositionRange::iterator::operator++() {
  auto& parts = current_.parts_;
  const int max_part = current_.bound_ - 1;
  const std::size_t len = parts.size();
  if (len < 2) {
    done_ = true;
    return *this;
  }
  // rightmost i < L-1 that can grow while the suffix still has mass to give
  int suffix = parts[len - 1];
  for (std::size_t i = len - 1; i-- > 0;) {
    if (parts[i] < max_part && suffix >= 1) {
      if (i == 0 && first_) {
        done_ = true;
        return *this;
      }
      ++parts[i];
      fill_smallest(parts, i + 1, suffix - 1, max_part);
      return *this;
    }
    suffix += parts[i];
  }
  done_ = true;
  return *this;
}

std::size_t CompositionRange::count() const {
  std::size_t n = 0;
  for (auto it = begin(); it != end(); ++it) ++n;
  return n;
}

std::vector<Integer> count_cm(int length, int bound) {
  check_shape(length, bound);
  std::vector<Integer> c{Integer(1)};
  for (int j = 0; j < length; ++j) {
    std::vector<Integer> next(c.size() + static_cast<std::size_t>(bound) - 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (int d = 0; d < bound; ++d) next[i + static_cast<std::size_t>(d)] += c[i];
    }
    c = std::move(next);
  }
  return c;
}

}  // namespace cpident
