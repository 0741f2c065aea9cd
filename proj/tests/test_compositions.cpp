#include <gtest/gtest.h>

#include "cpident/compositions.hpp"
#include "oracle.hpp"

using namespace cpident;

TEST(Compositions, Validation) {
  EXPECT_THROW(Composition({0, 3}, 3), std::invalid_argument);
  EXPECT_THROW(Composition({-1}, 3), std::invalid_argument);
  const Composition c({2, 1, 0}, 3);
  EXPECT_EQ(c.total(), 3);
  EXPECT_EQ(c.length(), 3);
  EXPECT_EQ(Composition::zeros(4, 2).total(), 0);
  EXPECT_THROW(CompositionRange(0, 2, 0), std::invalid_argument);
  EXPECT_THROW(CompositionRange(2, 1, 0), std::invalid_argument);
}

TEST(Compositions, EnumerationExamples) {
  std::vector<std::vector<int>> got;
  for (const auto& c : CompositionRange(2, 2, 2)) got.emplace_back(c.parts().begin(), c.parts().end());
  EXPECT_EQ(got, (std::vector<std::vector<int>>{{1, 1}}));
  EXPECT_EQ(CompositionRange(3, 3, 3).count(), 7U);
  EXPECT_EQ(CompositionRange(2, 2, 3).count(), 0U);
  EXPECT_EQ(CompositionRange(2, 2, -1).count(), 0U);
}

TEST(Compositions, EnumerationMatchesBruteForce) {
  for (int n = 2; n <= 4; ++n) {
    for (int len = 1; len <= 6; ++len) {
      for (int m = 0; m <= (n - 1) * len; ++m) {
        std::vector<std::vector<int>> want;
        oracle::for_each_bounded(n, len, m, [&](const std::vector<int>& v) { want.push_back(v); });
        std::vector<std::vector<int>> got;
        for (const auto& c : CompositionRange(len, n, m)) got.emplace_back(c.parts().begin(), c.parts().end());
        ASSERT_EQ(got, want) << n << " " << len << " " << m;
        // slices by first part concatenate to the whole range
        std::vector<std::vector<int>> sliced;
        for (int first = 0; first < n; ++first) {
          for (const auto& c : CompositionRange(len, n, m, first)) sliced.emplace_back(c.parts().begin(), c.parts().end());
        }
        ASSERT_EQ(sliced, want);
      }
    }
  }
}

TEST(Compositions, PrefixData) {
  const auto p = prefix_data(Composition({1, 1, 0, 0}, 2));
  EXPECT_EQ(p.before, (std::vector<long>{0, 1, 2, 2, 2}));
  EXPECT_EQ(p.after, (std::vector<long>{1, 0, 0, 0}));
  const auto q = prefix_data(Composition({2, 1}, 3));
  EXPECT_EQ(q.before, (std::vector<long>{0, 2, 3}));
  EXPECT_EQ(q.after, (std::vector<long>{1, 0}));
  const auto z = prefix_data(Composition::zeros(3, 4));
  EXPECT_EQ(z.after, (std::vector<long>{0, 0, 0}));
}

TEST(Compositions, CountsMatchBruteForce) {
  EXPECT_EQ(count_cm(2, 2), (std::vector<Integer>{1, 2, 1}));
  EXPECT_EQ(count_cm(3, 3), (std::vector<Integer>{1, 3, 6, 7, 6, 3, 1}));
  EXPECT_EQ(count_cm(1, 5), (std::vector<Integer>{1, 1, 1, 1, 1}));
  for (int n = 2; n <= 5; ++n) {
    for (int len = 1; len <= 6; ++len) {
      const auto want = oracle::counts(len, n);
      const auto got = count_cm(len, n);
      ASSERT_EQ(got.size(), want.size());
      Integer total = 0;
      for (std::size_t i = 0; i < want.size(); ++i) {
        EXPECT_EQ(got[i], Integer(static_cast<long>(want[i])));
        total += got[i];
      }
      Integer nl;
      mpz_ui_pow_ui(nl.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(len));
      EXPECT_EQ(total, nl);
    }
  }
}
