#include <gtest/gtest.h>

#include "cpident/drinfeld.hpp"
#include "cpident/polyform.hpp"
#include "oracle.hpp"

using namespace cpident;

namespace {

CycPoly ints(int n, std::vector<long> v, Indeterminate var = Indeterminate::t) {
  std::vector<Integer> c(v.begin(), v.end());
  return CycPoly::from_integers(CycField::of(n), c, var);
}

}  // namespace

TEST(Drinfeld, Examples) {
  const auto a = drinfeld(3, 3, 0);
  EXPECT_EQ(a.lambda, (std::vector<Integer>{1, 7, 1}));
  EXPECT_EQ(a.degree, 2);
  const auto b = drinfeld(3, 3, 1);
  EXPECT_EQ(b.lambda, (std::vector<Integer>{3, 6}));
  EXPECT_EQ(b.degree, 1);
  const auto c = drinfeld(2, 2, 0);
  EXPECT_EQ(c.lambda, (std::vector<Integer>{1, 1}));
  EXPECT_THROW(drinfeld(3, 3, 3), std::invalid_argument);
  EXPECT_THROW(drinfeld(3, 3, -1), std::invalid_argument);
  EXPECT_EQ(b.coeff(5), 0);
}

TEST(Drinfeld, ValueAtOneAndTotals) {
  for (int n = 2; n <= 5; ++n) {
    for (int len = 1; len <= 7; ++len) {
      Integer all = 0;
      for (int q = 0; q < n; ++q) {
        const auto d = drinfeld(n, len, q);
        Integer p1;
        mpz_ui_pow_ui(p1.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(len - 1));
        EXPECT_EQ(d.value_at(1), p1) << n << " " << len << " " << q;
        EXPECT_GT(d.lambda.front(), 0);
        EXPECT_EQ(d.degree, ((n - 1) * len - q) / n);
        for (const auto& x : d.lambda) all += x;
      }
      Integer nl;
      mpz_ui_pow_ui(nl.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(len));
      EXPECT_EQ(all, nl);
    }
  }
}

TEST(Polyform, BruteExamples) {
  const auto& f2 = CycField::of(2);
  for (int m = 0; m <= 4; ++m) {
    const auto c = count_cm(4, 2);
    EXPECT_EQ(K_brute(Composition::zeros(4, 2), m, Variant::plain), CycNum(f2, Rational(c[static_cast<std::size_t>(m)])));
    EXPECT_EQ(K_brute(Composition::zeros(4, 2), m, Variant::bar), CycNum(f2, Rational(c[static_cast<std::size_t>(m)])));
  }
  EXPECT_EQ(K_brute(Composition({1, 1, 0, 0}, 2), 1, Variant::plain), CycNum(f2, 2));
  EXPECT_EQ(K_brute(Composition({1, 1}, 2), 0, Variant::plain), CycNum(f2, 1));
  EXPECT_TRUE(K_brute(Composition({1, 1}, 2), 9, Variant::plain).is_zero());
  EXPECT_TRUE(K_brute(Composition({1, 1}, 2), -1, Variant::plain).is_zero());
}

TEST(Polyform, GeneratingFunctionExamples) {
  EXPECT_EQ(gen_g(Composition({1, 1}, 2)), ints(2, {1}));
  EXPECT_EQ(gen_g(Composition({1, 1, 0, 0}, 2)), ints(2, {1, 2, 1}));
  EXPECT_EQ(gen_g(Composition::zeros(3, 3)), ints(3, {1, 3, 6, 7, 6, 3, 1}));
  EXPECT_THROW(gen_g(Composition({1, 0}, 2)), std::invalid_argument);
  EXPECT_THROW(K_via_g(Composition({2, 0, 0}, 3)), std::invalid_argument);

  const KTable t = K_via_g(Composition({1, 1, 0, 0}, 2));
  ASSERT_EQ(t.K.size(), 3U);
  EXPECT_EQ(t.k, 1);
  EXPECT_EQ(K_via_g(Composition({1, 1}, 2)).K.size(), 1U);
  const KTable z = K_via_g(Composition::zeros(2, 2));
  EXPECT_EQ(z.K, (std::vector<CycNum>{CycNum(CycField::of(2), 1), CycNum(CycField::of(2), 2), CycNum(CycField::of(2), 1)}));
}

TEST(Polyform, GPolynomials) {
  EXPECT_EQ(G_poly(Composition({1, 1}, 2), 0, Variant::plain), ints(2, {1}, Indeterminate::z));
  EXPECT_EQ(G_poly(Composition({1, 1, 0, 0}, 2), 0, Variant::plain), ints(2, {1, 1}, Indeterminate::z));
  for (int n = 2; n <= 4; ++n) {
    for (int len = 1; len <= 5; ++len) {
      for (int q = 0; q < n; ++q) {
        const auto d = drinfeld(n, len, q);
        EXPECT_EQ(G_poly(Composition::zeros(len, n), q, Variant::plain), CycPoly::from_integers(CycField::of(n), d.lambda, Indeterminate::z));
      }
    }
  }
  EXPECT_THROW(G_poly(Composition({1, 1}, 2), 2, Variant::plain), std::invalid_argument);
}

// Both exact routes against each other, and against a floating-point
// evaluation of the defining sum.
TEST(Polyform, BruteMatchesGeneratingFunctionAndNumericOracle) {
  for (int n = 2; n <= 4; ++n) {
    for (int len = 1; len <= 5; ++len) {
      for (int k = 1; k <= 2; ++k) {
        for (const auto& c : CompositionRange(len, n, k * n)) {
          const KTable t = K_via_g(c);
          EXPECT_EQ(t.K.size(), static_cast<std::size_t>((n - 1) * len - k * n + 1));
          EXPECT_FALSE(t.K.back().is_zero());
          const auto plain = K_brute_all(c, Variant::plain);
          const auto bar = K_brute_all(c, Variant::bar);
          const std::vector<int> parts(c.parts().begin(), c.parts().end());
          for (int m = 0; m <= (n - 1) * len; ++m) {
            const auto u = static_cast<std::size_t>(m);
            ASSERT_EQ(plain[u], t.at(m, Variant::plain)) << n << " " << len << " m=" << m;
            ASSERT_EQ(bar[u], t.at(m, Variant::bar));
            ASSERT_EQ(bar[u], plain[u].conjugate());
            if (len <= 4) {
              const auto num = oracle::K(parts, n, m, false);
              EXPECT_NEAR(static_cast<double>(std::abs(num - oracle::embed(plain[u]))), 0.0, 1e-8);
              const auto numb = oracle::K(parts, n, m, true);
              EXPECT_NEAR(static_cast<double>(std::abs(numb - oracle::embed(bar[u]))), 0.0, 1e-8);
            }
          }
          EXPECT_EQ(gen_gbar_closed(c), gen_g(c).conjugate());
        }
      }
    }
  }
}

TEST(Polyform, InterpolationBasis) {
  const auto rs1 = isolate_and_refine(drinfeld(3, 3, 1), 128);
  const auto f1 = interp_f(rs1, 0);
  ASSERT_EQ(f1.size(), 1U);
  EXPECT_TRUE(f1[0].contains(Rational(1)));

  const auto rs = isolate_and_refine(drinfeld(3, 3, 0), 128);
  ASSERT_EQ(rs.roots.size(), 2U);
  for (std::size_t k = 0; k < 2; ++k) {
    const auto f = interp_f(rs, k);
    ASSERT_EQ(f.size(), 2U);
    for (std::size_t j = 0; j < 2; ++j) {
      const RealBall v = eval_real(f, rs.roots[j]);
      EXPECT_TRUE(v.contains(Rational(j == k ? 1 : 0))) << k << " " << j;
    }
  }
  // f_1(z) = (z - z2) / (z1 - z2) with z1 + z2 = -7, z1 z2 = 1
  const auto f = interp_f(rs, 0);
  const RealBall slope = f[1];
  const RealBall diff = rs.roots[0] - rs.roots[1];
  EXPECT_TRUE((slope * diff).contains(Rational(1)));
  EXPECT_THROW(interp_f(rs, 2), std::invalid_argument);
  RootSet bad = rs;
  bad.distinct = false;
  EXPECT_THROW(interp_f(bad, 0), std::invalid_argument);
}
