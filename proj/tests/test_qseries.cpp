#include <gtest/gtest.h>

#include <random>

#include "cpident/qseries.hpp"
#include "oracle.hpp"

using namespace cpident;

TEST(QSeries, Brackets) {
  const auto& f = CycField::of(3);
  EXPECT_TRUE(bracket(f, 3).is_zero());
  EXPECT_EQ(bracket(f, 2), CycNum(f, 1) + CycNum::omega_power(f, 1));
  EXPECT_EQ(bracket(f, 4), CycNum(f, 1));
  EXPECT_TRUE(bracket(f, 0).is_zero());
}

TEST(QSeries, BinomialExamples) {
  EXPECT_TRUE(q_binomial(CycField::of(2), 2, 1).is_zero());
  EXPECT_TRUE(q_binomial(CycField::of(3), 4, 2).is_zero());
  for (int n = 2; n <= 6; ++n) {
    for (int k = 0; k <= 2 * n - 2; ++k) EXPECT_EQ(q_binomial(CycField::of(n), k, 0), CycNum(CycField::of(n), 1));
  }
  EXPECT_THROW(q_binomial(CycField::of(3), 5, 1), std::invalid_argument);
  EXPECT_THROW(q_binomial(CycField::of(3), 2, 3), std::invalid_argument);
}

TEST(QSeries, BinomialMatchesNumericProductFormula) {
  for (int n = 2; n <= 6; ++n) {
    const auto& f = CycField::of(n);
    for (int top = 0; top <= 2 * n - 2; ++top) {
      for (int r = 0; r < n; ++r) {
        const auto got = oracle::embed(q_binomial(f, top, r));
        EXPECT_NEAR(static_cast<double>(std::abs(got - oracle::binom(n, top, r))), 0.0, 1e-10) << n << top << r;
      }
    }
  }
}

TEST(QSeries, GaussianPolynomialsAndTables) {
  EXPECT_EQ(gaussian_polynomial(4, 2), (std::vector<Integer>{1, 1, 2, 1, 1}));
  EXPECT_EQ(gaussian_polynomial(3, 1), (std::vector<Integer>{1, 1, 1}));
  EXPECT_EQ(gaussian_polynomial(2, 3), std::vector<Integer>{});
  for (int n = 2; n <= 6; ++n) {
    const auto& t = QBinomialTable::of(n);
    for (int top = 0; top <= t.max_n(); ++top) {
      for (int r = 0; r < n; ++r) {
        EXPECT_EQ(t.binom(top, r), q_binomial(t.field(), top, r));
        EXPECT_EQ(CycNum::from_cyclic(t.field(), t.binom_cyclic(top, r)), t.binom(top, r));
        // ordinary binomial from the coefficient sum
        std::int64_t sum = 0;
        for (auto c : t.binom_cyclic(top, r)) {
          EXPECT_GE(c, 0);
          sum += c;
        }
        Integer want;
        if (r <= top) mpz_bin_uiui(want.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(r));
        EXPECT_EQ(Integer(static_cast<long>(sum)), r <= top ? want : Integer(0));
      }
    }
    for (int k = 0; k < n; ++k) {
      EXPECT_EQ(t.inverse_qfactorial(k) * pochhammer(CycNum::omega_power(t.field(), 1), k), CycNum(t.field(), 1));
    }
  }
}

TEST(QSeries, Pochhammer) {
  const auto& f = CycField::of(3);
  const CycNum x = CycNum::zeta_power(f, 1) + CycNum(f, 2);
  EXPECT_EQ(pochhammer(x, 0), CycNum(f, 1));
  EXPECT_EQ(pochhammer(x, 1), CycNum(f, 1) - x);
  EXPECT_EQ(pochhammer(CycNum::omega_power(f, 1), 2), CycNum(f, 3));
  for (int n = 2; n <= 6; ++n) {
    const auto& g = CycField::of(n);
    EXPECT_EQ(pochhammer(CycNum::omega_power(g, 1), n - 1), CycNum(g, n)) << n;
  }
  EXPECT_THROW(pochhammer(x, -1), std::invalid_argument);
}

TEST(QSeries, Id1AndId1aExhaustive) {
  for (int n = 2; n <= 6; ++n) {
    const auto& f = CycField::of(n);
    for (int a = 0; a < n; ++a) {
      for (int r = 0; r < n; ++r) EXPECT_TRUE(check_id1(f, a, r)) << n << " " << a << " " << r;
    }
    for (int s = 0; s < n; ++s) {
      EXPECT_TRUE(check_id1a(f, s)) << n << " " << s;
      EXPECT_TRUE(check_id1a(f, s, CycNum::zeta_power(f, 3) + CycNum(f, Rational(1, 2))));
    }
  }
  EXPECT_THROW(check_id1(CycField::of(3), 3, 0), std::invalid_argument);
  EXPECT_THROW(check_id1a(CycField::of(3), 3), std::invalid_argument);
}

TEST(QSeries, JPolynomials) {
  const auto& f = CycField::of(3);
  EXPECT_EQ(eval_J(f, {0, 2, 1, 1}), CycPoly::constant(CycNum(f, 1)));
  EXPECT_EQ(eval_Jbar(f, {2, 0, 1, 1}), CycPoly::constant(CycNum(f, 1)));
  // lambda = N-1 makes (omega^(1+lambda); omega)_n vanish for n >= 1
  EXPECT_EQ(eval_J(f, {2, 2, 0, 0}).degree(), 0);
  EXPECT_EQ(eval_J(f, {2, 1, 0, 0}).degree(), 1);
  EXPECT_EQ(eval_J(f, {2, 0, 0, 0}).degree(), 2);
  // likewise mu = N-1 in the barred polynomial
  EXPECT_EQ(eval_Jbar(f, {2, 1, 0, 1}).degree(), 0);
  EXPECT_EQ(eval_Jbar(f, {1, 1, 0, 1}).degree(), 1);
}

TEST(QSeries, SiteParams) {
  const std::vector<int> mu{1, 2, 0}, lambda{2, 0, 1};
  const auto s = site_params(mu, lambda);
  ASSERT_EQ(s.size(), 3U);
  EXPECT_EQ(s[0].a, 0);
  EXPECT_EQ(s[1].a, 1);
  EXPECT_EQ(s[2].a, 3);
  EXPECT_EQ(s[0].bbar, 1);
  EXPECT_EQ(s[1].bbar, 1);
  EXPECT_EQ(s[2].bbar, 0);
}

TEST(QSeries, ProductIdentityExamples) {
  const auto& f2 = CycField::of(2);
  const std::vector<int> mu{1, 1}, lambda{0, 0};
  const auto rep = check_product_identity(f2, mu, lambda);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.ell, 1);
  EXPECT_EQ(rep.n, 0);
  // prod J = 1 + t^2 here
  const auto sites = site_params(mu, lambda);
  const CycPoly prod = eval_J(f2, sites[0]) * eval_J(f2, sites[1]);
  const CycNum one(f2, 1);
  EXPECT_EQ(prod, CycPoly::constant(one) + CycPoly::monomial(one, 2));
  for (int n = 2; n <= 4; ++n) {
    for (int q = 0; q < n; ++q) {
      const std::vector<int> single{q};
      EXPECT_TRUE(check_product_identity(CycField::of(n), single, single).ok());
    }
  }
}

TEST(QSeries, ProductIdentityRejectsBadInput) {
  const auto& f = CycField::of(3);
  EXPECT_THROW(check_product_identity(f, std::vector<int>{1}, std::vector<int>{2}), std::invalid_argument);
  EXPECT_THROW(check_product_identity(f, std::vector<int>{0, 1}, std::vector<int>{2, 2}), std::invalid_argument);
  EXPECT_THROW(check_product_identity(f, std::vector<int>{3}, std::vector<int>{0}), std::invalid_argument);
  EXPECT_THROW(check_product_identity(f, std::vector<int>{}, std::vector<int>{}), std::invalid_argument);
  EXPECT_THROW(check_product_identity(f, std::vector<int>{1, 1}, std::vector<int>{2}), std::invalid_argument);
}

// Property: random admissible pairs satisfy the product identity.
TEST(QSeries, ProductIdentityRandomPairs) {
  std::mt19937 rng(2024);
  for (int n = 2; n <= 4; ++n) {
    const auto& f = CycField::of(n);
    std::uniform_int_distribution<int> part(0, n - 1), len(1, 6);
    int done = 0;
    while (done < 60) {
      const int l = len(rng);
      std::vector<int> mu(static_cast<std::size_t>(l)), lambda(mu.size());
      for (auto& x : mu) x = part(rng);
      for (auto& x : lambda) x = part(rng);
      int sm = 0, sl = 0;
      for (int x : mu) sm += x;
      for (int x : lambda) sl += x;
      if ((sm - sl) % n != 0) continue;
      if (sm < sl) std::swap(mu, lambda);
      ASSERT_TRUE(check_product_identity(f, mu, lambda).ok());
      ++done;
    }
  }
}
