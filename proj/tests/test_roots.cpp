#include <gtest/gtest.h>

#include <random>

#include "cpident/drinfeld.hpp"
#include "cpident/roots.hpp"

using namespace cpident;

namespace {

DrinfeldData custom(std::vector<long> coeffs) {
  DrinfeldData d;
  d.n = 2;
  d.length = 1;
  d.q = 0;
  d.degree = static_cast<int>(coeffs.size()) - 1;
  for (long c : coeffs) d.lambda.emplace_back(c);
  return d;
}

}  // namespace

TEST(Roots, Certificates) {
  const auto a = certify_roots(drinfeld(2, 2, 0));
  EXPECT_EQ(a.real_count, 1);
  EXPECT_TRUE(a.distinct);
  const auto b = certify_roots(drinfeld(3, 3, 0));
  EXPECT_EQ(b.real_count, 2);
  EXPECT_EQ(b.discriminant, 45);
  const auto c = certify_roots(drinfeld(2, 4, 0));
  EXPECT_EQ(c.discriminant, 32);
  EXPECT_EQ(c.real_count, 2);
  // z^2 + 1: no real roots; (z+1)^2: repeated
  EXPECT_EQ(certify_roots(custom({1, 0, 1})).real_count, 0);
  const auto rep = certify_roots(custom({1, 2, 1}));
  EXPECT_FALSE(rep.distinct);
  EXPECT_EQ(rep.resultant, 0);
  EXPECT_EQ(rep.real_count, 1);
}

TEST(Roots, ResultantAndSturm) {
  // Res(x - 2, x - 5) = -3 with the leading-coefficient convention det(Sylvester)
  const std::vector<Integer> a{-2, 1}, b{-5, 1};
  EXPECT_EQ(abs(resultant(a, b)), 3);
  const std::vector<Integer> p{-2, 0, 1};  // x^2 - 2
  EXPECT_EQ(sturm_count(p, Rational(0), Rational(2)), 1);
  EXPECT_EQ(sturm_count(p, Rational(-2), Rational(2)), 2);
  EXPECT_EQ(sturm_count(p, Rational(3, 2), Rational(2)), 0);
}

TEST(Roots, RationalRootsAreExact) {
  const auto rs = isolate_and_refine(drinfeld(3, 3, 1), 128);
  ASSERT_EQ(rs.roots.size(), 1U);
  ASSERT_TRUE(rs.exact[0].has_value());
  EXPECT_EQ(*rs.exact[0], Rational(-1, 2));
  EXPECT_TRUE(rs.B[0].contains(Rational(-18)));
  const auto rs2 = isolate_and_refine(drinfeld(2, 2, 0), 128);
  EXPECT_EQ(*rs2.exact[0], Rational(-1));
  EXPECT_TRUE(rs2.B[0].contains(Rational(-1)));
  const auto rs3 = isolate_and_refine(drinfeld(3, 3, 2), 128);
  EXPECT_EQ(*rs3.exact[0], Rational(-2));
  EXPECT_TRUE(rs3.B[0].contains(Rational(-18)));
}

TEST(Roots, QuadraticAgainstClosedForm) {
  // (-7 -+ 3 sqrt 5) / 2
  const auto rs = isolate_and_refine(drinfeld(3, 3, 0), 128);
  ASSERT_EQ(rs.roots.size(), 2U);
  EXPECT_TRUE(rs.converged);
  EXPECT_TRUE(rs.all_real);
  Mpfr s5(256);
  mpfr_sqrt_ui(s5.get(), 5, MPFR_RNDN);
  for (int sign : {-1, 1}) {
    Mpfr want(256);
    mpfr_mul_si(want.get(), s5.get(), 3 * sign, MPFR_RNDN);
    mpfr_sub_ui(want.get(), want.get(), 7, MPFR_RNDN);
    mpfr_div_ui(want.get(), want.get(), 2, MPFR_RNDN);
    const RealBall& z = rs.roots[sign < 0 ? 0 : 1];
    Mpfr d(256);
    mpfr_sub(d.get(), z.mid().get(), want.get(), MPFR_RNDN);
    EXPECT_LT(std::fabs(mpfr_get_d(d.get(), MPFR_RNDN)), 1e-38);
    EXPECT_TRUE(z.radius_at_most_pow2(-128));
  }
  EXPECT_NEAR(rs.roots[0].mid_double(), -6.854101966249685, 1e-12);
  EXPECT_NEAR(rs.roots[1].mid_double(), -0.1458980337503155, 1e-12);
  // B_1 B_2 = z1 z2 (z1 - z2)^4 = 45^2
  EXPECT_TRUE((rs.B[0] * rs.B[1]).contains(Rational(2025)));
}

TEST(Roots, RefinementOnTheAcceptanceGrid) {
  for (auto [n, len] : std::vector<std::pair<int, int>>{{2, 2}, {2, 4}, {2, 6}, {3, 3}, {3, 6}, {4, 4}, {2, 8}, {3, 5}}) {
    for (int q = 0; q < n; ++q) {
      const auto d = drinfeld(n, len, q);
      const auto rs = isolate_and_refine(d, 128);
      EXPECT_TRUE(rs.converged);
      EXPECT_TRUE(rs.all_real) << n << " " << len << " " << q;
      EXPECT_EQ(static_cast<int>(rs.roots.size()), d.degree);
      for (std::size_t k = 0; k < rs.roots.size(); ++k) {
        EXPECT_FALSE(rs.roots[k].contains_zero());
        EXPECT_TRUE(rs.roots[k].is_negative());
        if (k > 0) {
          EXPECT_FALSE(rs.roots[k - 1].overlaps(rs.roots[k]));
        }
      }
      // re-expanding Lambda_m prod (z - z_k) recovers every coefficient
      const int prec = rs.roots.empty() ? 128 : rs.roots.front().precision();
      std::vector<RealBall> poly{RealBall(Rational(d.lambda.back()), prec)};
      for (const auto& z : rs.roots) {
        std::vector<RealBall> next(poly.size() + 1, RealBall(prec));
        for (std::size_t i = 0; i < poly.size(); ++i) {
          next[i + 1] += poly[i];
          next[i] -= poly[i] * z;
        }
        poly = std::move(next);
      }
      for (std::size_t i = 0; i < poly.size(); ++i) EXPECT_TRUE(poly[i].contains(Rational(d.lambda[i])));
    }
  }
}

TEST(Roots, MultipleAndComplexRoots) {
  // (z + 1)^2 (z + 3)
  const auto rs = isolate_and_refine(custom({3, 7, 5, 1}), 128);
  ASSERT_EQ(rs.roots.size(), 2U);
  EXPECT_FALSE(rs.distinct);
  EXPECT_EQ(rs.multiplicity[0], 1);
  EXPECT_EQ(rs.multiplicity[1], 2);
  EXPECT_TRUE(rs.all_real);
  EXPECT_TRUE(rs.B[1].contains(Rational(0)));
  // (z^2 + 1)(z + 2)
  const auto cx = isolate_and_refine(custom({2, 1, 2, 1}), 128);
  EXPECT_EQ(cx.roots.size(), 1U);
  EXPECT_FALSE(cx.all_real);
  // irrational double root: (z^2 - 2)^2 (z+1)
  const auto irr = isolate_and_refine(custom({4, 4, -4, -4, 1, 1}), 128);
  ASSERT_EQ(irr.roots.size(), 3U);
  EXPECT_EQ(irr.multiplicity[0], 2);
  EXPECT_EQ(irr.multiplicity[1], 1);
  EXPECT_EQ(irr.multiplicity[2], 2);
  EXPECT_TRUE(irr.converged);
}

// Property: products of random linear factors come back exactly.
TEST(Roots, RandomRationalRoots) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Rational> want;
    std::vector<Integer> poly{1};
    for (int i = 0; i < 3; ++i) {
      Rational r(num(rng), den(rng));
      r.canonicalize();
      if (sgn(r) == 0 || std::find(want.begin(), want.end(), r) != want.end()) continue;
      want.push_back(r);
      // multiply by (den x - num)
      std::vector<Integer> next(poly.size() + 1, 0);
      for (std::size_t j = 0; j < poly.size(); ++j) {
        next[j + 1] += poly[j] * r.get_den();
        next[j] -= poly[j] * r.get_num();
      }
      poly = next;
    }
    std::sort(want.begin(), want.end());
    DrinfeldData d;
    d.degree = static_cast<int>(poly.size()) - 1;
    d.lambda = poly;
    const auto rs = isolate_and_refine(d, 64);
    ASSERT_EQ(rs.roots.size(), want.size());
    for (std::size_t k = 0; k < want.size(); ++k) {
      ASSERT_TRUE(rs.exact[k].has_value());
      EXPECT_EQ(*rs.exact[k], want[k]);
    }
  }
}

TEST(Roots, PrecisionGuard) {
  EXPECT_THROW(isolate_and_refine(drinfeld(3, 3, 0), 16), std::invalid_argument);
  const auto hi = isolate_and_refine(drinfeld(3, 6, 0), 512);
  EXPECT_TRUE(hi.converged);
  for (const auto& z : hi.roots) EXPECT_TRUE(z.radius_at_most_pow2(-512));
}
