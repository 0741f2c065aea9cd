#include <gtest/gtest.h>

#include <random>

#include "cpident/ball.hpp"
#include "cpident/cyclotomic.hpp"

using namespace cpident;

TEST(Ball, ExactIntegersHaveZeroRadius) {
  const RealBall a(7L, 128), b(-3L, 128);
  EXPECT_EQ((a * b).rad_double(), 0.0);
  EXPECT_TRUE((a * b).contains(Rational(-21)));
  EXPECT_TRUE((a + b).contains(Rational(4)));
}

TEST(Ball, RationalEnclosure) {
  const RealBall third(Rational(1, 3), 128);
  EXPECT_TRUE(third.contains(Rational(1, 3)));
  EXPECT_GT(third.rad_double(), 0.0);
  EXPECT_LT(third.rad_double(), 1e-38);
  const RealBall one = third * RealBall(3L, 128);
  EXPECT_TRUE(one.contains(Rational(1)));
}

TEST(Ball, DivisionByBallContainingZeroThrows) {
  const RealBall z = RealBall::from_mid_rad(Mpfr(128), RealBall(Rational(1, 1000), 128).mid(), 128);
  EXPECT_THROW(RealBall(1L, 128) / z, std::domain_error);
}

TEST(Ball, PiAndTrig) {
  const RealBall pi = RealBall::pi(256);
  EXPECT_NEAR(pi.mid_double(), 3.141592653589793, 1e-15);
  EXPECT_TRUE(pi.cos().contains(Rational(-1)));
  EXPECT_TRUE(pi.sin().contains_zero());
}

TEST(Ball, IntersectAndOverlap) {
  Mpfr lo(128), hi(128);
  mpfr_set_si(lo.get(), 1, MPFR_RNDN);
  mpfr_set_si(hi.get(), 3, MPFR_RNDN);
  const RealBall a = RealBall::from_endpoints(lo, hi, 128);
  mpfr_set_si(lo.get(), 2, MPFR_RNDN);
  mpfr_set_si(hi.get(), 5, MPFR_RNDN);
  const RealBall b = RealBall::from_endpoints(lo, hi, 128);
  ASSERT_TRUE(a.intersect(b).has_value());
  EXPECT_TRUE(a.intersect(b)->contains(Rational(5, 2)));
  EXPECT_TRUE(a.overlaps(b));
  mpfr_set_si(lo.get(), 4, MPFR_RNDN);
  const RealBall c = RealBall::from_endpoints(lo, hi, 128);
  EXPECT_FALSE(a.overlaps(c));
  EXPECT_FALSE(a.intersect(c).has_value());
}

// Property: every operation encloses the exact rational result.
TEST(Ball, OperationsEncloseExactResults) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> num(-1000, 1000), den(1, 97);
  for (int trial = 0; trial < 500; ++trial) {
    Rational x(num(rng), den(rng)), y(num(rng), den(rng));
    x.canonicalize();
    y.canonicalize();
    const RealBall bx(x, 64), by(y, 64);
    EXPECT_TRUE((bx + by).contains(x + y));
    EXPECT_TRUE((bx - by).contains(x - y));
    EXPECT_TRUE((bx * by).contains(x * y));
    if (sgn(y) != 0) {
      EXPECT_TRUE((bx / by).contains(x / y));
    }
    EXPECT_TRUE(bx.pow(3).contains(x * x * x));
  }
}

TEST(Ball, StringsAndRadiusBounds) {
  const RealBall half(Rational(1, 2), 128);
  EXPECT_EQ(half.mid_string(5), "5.0000e-01");
  EXPECT_TRUE(half.radius_at_most_pow2(-200));
  const RealBall third(Rational(1, 3), 128);
  EXPECT_TRUE(third.radius_at_most_pow2(-120));
  EXPECT_FALSE(third.radius_at_most_pow2(-140));
}

TEST(Ball, ComplexMultiplication) {
  const ComplexBall i(RealBall(0L, 128), RealBall(1L, 128));
  const ComplexBall sq = i * i;
  EXPECT_TRUE(sq.real().contains(Rational(-1)));
  EXPECT_TRUE(sq.imag().contains_zero());
  EXPECT_TRUE((i * i.conj()).real().contains(Rational(1)));
}
