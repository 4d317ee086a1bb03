#include "cauchy/exactnum.hpp"

#include "../support/generators.hpp"

#include <gtest/gtest.h>

using namespace cauchy;

TEST(Sign, OfRational) {
  EXPECT_EQ(sign_of(Rational(Integer(-3), Integer(4))), Sign::negative());
  EXPECT_EQ(sign_of(Rational(0)), Sign::zero());
  EXPECT_EQ(sign_of(Rational(Integer(7), Integer(2))), Sign::positive());
}

TEST(HalfInteger, Construction) {
  EXPECT_EQ(half_int(1).str(), "1/2");
  EXPECT_FALSE(half_int(1).is_integer());
  EXPECT_EQ(half_int(-2).str(), "-1");
  EXPECT_TRUE(half_int(-2).is_integer());
  EXPECT_EQ(half_int(-2).to_integer(), -1);
  EXPECT_TRUE(half_int(0).is_zero());
  EXPECT_THROW(half_int(3).to_integer(), Error);
}

TEST(Rational, ParsesExactForms) {
  EXPECT_EQ(Rational::parse("1.25"), Rational(Integer(5), Integer(4)));
  EXPECT_EQ(Rational::parse("-3/6"), Rational(Integer(-1), Integer(2)));
  EXPECT_EQ(Rational::parse("42"), Rational(42));
  EXPECT_EQ(Rational::parse(".5"), Rational(Integer(1), Integer(2)));
  EXPECT_EQ(Rational::parse("-0.000"), Rational(0));
  EXPECT_EQ(Rational::parse("+7"), Rational(7));
}

TEST(Rational, LeadingZerosAreDecimal) {
  EXPECT_EQ(Rational::parse("0.25"), Rational(Integer(1), Integer(4)));
  EXPECT_EQ(Rational::parse("010"), Rational(10));
  EXPECT_EQ(Rational::parse("07/010"), Rational(Integer(7), Integer(10)));
  EXPECT_EQ(Rational::parse("1.08"), Rational(Integer(27), Integer(25)));
}

TEST(Rational, RejectsInexactForms) {
  for (const char* bad : {"1e-3", "", "1/0", "abc", "1.2.3", "--1", "1/-2", "."}) {
    EXPECT_THROW(Rational::parse(bad), Error) << bad;
  }
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(1) / Rational(0), Error);
  EXPECT_THROW(Rational(Integer(1), Integer(0)), Error);
}

TEST(Gaussian, Arithmetic) {
  const GaussianRational i = GaussianRational::i();
  EXPECT_EQ(i * i, GaussianRational(-1));
  const GaussianRational z{Rational(3), Rational(4)};
  EXPECT_EQ(z * z.conj(), GaussianRational(25));
  EXPECT_EQ(z / z, GaussianRational(1));
  EXPECT_EQ(z.norm1(), Rational(7));
  EXPECT_EQ((GaussianRational{Rational(1), Rational(-1)}).str(), "1-i");
  EXPECT_EQ((GaussianRational{Rational(0), Rational(2)}).str(), "2*i");
}

TEST(Properties, SignIsMultiplicative) {
  fixtures::Gen g(1);
  for (int k = 0; k < 500; ++k) {
    const Rational x = g.rational(50, 20), y = g.rational(50, 20);
    EXPECT_EQ(sign_of(x * y), sign_of(x) * sign_of(y));
    EXPECT_EQ(sign_of(x).is_zero(), x.is_zero());
  }
}

TEST(Properties, HalfIntegerArithmeticIsExact) {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 500; ++k) {
    const auto a = half_int(Integer(static_cast<long>(rng() >> 1)) * (k % 2 ? 1 : -1));
    const auto b = half_int(Integer(static_cast<long>(rng() >> 1)));
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ(-(-a), a);
  }
}

TEST(Properties, RationalsStayNormalized) {
  fixtures::Gen g(3);
  for (int chain = 0; chain < 50; ++chain) {
    Rational acc = g.rational(100, 100);
    for (int step = 0; step < 100; ++step) {
      const Rational x = g.rational(100, 100);
      switch (g.integer(0, 3)) {
        case 0: acc += x; break;
        case 1: acc -= x; break;
        case 2: acc *= x; break;
        default:
          if (!x.is_zero()) acc /= x;
      }
      const Integer num = acc.numerator(), den = acc.denominator();
      Integer gg;
      mpz_gcd(gg.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      ASSERT_GT(den, 0);
      ASSERT_EQ(gg, 1) << acc;
      if (acc.is_zero()) {
        ASSERT_EQ(den, 1);
      }
      // Keep magnitudes bounded so the chain stays cheap.
      if (abs(acc) > Rational(1000000)) acc = Rational(1);
    }
  }
}
