#include <gtest/gtest.h>

#include "chromasum/arith.hpp"
#include "chromasum/error.hpp"
#include "support.hpp"

namespace chromasum {
namespace {

using testing::kIterations;
using testing::random_rational;

TEST(Binomial, SmallValuesAndOutOfRange) {
  EXPECT_EQ(binomial(4, 2), 6);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(binomial(5, 6), 0);
  EXPECT_EQ(binomial(0, 0), 1);
}

TEST(Binomial, FortyChooseTwentyAgreesWithPascal) {
  const auto rows = testing::pascal_rows(40);
  EXPECT_EQ(rows[40][20], BigInt("137846528820"));
  EXPECT_EQ(binomial(40, 20), rows[40][20]);
}

TEST(Binomial, PascalRecurrenceExhaustive) {
  for (std::uint64_t n = 2; n <= 64; ++n) {
    for (std::int64_t k = 1; k < static_cast<std::int64_t>(n); ++k) {
      ASSERT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k)) << n << " " << k;
    }
  }
}

TEST(BigIntText, DecimalRoundTrip) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < kIterations; ++i) {
    BigInt x = BigInt(rng()) * BigInt(rng()) * BigInt(rng());
    if (i % 2) x = -x;
    EXPECT_EQ(bigint_from_decimal(to_decimal(x)), x);
  }
  EXPECT_EQ(bigint_from_decimal("0"), 0);
  EXPECT_THROW(bigint_from_decimal("12a"), MathError);
  EXPECT_THROW(bigint_from_decimal(""), MathError);
}

TEST(RationalCanonicalForm, DenominatorPositiveAndReduced) {
  Rational x(BigInt(6), BigInt(-4));
  EXPECT_EQ(x.numerator(), -3);
  EXPECT_EQ(x.denominator(), 2);
  EXPECT_EQ(x.to_string(), "-3/2");
  EXPECT_EQ(Rational(BigInt(0), BigInt(-5)).to_string(), "0");
  EXPECT_EQ(Rational(BigInt(8), BigInt(4)).to_string(), "2");
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), MathError);
}

TEST(RationalCanonicalForm, StringRoundTrip) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < kIterations; ++i) {
    Rational x = random_rational(rng);
    EXPECT_EQ(Rational::parse(x.to_string()), x);
  }
  EXPECT_EQ(Rational::parse("5/128"), Rational(BigInt(5), BigInt(128)));
}

TEST(RationalProperties, FieldAxiomsOnRandomTriples) {
  std::mt19937_64 rng(12345);
  for (int i = 0; i < kIterations; ++i) {
    Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Rational(0));
    if (!b.is_zero()) {
      EXPECT_EQ(a / b * b, a);
    }
    EXPECT_EQ(boost::multiprecision::gcd(boost::multiprecision::abs(a.numerator()), a.denominator()), 1);
    EXPECT_GE(a.denominator(), 1);
  }
}

TEST(RationalProperties, OrderingMatchesCrossMultiplication) {
  EXPECT_LT(Rational(BigInt(1), BigInt(3)), Rational(BigInt(1), BigInt(2)));
  EXPECT_GT(Rational(0), Rational(BigInt(-1), BigInt(7)));
  EXPECT_EQ(Rational(BigInt(3), BigInt(4)).pow(3), Rational(BigInt(27), BigInt(64)));
  EXPECT_THROW(Rational(1) / Rational(0), MathError);
}

TEST(ReduceModP, WorkedValues) {
  EXPECT_EQ(rational_reduce_mod_p(Rational(BigInt(5), BigInt(128)), 13), 4u);
  EXPECT_EQ(rational_reduce_mod_p(Rational(0), 7), 0u);
  EXPECT_EQ(rational_reduce_mod_p(Rational(BigInt(1), BigInt(32)), 7), 2u);
  EXPECT_EQ(rational_reduce_mod_p(Rational(-1), 7), 6u);
}

TEST(ReduceModP, DenominatorDivisibleByPIsAnError) {
  try {
    (void)rational_reduce_mod_p(Rational(BigInt(1), BigInt(14)), 7);
    FAIL() << "expected an error";
  } catch (const MathError& e) {
    EXPECT_EQ(e.code(), Errc::DenominatorDivisibleByP);
  }
}

TEST(ReduceModP, AdditiveAndMultiplicative) {
  std::mt19937_64 rng(99);
  for (std::uint64_t p : {3u, 5u, 7u, 13u, 17u, 101u}) {
    for (int i = 0; i < kIterations; ++i) {
      Rational a = random_rational(rng, 50), b = random_rational(rng, 50);
      std::uint64_t ra, rb, rs;
      try {
        ra = rational_reduce_mod_p(a, p);
        rb = rational_reduce_mod_p(b, p);
        rs = rational_reduce_mod_p(a + b, p);
      } catch (const MathError&) {
        continue;
      }
      EXPECT_EQ(rs, (ra + rb) % p);
      EXPECT_EQ(rational_reduce_mod_p(a * b, p), (ra * rb) % p);
    }
  }
}

TEST(ModInverse, ExhaustiveSmallPrimes) {
  for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u}) {
    for (std::uint64_t a = 1; a < p; ++a) EXPECT_EQ(a * mod_inverse(a, p) % p, 1u);
  }
  EXPECT_THROW(mod_inverse(0, 7), MathError);
}

}  // namespace
}  // namespace chromasum
