#include <bipartite/biadjacency.hpp>
#include <bipartite/core.hpp>

#include <gtest/gtest.h>

#include <random>

namespace bipartite {
namespace {

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(9, 3), 84);
  EXPECT_EQ(binomial(5, 0), 1);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(3, -1), 0);
}

TEST(Binomial, NegativeTopIsAnError) { EXPECT_THROW(binomial(-1, 0), DomainError); }

TEST(Binomial, SymmetryAndPascal) {
  for (long a = 0; a <= 64; ++a)
    for (long b = 0; b <= a; ++b) {
      EXPECT_EQ(binomial(a, b), binomial(a, a - b)) << a << " " << b;
      if (b == 0) continue;
      EXPECT_EQ(binomial(a, b), binomial(a - 1, b - 1) + binomial(a - 1, b)) << a << " " << b;
    }
}

TEST(Binomial, LargeTop) {
  // C(2^70 + 1, 2) = (2^70 + 1) 2^70 / 2
  const Integer top = pow2_integer(70) + 1;
  EXPECT_EQ(binomial(top, 2), top * pow2_integer(69));
}

TEST(Factorial, Values) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_THROW(factorial(-1), DomainError);
}

TEST(RationalToCount, IntegralAndNot) {
  EXPECT_EQ(rational_to_count(make_rational(168, 24)).value(), 7);
  EXPECT_EQ(rational_to_count(ExactRational(7)).value(), 7);
  EXPECT_THROW(rational_to_count(make_rational(3, 2)), NonIntegerResult);
  EXPECT_THROW(rational_to_count(ExactRational(-4)), DomainError);
}

TEST(RationalToCount, RoundTrips) {
  for (unsigned long k = 0; k < 500; ++k)
    EXPECT_EQ(rational_to_count(make_rational(Integer(k), 1)).value(), k);
}

TEST(ExactRational, ArithmeticIsExact) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 1000000);
  for (int t = 0; t < 2000; ++t) {
    const ExactRational x = make_rational(num(rng), den(rng));
    ExactRational y = make_rational(num(rng), den(rng));
    if (y == 0) y = 1;
    EXPECT_EQ(ExactRational((x + y) - y), x);
    EXPECT_EQ(ExactRational((x * y) / y), x);
  }
}

TEST(ExactRational, StaysInLowestTerms) {
  const ExactRational q = make_rational(45, 2) + make_rational(3, 2);
  EXPECT_EQ(q.get_num(), 24);
  EXPECT_EQ(q.get_den(), 1);
  EXPECT_EQ(to_string(make_rational(130, 4)), "65/2");
  EXPECT_THROW(make_rational(1, 0), DomainError);
}

TEST(Pow2, NegativeExponentsAreExact) {
  EXPECT_EQ(pow2(-3), make_rational(1, 8));
  EXPECT_EQ(pow2(0), 1);
  EXPECT_EQ(pow2(10), 1024);
}

TEST(Count, RejectsNegative) {
  EXPECT_THROW(Count(Integer(-1)), DomainError);
  EXPECT_LT(Count(3ul), Count(4ul));
  EXPECT_EQ(Count(Integer("123456789012345678901234567890")).str(), "123456789012345678901234567890");
}

TEST(Family, ParseAndPrint) {
  for (Family f : all_families) EXPECT_EQ(parse_family(to_string(f)), f);
  EXPECT_THROW(parse_family("z"), DomainError);
}

TEST(BoundInterval, Contains) {
  const BoundInterval closed{make_rational(-2, 1), ExactRational(17)};
  EXPECT_TRUE(closed.contains(Integer(4)));
  EXPECT_FALSE(closed.contains(Integer(18)));
  const BoundInterval open{ExactRational(3), std::nullopt};
  EXPECT_TRUE(open.contains(Integer(1000000)));
  EXPECT_FALSE(open.contains(Integer(2)));
}

TEST(Biadjacency, BitsAndCodesAgree) {
  const Biadjacency m = Biadjacency::from_bits(2, 3, "011100");
  EXPECT_TRUE(m.at(0, 1));
  EXPECT_FALSE(m.at(0, 0));
  EXPECT_EQ(m.code(), 0b011100u);
  EXPECT_EQ(Biadjacency::from_code(2, 3, 0b011100u), m);
  EXPECT_EQ(m.bit_string(), "011100");
  EXPECT_EQ(m.row_support(), 0b11u);
  EXPECT_EQ(m.col_support(), 0b111u);
  EXPECT_EQ(m.transposed().bit_string(), "011010");
  EXPECT_THROW(Biadjacency::from_bits(2, 2, "012"), DomainError);
}

TEST(Biadjacency, SupportsAndSelection) {
  const Biadjacency m = Biadjacency::from_bits(3, 3, "000101000");
  EXPECT_EQ(m.row_support(), 0b010u);
  EXPECT_EQ(m.col_support(), 0b101u);
  EXPECT_EQ(m.select(m.row_support(), m.col_support()).bit_string(), "11");
}

TEST(Biadjacency, PermutedMovesEdges) {
  const Biadjacency m = Biadjacency::from_bits(2, 2, "1000");
  const std::vector<int> swap{1, 0};
  const std::vector<int> keep{0, 1};
  EXPECT_EQ(m.permuted(swap, keep).bit_string(), "0010");
  EXPECT_EQ(m.permuted(keep, swap).bit_string(), "0100");
}

}  // namespace
}  // namespace bipartite
