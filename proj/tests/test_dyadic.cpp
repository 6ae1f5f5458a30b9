#include <gtest/gtest.h>

#include "graphweight/dyadic.hpp"

namespace graphweight {
namespace {

TEST(Dyadic, Normalises) {
  const DyadicRational a(12, 5);
  EXPECT_EQ(a.numerator(), 3);
  EXPECT_EQ(a.exponent(), 3U);
  const DyadicRational z(0, 9);
  EXPECT_EQ(z.exponent(), 0U);
  EXPECT_TRUE(z.is_zero());
  // Integers keep k = 0 even when even.
  const DyadicRational eight(8, 0);
  EXPECT_EQ(eight.numerator(), 8);
  EXPECT_EQ(DyadicRational(-24, 4), DyadicRational(-3, 1));
}

TEST(Dyadic, Arithmetic) {
  const DyadicRational three_eighths(3, 3);
  EXPECT_EQ(three_eighths + DyadicRational(1, 3), DyadicRational(1, 1));
  EXPECT_EQ(three_eighths - three_eighths, DyadicRational());
  EXPECT_EQ(DyadicRational(-3, 6) * three_eighths, DyadicRational(-9, 9));
  EXPECT_EQ(-three_eighths, DyadicRational(-3, 3));
  EXPECT_TRUE(DyadicRational(-3, 6) < three_eighths);
  EXPECT_FALSE(three_eighths < three_eighths);
  EXPECT_EQ(DyadicRational(1, 200) * DyadicRational(BigInt{1} << 200, 0), DyadicRational(1));
}

TEST(Dyadic, Strings) {
  EXPECT_EQ(DyadicRational(15, 9).to_exact_string(), "15/2^9");
  EXPECT_EQ(DyadicRational(-3, 6).to_exact_string(), "-3/2^6");
  EXPECT_EQ(DyadicRational().to_exact_string(), "0/2^0");
  EXPECT_EQ(DyadicRational(15, 9).to_fraction_string(), "15/512");
  EXPECT_EQ(DyadicRational(7, 0).to_fraction_string(), "7");
  EXPECT_EQ(DyadicRational::parse_exact("15/2^9"), DyadicRational(15, 9));
  EXPECT_EQ(DyadicRational::parse_exact("-30/2^10"), DyadicRational(-15, 9));
  for (const char* bad : {"15/512", "/2^3", "x/2^3", "3/2^", "3/2^-1", "-/2^1"})
    EXPECT_THROW(DyadicRational::parse_exact(bad), std::invalid_argument) << bad;
}

TEST(Dyadic, ToDouble) {
  EXPECT_EQ(DyadicRational(3, 3).to_double(), 0.375);
  EXPECT_EQ(DyadicRational(-3, 6).to_double(), -0.046875);
  EXPECT_EQ(DyadicRational(0, 0).to_double(), 0.0);
  EXPECT_DOUBLE_EQ(DyadicRational(BigInt{1} << 300, 299).to_double(), 2.0);
  EXPECT_DOUBLE_EQ(DyadicRational((BigInt{1} << 100) + 1, 100).to_double(), 1.0);
}

}  // namespace
}  // namespace graphweight
