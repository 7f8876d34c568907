#include <gtest/gtest.h>

#include "linarr/error.hpp"
#include "linarr/rational.hpp"

namespace linarr {
namespace {

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1) / 2);
  EXPECT_EQ(to_fraction_string(parse_rational("4/2")), "2/1");
  EXPECT_EQ(to_fraction_string(parse_rational("-0/5")), "0/1");
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", " 1", "1/", "/2", "a", "1.5", "1/-2", "--1"}) {
    EXPECT_THROW(parse_rational(bad), Error) << bad;
  }
}

TEST(Rational, FractionalPartIsInUnitInterval) {
  EXPECT_EQ(frac(Rational(-1) / 3), Rational(2) / 3);
  EXPECT_EQ(frac(Rational(7) / 3), Rational(1) / 3);
  EXPECT_EQ(frac(Rational(-2)), Rational(0));
}

TEST(Rational, PrimalityAndDefaultCheckPrime) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(1073741789));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
}

}  // namespace
}  // namespace linarr
