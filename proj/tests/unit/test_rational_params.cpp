#include <gtest/gtest.h>

#include "loewner_lab/errors.hpp"
#include "loewner_lab/format.hpp"
#include "loewner_lab/params.hpp"
#include "loewner_lab/rational.hpp"

using namespace loewner_lab;

TEST(Rational, ParseAndReduce) {
  auto r = Rational::parse("6/4");
  ASSERT_TRUE(r);
  EXPECT_EQ(r->num(), 3);
  EXPECT_EQ(r->den(), 2);
  EXPECT_EQ(Rational::parse("-3/-6"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_FALSE(Rational::parse("0.5"));
  EXPECT_FALSE(Rational::parse("1/0"));
  EXPECT_FALSE(Rational::parse("1/"));
  EXPECT_FALSE(Rational::parse(""));
}

TEST(Rational, OverflowFallsBackToFloatingPoint) {
  const ParamValue big(Rational(INT64_MAX / 2));
  const ParamValue sum = big + big + big;
  EXPECT_FALSE(sum.is_exact());
  EXPECT_DOUBLE_EQ(sum.value(), 3.0 * static_cast<double>(INT64_MAX / 2));
}

TEST(ParamValue, ExactnessPropagates) {
  const auto s = ParamValue::parse("1/3");
  const auto t = ParamValue::parse("2");
  const auto f = ParamValue::parse("0.25");
  ASSERT_TRUE(s && t && f);
  EXPECT_TRUE(s->is_exact());
  EXPECT_FALSE(f->is_exact());
  EXPECT_TRUE((*s * ParamValue(3) - *t).is_exact());
  EXPECT_EQ(*(*s * ParamValue(3)).exact(), Rational(1));
  EXPECT_FALSE((*s + *f).is_exact());
  EXPECT_FALSE(ParamValue::parse("abc"));
  EXPECT_FALSE(ParamValue::parse("inf"));
}

TEST(ParamValue, ExactComparisonHasNoBand) {
  const ParamValue a(Rational(1, 1000000000000000LL));
  EXPECT_TRUE(compare(a, ParamValue(0)) > 0);
  // The floating-point fallback treats differences within 1e-12 as equal.
  EXPECT_TRUE(compare(ParamValue(1e-15), ParamValue(0.0)) == 0);
  EXPECT_TRUE(compare(ParamValue(1e-9), ParamValue(0.0)) > 0);
}

TEST(Format, RoundTripsAndIgnoresLocale) {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23}) {
    auto back = parse_double(format_double(v));
    ASSERT_TRUE(back);
    EXPECT_EQ(*back, v);
  }
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_FALSE(parse_double("1,5"));
}

TEST(ChainParams, Validation) {
  EXPECT_THROW(ChainParams::grand(1, 1, 2), BadParameters);
  EXPECT_THROW(ChainParams::grand(2, 1, 2), BadParameters);
  EXPECT_THROW(ChainParams::grand(0, 1, 2), BadParameters);
  EXPECT_THROW(ChainParams::grand(1, 2, 1), BadParameters);
  EXPECT_THROW(ChainParams::p_version(1, 2, ParamValue(0)), BadParameters);
  EXPECT_THROW(ChainParams::p_version(1, 2, ParamValue(-1.0)), BadParameters);
  EXPECT_NO_THROW(ChainParams::p_version(1, 2, ParamValue(0.5)));
}

TEST(ExponentTotal, Examples) {
  EXPECT_DOUBLE_EQ(exponent_total(ChainParams::grand(1, 2, 2)), 2.0);
  const auto p3 = ChainParams::grand(1, 2, 3);
  EXPECT_DOUBLE_EQ(exponent_total(p3), 7.0 / 3.0);
  EXPECT_EQ(*p3.total_exponent().exact(), Rational(7, 3));
  EXPECT_DOUBLE_EQ(exponent_total(ChainParams::p_version(1, 2, 3)), 4.0 / 3.0);
}

TEST(ChainParams, ExponentBookkeeping) {
  // B: (2s + 2(n−1)t)/n, A: s − t for GrandN.
  const auto g = ChainParams::grand(1, 2, 3);
  EXPECT_EQ(*g.b_exponent().exact(), Rational(10, 3));
  EXPECT_EQ(*g.a_exponent().exact(), Rational(-1));
  EXPECT_EQ(*g.outer_denominator().exact(), Rational(7));
  const auto p = ChainParams::p_version(1, 2, 3);
  EXPECT_EQ(*p.b_exponent().exact(), Rational(2));
  EXPECT_EQ(*p.a_exponent().exact(), Rational(-2, 3));
  EXPECT_EQ(p.describe(), "s=1 t=2 p=3");
}
