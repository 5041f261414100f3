#include <random>

#include "test_util.hpp"

using upq::ErrorCode;
using upq::ExtendedInterval;
using upq::HiggsType;
using upq::Rational;

using upq::test::code_of;

TEST(Rational, NormalizesSignAndTerms) {
  EXPECT_EQ(Rational(6, -4).to_string(), "-3/2");
  EXPECT_EQ(Rational(0, -7).to_string(), "0");
  EXPECT_EQ(Rational(10, 5).to_string(), "2");
  EXPECT_EQ(Rational::parse("-12/5"), Rational(-12, 5));
  EXPECT_EQ(Rational::parse("4/-6"), Rational(-2, 3));
  EXPECT_EQ(Rational::parse("+7"), Rational(7));
}

TEST(Rational, ParseRejectsGarbage) {
  for (const char* bad : {"", "1/", "/2", "1/2/3", "abc", "1.5", "1/0", "-"}) {
    EXPECT_EQ(code_of([&] { Rational::parse(bad); }), ErrorCode::ParseError) << bad;
  }
}

TEST(Rational, FloorCeilOnNegatives) {
  EXPECT_EQ(Rational(-7, 2).floor(), Rational(-4));
  EXPECT_EQ(Rational(-7, 2).ceil(), Rational(-3));
  EXPECT_EQ(Rational(7, 2).floor(), Rational(3));
  EXPECT_EQ(Rational(-4).floor(), Rational(-4));
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_EQ(code_of([] { Rational(1) / Rational(0); }), ErrorCode::Overflow);
  EXPECT_EQ(code_of([] { Rational(1, 3).to_int64(); }), ErrorCode::Overflow);
}

TEST(Rational, PromotesAndDemotesAroundInt64) {
  const Rational big(INT64_MAX);
  const Rational sum = big + big;
  EXPECT_FALSE(sum.is_compact());
  EXPECT_EQ(sum.to_string(), "18446744073709551614");
  const Rational back = sum - big;
  EXPECT_TRUE(back.is_compact());
  EXPECT_EQ(back, big);
  const Rational tiny(1, INT64_MAX);
  const Rational prod = tiny * tiny;
  EXPECT_FALSE(prod.is_compact());
  EXPECT_EQ(prod * big * big, Rational(1));
  EXPECT_EQ(code_of([&] { sum.to_int64(); }), ErrorCode::Overflow);
  EXPECT_LT(big, sum);
  EXPECT_GT(-big, -sum);
}

TEST(RationalProperty, AddSubtractRoundTrip) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-1'000'000'000'000LL, 1'000'000'000'000LL);
  std::uniform_int_distribution<std::int64_t> den(1, 1'000'000'000'000LL);
  for (int i = 0; i < 2000; ++i) {
    const Rational x(num(rng), den(rng));
    const Rational y(num(rng), den(rng));
    EXPECT_EQ((x + y) - y, x);
    if (y.sign() != 0) EXPECT_EQ((x * y) / y, x);
    // Normalization is idempotent: reparsing the printed form changes nothing.
    EXPECT_EQ(Rational::parse(x.to_string()), x);
    EXPECT_EQ(Rational(x.numerator(), x.denominator()), x);
  }
}

TEST(Interval, ContainsRespectsEndpoints) {
  const auto w = ExtendedInterval::closed_open(0, Rational(2, 7));
  EXPECT_TRUE(upq::interval_contains(w, Rational(1, 6)));
  EXPECT_FALSE(upq::interval_contains(w, Rational(2, 7)));
  EXPECT_TRUE(upq::interval_contains(w, 0));
  EXPECT_TRUE(upq::interval_contains(ExtendedInterval::whole(), -1000));
  EXPECT_FALSE(upq::interval_contains(ExtendedInterval::empty(), 0));
}

TEST(Interval, EmptinessIsCanonical) {
  EXPECT_TRUE(ExtendedInterval::closed_open(0, -1).is_empty());
  EXPECT_TRUE(ExtendedInterval::open(3, 3).is_empty());
  EXPECT_FALSE(ExtendedInterval::closed(3, 3).is_empty());
  EXPECT_EQ(ExtendedInterval::closed_open(0, -1), ExtendedInterval::open(5, 2));
  EXPECT_EQ(ExtendedInterval::empty().to_string(), "{}");
  EXPECT_EQ(ExtendedInterval::whole().to_string(), "(-inf, +inf)");
}

TEST(Interval, NegationSwapsEndpoints) {
  const auto i = ExtendedInterval::closed_open(-1, 4);
  EXPECT_EQ(i.negated(), ExtendedInterval::open_closed(-4, 1));
  EXPECT_EQ(ExtendedInterval::at_least(2).negated(), ExtendedInterval::at_most(-2));
}

TEST(Interval, MergeFusesTouchingPieces) {
  const auto merged = upq::merge_intervals({ExtendedInterval::closed_open(0, 1),
                                            ExtendedInterval::open(-5, 3),
                                            ExtendedInterval::closed(7, 8),
                                            ExtendedInterval::open_closed(8, 9),
                                            ExtendedInterval::empty()});
  ASSERT_EQ(merged.size(), 2u);
  EXPECT_EQ(merged[0], ExtendedInterval::open(-5, 3));
  EXPECT_EQ(merged[1], ExtendedInterval::closed(7, 9));
  // Two open pieces meeting at a point they both exclude stay apart.
  EXPECT_EQ(upq::merge_intervals({ExtendedInterval::open(0, 1), ExtendedInterval::open(1, 2)}).size(),
            2u);
  const auto rays = upq::merge_intervals({ExtendedInterval::at_most(0), ExtendedInterval::at_most(3),
                                          ExtendedInterval::at_least(2)});
  ASSERT_EQ(rays.size(), 1u);
  EXPECT_EQ(rays[0], ExtendedInterval::whole());
}

TEST(IntervalProperty, IntersectionCommutativeAndAssociative) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> v(-6, 6), kind(0, 5);
  auto random_interval = [&] {
    const int a = v(rng), b = v(rng);
    const Rational lo(std::min(a, b), 2), hi(std::max(a, b), 2);
    switch (kind(rng)) {
      case 0: return ExtendedInterval::closed(lo, hi);
      case 1: return ExtendedInterval::open(lo, hi);
      case 2: return ExtendedInterval::closed_open(lo, hi);
      case 3: return ExtendedInterval::at_least(lo);
      case 4: return ExtendedInterval::at_most(hi);
      default: return ExtendedInterval::open_closed(lo, hi);
    }
  };
  for (int i = 0; i < 3000; ++i) {
    const auto x = random_interval(), y = random_interval(), z = random_interval();
    EXPECT_EQ(x.intersect(y), y.intersect(x));
    EXPECT_EQ(x.intersect(y).intersect(z), x.intersect(y.intersect(z)));
    for (int k = -7; k <= 7; ++k) {
      const Rational pt(k, 2);
      EXPECT_EQ(x.intersect(y).contains(pt), x.contains(pt) && y.contains(pt));
    }
  }
}

TEST(ValidateType, SpecExamples) {
  EXPECT_EQ(upq::validate_type(3, 2, 0, 2, true), (HiggsType{3, 2, 0, 2}));
  EXPECT_EQ(code_of([] { upq::validate_type(0, 2, -1, 2, false); }), ErrorCode::DegreeError);
  EXPECT_EQ(code_of([] { upq::validate_type(0, 0, 0, 0, false); }), ErrorCode::RankError);
  EXPECT_EQ(code_of([] { upq::validate_type(-1, 2, 0, 0, false); }), ErrorCode::RankError);
  EXPECT_EQ(code_of([] { upq::validate_type(2, 0, 1, 0, true); }), ErrorCode::RankError);
}

TEST(ValidateTypeProperty, ExhaustiveSmallBox) {
  for (int p = 0; p <= 3; ++p) {
    for (int q = 0; q <= 3; ++q) {
      for (int a = -2; a <= 2; ++a) {
        for (int b = -2; b <= 2; ++b) {
          for (bool main : {false, true}) {
            const bool ok = (p || q) && !(p == 0 && a) && !(q == 0 && b) && (!main || (p && q));
            bool accepted = true;
            try {
              upq::validate_type(p, q, a, b, main);
            } catch (const upq::Error&) {
              accepted = false;
            }
            EXPECT_EQ(accepted, ok) << p << q << a << b << main;
            EXPECT_EQ(upq::is_valid_type(p, q, a, b, main), ok);
          }
        }
      }
    }
  }
}

TEST(CurveData, CanonicalTwist) {
  const auto c = upq::CurveData::canonical_twist(2);
  EXPECT_EQ(c.deg_l, 2);
  EXPECT_TRUE(c.canonical);
  EXPECT_TRUE(c.is_valid());
  EXPECT_FALSE((upq::CurveData{2, 3, true}).is_valid());
  EXPECT_EQ(code_of([] { upq::CurveData::twisted(-1, 2); }), ErrorCode::CurveError);
}

TEST(Decomposition, CanonicalOrientation) {
  EXPECT_TRUE(upq::canonical_orientation({1, 1, 0, 1}, {2, 1, 0, 1}));
  EXPECT_FALSE(upq::canonical_orientation({2, 1, 0, 1}, {1, 1, 0, 1}));
  // Equal rank: larger p first.
  EXPECT_TRUE(upq::canonical_orientation({1, 0, 0, 0}, {0, 1, 0, 0}));
  EXPECT_TRUE(upq::same_sign_ranks({2, 1, 0, 0}, {1, 1, 0, 0}));
  EXPECT_FALSE(upq::same_sign_ranks({0, 2, 0, 2}, {3, 0, 0, 0}));
}
