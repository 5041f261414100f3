#include <random>

#include "test_util.hpp"

using namespace upq;
using upq::test::k2;

TEST(Invariants, Slopes) {
  EXPECT_EQ(mu({1, 1, 0, 0}), Rational(0));
  EXPECT_EQ(mu({3, 2, 0, 2}), Rational(2, 5));
  EXPECT_EQ(mu({2, 1, 0, -1}), Rational(-1, 3));
  EXPECT_EQ(mu_alpha({3, 2, 0, 2}, Rational(1, 6)), Rational(1, 2));
  EXPECT_EQ(mu_alpha({1, 1, 0, 0}, 0), Rational(0));
  EXPECT_EQ(mu_alpha({1, 1, 0, 0}, 2), Rational(1));
}

TEST(Invariants, Toledo) {
  EXPECT_EQ(toledo({3, 2, 0, 2}), Rational(-12, 5));
  EXPECT_EQ(toledo({2, 2, 3, 3}), Rational(0));
  EXPECT_EQ(toledo({2, 1, 0, -1}), Rational(4, 3));
}

TEST(Invariants, Chi) {
  EXPECT_EQ(chi({3, 2, 0, 2}, {3, 2, 0, 2}, k2()), -25);
  EXPECT_EQ(chi({1, 0, 0, 0}, {2, 1, 0, 1}, k2()), -4);
  EXPECT_EQ(chi({1, 1, 0, 0}, {1, 1, 0, 0}, CurveData::twisted(1, 0)), 0);
  EXPECT_EQ(chi({1, 1, 0, 1}, {2, 1, 0, 1}, k2()), -5);
}

TEST(Invariants, ExpectedDimension) {
  EXPECT_EQ(expected_dimension({3, 2, 0, 2}, k2()), 26);
  EXPECT_EQ(expected_dimension({2, 1, 0, 1}, k2()), 10);
  EXPECT_EQ(expected_dimension({1, 1, 0, 0}, k2()), 5);
}

TEST(Invariants, MilnorWoodInterval) {
  const auto at = [](const Rational& alpha) { return mw_interval(2, 1, alpha, k2()); };
  EXPECT_EQ(at(0).tau_min, Rational(-2));
  EXPECT_EQ(at(0).tau_max, Rational(2));
  EXPECT_EQ(at(-3).tau_min, Rational(-1));
  EXPECT_EQ(at(-3).tau_max, Rational(4));
  EXPECT_EQ(at(-3).regime_upper, UpperRegime::AtOrBelowMinusDegL);
  EXPECT_EQ(at(2).tau_min, Rational(-8, 3));
  EXPECT_EQ(at(2).tau_max, Rational(4, 3));
  EXPECT_EQ(at(2).regime_lower, LowerRegime::AtOrAboveDegL);
  // Both formulas agree on the regime boundaries.
  EXPECT_EQ(at(-2).tau_max, Rational(8, 3));
}

TEST(Invariants, MilnorWoodFeasibility) {
  EXPECT_TRUE(mw_feasible({3, 2, 0, 2}, 0, k2()));
  EXPECT_FALSE(mw_feasible({2, 1, 6, -1}, 0, k2()));
  EXPECT_TRUE(mw_feasible({1, 1, 0, 0}, 0, k2()));
}

TEST(Invariants, DualAndSigma) {
  EXPECT_EQ(dual_type({3, 2, 0, 2}), (HiggsType{3, 2, 0, -2}));
  EXPECT_EQ(dual_type({2, 1, 0, 1}), (HiggsType{2, 1, 0, -1}));
  EXPECT_EQ(sigma_type({3, 2, 0, 2}), (HiggsType{2, 3, 2, 0}));
  EXPECT_EQ(sigma_type({2, 1, 0, 1}), (HiggsType{1, 2, 1, 0}));
}

TEST(Invariants, Genericity) {
  const auto g1 = genericity({2, 1, 0, 1});
  EXPECT_TRUE(g1.coprime_pq);
  EXPECT_FALSE(g1.alpha_independent_possible);
  const auto g2 = genericity({2, 2, 1, 0});
  EXPECT_TRUE(g2.coprime_rank_sum_exists_m);
  EXPECT_FALSE(g2.alpha_independent_possible);
  const auto g3 = genericity({2, 2, 0, 0});
  EXPECT_FALSE(g3.coprime_rank_sum_exists_m);
  EXPECT_FALSE(g3.coprime_pq);
  EXPECT_TRUE(g3.alpha_independent_possible);
}

namespace {

HiggsType random_type(std::mt19937& rng, bool allow_zero_rank) {
  std::uniform_int_distribution<int> r(allow_zero_rank ? 0 : 1, 4);
  std::uniform_int_distribution<int> d(-6, 6);
  for (;;) {
    const int p = r(rng), q = r(rng);
    const std::int64_t a = p ? d(rng) : 0, b = q ? d(rng) : 0;
    if (is_valid_type(p, q, a, b)) return {p, q, a, b};
  }
}

CurveData random_curve(std::mt19937& rng) {
  std::uniform_int_distribution<int> g(0, 4), extra(0, 3);
  const int genus = g(rng);
  return CurveData::twisted(genus, std::max(1, 2 * genus - 2 + extra(rng)));
}

}  // namespace

TEST(InvariantsProperty, ChiMatchesHomComplex) {
  std::mt19937 rng(3);
  for (int i = 0; i < 5000; ++i) {
    const HiggsType s = random_type(rng, true), t = random_type(rng, true);
    const CurveData c = random_curve(rng);
    EXPECT_EQ(chi(s, t, c), oracle::chi_hom(s, t, c.genus, c.deg_l)) << s.to_string() << t.to_string();
  }
}

TEST(InvariantsProperty, ChiBilinear) {
  std::mt19937 rng(5);
  for (int i = 0; i < 3000; ++i) {
    const HiggsType s1 = random_type(rng, true), s2 = random_type(rng, true),
                    t = random_type(rng, true);
    const CurveData c = random_curve(rng);
    EXPECT_EQ(chi(s1 + s2, t, c), chi(s1, t, c) + chi(s2, t, c));
    EXPECT_EQ(chi(t, s1 + s2, c), chi(t, s1, c) + chi(t, s2, c));
  }
}

TEST(InvariantsProperty, DimensionClosedForm) {
  std::mt19937 rng(8);
  for (int i = 0; i < 3000; ++i) {
    const HiggsType t = random_type(rng, false);
    const CurveData c = random_curve(rng);
    EXPECT_EQ(expected_dimension(t, c), expected_dimension_closed_form(t, c)) << t.to_string();
  }
}

TEST(InvariantsProperty, SymmetriesOfToledoAndMilnorWood) {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 7);
  for (int i = 0; i < 3000; ++i) {
    const HiggsType t = random_type(rng, false);
    const CurveData c = random_curve(rng);
    EXPECT_EQ(sigma_type(sigma_type(t)), t);
    EXPECT_EQ(dual_type(dual_type(t)), t);
    EXPECT_EQ(toledo(sigma_type(t)), -toledo(t));
    EXPECT_EQ(toledo(dual_type(t)), -toledo(t));
    const Rational alpha(num(rng), den(rng));
    const MwInterval m = mw_interval(t.p, t.q, alpha, c);
    const MwInterval mirrored = mw_interval(t.q, t.p, -alpha, c);
    EXPECT_EQ(m.tau_min, -mirrored.tau_max);
    EXPECT_EQ(m.tau_max, -mirrored.tau_min);
    EXPECT_EQ(mw_feasible(t, alpha, c), mw_feasible(sigma_type(t), -alpha, c));
    EXPECT_EQ(mw_feasible(t, alpha, c), mw_feasible(dual_type(t), -alpha, c));
    EXPECT_EQ(genericity(t), genericity(dual_type(t)));
  }
}
