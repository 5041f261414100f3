#include <algorithm>

#include "test_util.hpp"

using namespace upq;
using upq::test::alphas;
using upq::test::code_of;
using upq::test::k2;
using upq::test::small_main_types;
using upq::test::rats;

namespace {

const HiggsType kFlagship{3, 2, 0, 2};

bool has_decomposition(const Wall& w, const HiggsType& t1, const HiggsType& t2) {
  return std::any_of(w.decompositions.begin(), w.decompositions.end(),
                     [&](const Decomposition& d) { return d.t1 == t1 && d.t2 == t2; });
}

}  // namespace

TEST(AlphaRange, Examples) {
  const ParamRange r = alpha_range(kFlagship, k2());
  EXPECT_TRUE(r.finite);
  EXPECT_EQ(r.range, ExtendedInterval::closed(-4, 16));
  EXPECT_EQ(alpha_range({1, 1, 0, 0}, k2()).range, ExtendedInterval::whole());
  EXPECT_FALSE(alpha_range({1, 1, 0, 0}, k2()).finite);
  EXPECT_EQ(alpha_range({2, 1, 6, -1}, k2()).range, ExtendedInterval::closed(-22, -4));
}

TEST(Thresholds, Flagship) {
  const Thresholds th = thresholds(kFlagship, k2());
  ASSERT_EQ(th.alpha_i.size(), 2u);
  EXPECT_EQ(th.alpha_i[0], Rational(2, 7));
  EXPECT_LT(th.alpha_i[0], th.alpha_i[1]);
  EXPECT_TRUE(th.alpha_prime_j.empty());
  EXPECT_EQ(th.alpha_t, Rational(22, 7));
  EXPECT_FALSE(th.alpha_t_prime.has_value());
}

TEST(Thresholds, SigmaExchangesFamilies) {
  const Thresholds th = thresholds(kFlagship, k2());
  const Thresholds ts = thresholds(sigma_type(kFlagship), k2());
  ASSERT_EQ(ts.alpha_prime_j.size(), th.alpha_i.size());
  for (std::size_t i = 0; i < th.alpha_i.size(); ++i) EXPECT_EQ(ts.alpha_prime_j[i], -th.alpha_i[i]);
  EXPECT_EQ(ts.alpha_t_prime, -*th.alpha_t);
}

TEST(FieldProfile, Examples) {
  const FieldProfile at0 = field_profile(kFlagship, k2(), 0);
  EXPECT_EQ(at0.beta_status, FieldStatus::injective());
  EXPECT_EQ(at0.gamma_surjective, Tri::Unknown);
  EXPECT_EQ(at0.beta_surjective, Tri::No);
  EXPECT_EQ(field_profile(kFlagship, k2(), 4).gamma_surjective, Tri::Yes);
  const FieldProfile extreme = field_profile({2, 1, 6, -1}, k2(), -4);
  ASSERT_TRUE(extreme.extreme_note.has_value());
  EXPECT_NE(extreme.extreme_note->find("gamma = 0 at alpha = alpha_M"), std::string::npos);
  EXPECT_EQ(extreme.gamma_status, FieldStatus::zero());
  EXPECT_EQ(extreme.gamma_surjective, Tri::No);
}

TEST(FieldProfile, OutsideRangeThrows) {
  EXPECT_EQ(code_of([] { field_profile(kFlagship, k2(), 17); }), ErrorCode::OutOfRange);
  EXPECT_EQ(code_of([] { field_profile(kFlagship, k2(), Rational(-9, 2)); }), ErrorCode::OutOfRange);
}

TEST(FieldProfile, StatusStringsRoundTrip) {
  for (const FieldStatus& s : {FieldStatus::injective(), FieldStatus::zero(), FieldStatus::unknown(),
                               FieldStatus::kernel_at_most(2), FieldStatus::kernel_at_least(3)}) {
    EXPECT_EQ(FieldStatus::parse(s.to_string()), s);
  }
  EXPECT_EQ(code_of([] { FieldStatus::parse("surjective"); }), ErrorCode::ParseError);
}

TEST(Walls, FromWitness) {
  EXPECT_EQ(wall_from_witness(kFlagship, {3, 0, 1}), Rational(1, 6));
  EXPECT_EQ(wall_from_witness({1, 1, 0, 0}, {1, 0, -1}), Rational(2));
  EXPECT_EQ(wall_from_witness({1, 1, 0, 0}, {0, 1, 0}), Rational(0));
  // Whole object and proportional ranks give no wall.
  EXPECT_FALSE(wall_from_witness(kFlagship, {3, 2, 2}).has_value());
  EXPECT_FALSE(wall_from_witness({2, 2, 0, 0}, {1, 1, 0}).has_value());
  EXPECT_FALSE(wall_from_witness(kFlagship, {4, 0, 0}).has_value());
}

TEST(Walls, EnumerateExamples) {
  EXPECT_EQ(alphas(enumerate_walls({1, 1, 0, 0}, k2(), ExtendedInterval::closed(-3, 3))),
            rats({-2, 0, 2}));
  EXPECT_EQ(alphas(enumerate_walls(kFlagship, k2(), ExtendedInterval::closed(0, 1))),
            rats({Rational(1, 6), 1}));
  EXPECT_EQ(alphas(enumerate_walls({2, 1, 0, 1}, k2(), ExtendedInterval::closed(0, 2))), rats({1}));
}

TEST(Walls, WitnessesOfFlagshipWall) {
  const auto ws = numerical_walls(kFlagship, ExtendedInterval::closed(0, 1));
  ASSERT_FALSE(ws.empty());
  const std::vector<WitnessTriple> expected{{0, 2, 1}, {3, 0, 1}};
  EXPECT_EQ(ws[0].witnesses, expected);
}

TEST(Walls, UnboundedWindowRejected) {
  EXPECT_EQ(code_of([] { enumerate_walls(kFlagship, k2(), ExtendedInterval::at_least(0)); }),
            ErrorCode::WindowUnbounded);
  EXPECT_TRUE(enumerate_walls(kFlagship, k2(), ExtendedInterval::empty()).empty());
}

TEST(Walls, Refinement) {
  const auto ws = enumerate_walls(kFlagship, k2(), ExtendedInterval::closed(0, 1));
  ASSERT_EQ(ws.size(), 2u);
  EXPECT_EQ(ws[0].status, WallStatus::Numerical);
  EXPECT_TRUE(ws[0].decompositions.empty());
  EXPECT_EQ(ws[1].status, WallStatus::Decomposable);
  EXPECT_EQ(ws[1].decompositions.size(), 5u);
  ASSERT_TRUE(has_decomposition(ws[1], {1, 1, 0, 1}, {2, 1, 0, 1}));

  const auto toy = enumerate_walls({1, 1, 0, 0}, k2(), ExtendedInterval::closed(-3, 3));
  ASSERT_EQ(toy.size(), 3u);
  EXPECT_EQ(toy[0].status, WallStatus::Numerical);
  EXPECT_EQ(toy[1].status, WallStatus::Decomposable);
  EXPECT_TRUE(has_decomposition(toy[1], {1, 0, 0, 0}, {0, 1, 0, 0}));
  EXPECT_EQ(toy[2].status, WallStatus::Numerical);
}

TEST(Decompositions, Examples) {
  EXPECT_TRUE(enumerate_decompositions(kFlagship, k2(), Rational(1, 6)).empty());
  const auto at1 = enumerate_decompositions(kFlagship, k2(), 1);
  const auto it = std::find_if(at1.begin(), at1.end(), [](const Decomposition& d) {
    return d.t1 == HiggsType{1, 1, 0, 1};
  });
  ASSERT_NE(it, at1.end());
  EXPECT_EQ(it->t2, (HiggsType{2, 1, 0, 1}));
  EXPECT_EQ(it->chi_21, -5);
  EXPECT_EQ(it->chi_21, chi({1, 1, 0, 1}, {2, 1, 0, 1}, k2()));
  EXPECT_EQ(it->chi_12, chi({2, 1, 0, 1}, {1, 1, 0, 1}, k2()));
  for (const Decomposition& d : at1) {
    EXPECT_EQ(d.t1 + d.t2, kFlagship);
    EXPECT_TRUE(canonical_orientation(d.t1, d.t2));
    EXPECT_EQ(mu_alpha(d.t1, 1), mu_alpha(kFlagship, 1));
  }
  const auto toy = enumerate_decompositions({1, 1, 0, 0}, k2(), 0);
  ASSERT_EQ(toy.size(), 1u);
  EXPECT_EQ(toy[0].t1, (HiggsType{1, 0, 0, 0}));
  EXPECT_EQ(toy[0].t2, (HiggsType{0, 1, 0, 0}));
}

TEST(Decompositions, NonpositiveTwistRejected) {
  EXPECT_EQ(code_of([] { enumerate_decompositions(kFlagship, CurveData::twisted(1, 0), 1); }),
            ErrorCode::DegLNonpositive);
}

TEST(Chambers, Examples) {
  const auto cs = chambers(kFlagship, k2(), ExtendedInterval::closed(0, 1));
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_EQ(cs[0].interval, ExtendedInterval::open(0, Rational(1, 6)));
  EXPECT_EQ(cs[0].sample_alpha, Rational(1, 12));
  EXPECT_EQ(cs[1].interval, ExtendedInterval::open(Rational(1, 6), 1));
  EXPECT_EQ(cs[1].sample_alpha, Rational(7, 12));
  ASSERT_TRUE(cs[0].profile.has_value());
  EXPECT_EQ(cs[0].profile->beta_status, FieldStatus::injective());

  const auto toy = chambers({1, 1, 0, 0}, k2(), ExtendedInterval::closed(-3, 3));
  ASSERT_EQ(toy.size(), 4u);
  EXPECT_EQ(toy[0].interval, ExtendedInterval::open(-3, -2));
  EXPECT_EQ(toy[1].interval, ExtendedInterval::open(-2, 0));
  EXPECT_EQ(toy[2].interval, ExtendedInterval::open(0, 2));
  EXPECT_EQ(toy[3].interval, ExtendedInterval::open(2, 3));

  const auto small = chambers({2, 1, 0, 1}, k2(), ExtendedInterval::closed(0, 2));
  ASSERT_EQ(small.size(), 2u);
  EXPECT_EQ(small[0].interval, ExtendedInterval::open(0, 1));
  EXPECT_EQ(small[1].interval, ExtendedInterval::open(1, 2));
}

TEST(Chambers, ProfileAbsentOutsideRange) {
  const auto cs = chambers({2, 1, 6, -1}, k2(), ExtendedInterval::closed(-4, 0));
  ASSERT_FALSE(cs.empty());
  EXPECT_FALSE(cs.back().profile.has_value());
}

// alpha-stability of E is (-alpha)-stability of sigma(E) and of the dual, so the
// whole wall structure must mirror.
TEST(WallsProperty, SigmaAndDualCovariance) {
  const auto window = ExtendedInterval::closed(Rational(-5, 2), 4);
  for (const CurveData& c : {k2(), CurveData::twisted(2, 3)}) {
    for (const HiggsType& t : small_main_types()) {
      const auto walls = enumerate_walls(t, c, window);
      for (const HiggsType& m : {sigma_type(t), dual_type(t)}) {
        auto mirrored = enumerate_walls(m, c, window.negated());
        std::reverse(mirrored.begin(), mirrored.end());
        ASSERT_EQ(walls.size(), mirrored.size()) << t.to_string();
        for (std::size_t i = 0; i < walls.size(); ++i) {
          EXPECT_EQ(walls[i].alpha_c, -mirrored[i].alpha_c) << t.to_string();
          EXPECT_EQ(walls[i].status, mirrored[i].status) << t.to_string() << " at " << walls[i].alpha_c;
          EXPECT_EQ(walls[i].decompositions.size(), mirrored[i].decompositions.size());
        }
      }
    }
  }
}

TEST(ChambersProperty, SamplesAreInteriorAndNonCritical) {
  for (const HiggsType& t : small_main_types()) {
    const auto window = ExtendedInterval::closed(-3, 3);
    const auto cs = chambers(t, k2(), window);
    ASSERT_FALSE(cs.empty());
    EXPECT_EQ(*cs.front().interval.lower(), Rational(-3));
    EXPECT_EQ(*cs.back().interval.upper(), Rational(3));
    for (std::size_t i = 0; i < cs.size(); ++i) {
      EXPECT_TRUE(cs[i].interval.contains(cs[i].sample_alpha));
      EXPECT_FALSE(oracle::is_critical(t, cs[i].sample_alpha).critical);
      if (i > 0) EXPECT_EQ(*cs[i - 1].interval.upper(), *cs[i].interval.lower());
    }
  }
}
