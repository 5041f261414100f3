#include <algorithm>

#include "test_util.hpp"

using namespace upq;
using upq::test::code_of;
using upq::test::k2;
using upq::test::rats;

namespace {

const HiggsType kFlagship{3, 2, 0, 2};

}  // namespace

TEST(Oracle, IsCritical) {
  const auto hit = oracle::is_critical(kFlagship, Rational(1, 6));
  EXPECT_TRUE(hit.critical);
  const std::vector<WitnessTriple> expected{{0, 2, 1}, {3, 0, 1}};
  EXPECT_EQ(hit.witnesses, expected);
  EXPECT_FALSE(oracle::is_critical(kFlagship, 0).critical);
  EXPECT_FALSE(oracle::is_critical({1, 1, 0, 0}, 1).critical);
}

TEST(Oracle, WallsByScan) {
  EXPECT_EQ(oracle::walls_by_scan({1, 1, 0, 0}, ExtendedInterval::closed(-3, 3)), rats({-2, 0, 2}));
  EXPECT_EQ(oracle::walls_by_scan(kFlagship, ExtendedInterval::closed(0, 1)),
            rats({Rational(1, 6), 1}));
  EXPECT_TRUE(oracle::walls_by_scan({2, 1, 0, 1}, ExtendedInterval::closed_open(0, 1)).empty());
  EXPECT_EQ(code_of([] { oracle::walls_by_scan(kFlagship, ExtendedInterval::whole()); }),
            ErrorCode::WindowUnbounded);
}

TEST(Oracle, BruteForceDecompositions) {
  EXPECT_TRUE(oracle::decompositions_bruteforce(kFlagship, k2(), Rational(1, 6), 10).empty());
  EXPECT_EQ(oracle::decompositions_bruteforce(kFlagship, k2(), 1, 10),
            enumerate_decompositions(kFlagship, k2(), 1));
  const auto toy = oracle::decompositions_bruteforce({1, 1, 0, 0}, k2(), 0, 5);
  ASSERT_EQ(toy.size(), 1u);
  EXPECT_EQ(toy[0].t1, (HiggsType{1, 0, 0, 0}));
  EXPECT_EQ(toy[0].t2, (HiggsType{0, 1, 0, 0}));
}

TEST(Oracle, RadiusBelowBoundRejected) {
  EXPECT_GE(oracle::degree_bound(kFlagship, k2(), 1), 0);
  EXPECT_EQ(code_of([] { oracle::decompositions_bruteforce(kFlagship, k2(), 1, -1); }),
            ErrorCode::RadiusTooSmall);
}

TEST(Oracle, IdentitiesHold) {
  const auto toy = verify_identities({{{1, 1, 0, 0}, k2()}});
  EXPECT_TRUE(toy.passed);
  const auto flag = verify_identities({{kFlagship, k2()}});
  EXPECT_TRUE(flag.passed);
  EXPECT_GE(flag.checked, 6u);
  EXPECT_TRUE(flag.mismatches.empty());
}

TEST(Oracle, CorruptedChiIsCaught) {
  oracle::IdentityTargets broken = engine_targets();
  broken.chi = [](const HiggsType& s, const HiggsType& t, const CurveData& c) {
    return chi(s, t, c) + (s == t ? 1 : 0);
  };
  const auto r = oracle::verify_identities({{kFlagship, k2()}}, broken);
  EXPECT_FALSE(r.passed);
  ASSERT_FALSE(r.mismatches.empty());
  const bool dimension_flagged =
      std::any_of(r.mismatches.begin(), r.mismatches.end(), [](const oracle::Mismatch& m) {
        return m.description.find("dimension identity") != std::string::npos;
      });
  EXPECT_TRUE(dimension_flagged);
}

TEST(Oracle, CorruptedWallsAreCaught) {
  oracle::IdentityTargets broken = engine_targets();
  broken.walls = [](const HiggsType& t, const ExtendedInterval& w) {
    auto out = upq::test::alphas(numerical_walls(t, w));
    if (!out.empty()) out.pop_back();
    return out;
  };
  EXPECT_FALSE(oracle::verify_identities({{kFlagship, k2()}}, broken).passed);
}

TEST(Oracle, CheckTypeFlagsBadStatus) {
  const auto window = ExtendedInterval::closed(0, 1);
  auto walls = enumerate_walls(kFlagship, k2(), window);
  ASSERT_EQ(walls.size(), 2u);
  EXPECT_TRUE(check_type(kFlagship, k2(), window, walls).passed);
  walls[0].status = WallStatus::Decomposable;
  EXPECT_FALSE(check_type(kFlagship, k2(), window, walls).passed);
  walls = enumerate_walls(kFlagship, k2(), window);
  walls.pop_back();
  EXPECT_FALSE(check_type(kFlagship, k2(), window, walls).passed);
}

// Reduced version of the full acceptance sweep: p+q <= 6, |a|,|b| <= 4.
TEST(OracleProperty, EngineMatchesOracleOnSmallSweep) {
  std::size_t types = 0, checks = 0;
  for (const CurveData& c : {k2(), CurveData::twisted(2, 3)}) {
    for (const HiggsType& t : upq::test::small_main_types(5, 4)) {
      if (t.rank() > 6) continue;
      const auto r = check_type(t, c, sweep_window(t, c));
      ++types;
      checks += r.checked;
      EXPECT_TRUE(r.passed) << t.to_string() << " dL=" << c.deg_l << ": "
                            << (r.mismatches.empty() ? "" : r.mismatches.front().description);
    }
  }
  EXPECT_GT(types, 1000u);
  EXPECT_GT(checks, types);
}

TEST(OracleProperty, IdentitiesOnSmallSweep) {
  const auto sweep = type_sweep(3, 3, {k2(), CurveData::twisted(2, 3), CurveData::twisted(3, 5)});
  const auto r = verify_identities(sweep);
  EXPECT_TRUE(r.passed) << (r.mismatches.empty() ? "" : r.mismatches.front().description);
}
