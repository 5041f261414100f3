#pragma once

#include <vector>

#include "upq/invariants.hpp"
#include "upq/oracle.hpp"
#include "upq/parameter_space.hpp"
#include "upq/theorem_engine.hpp"

namespace upq {

/// The engine wired into the oracle's identity suite.
inline oracle::IdentityTargets engine_targets() {
  oracle::IdentityTargets e;
  e.chi = [](const HiggsType& s, const HiggsType& t, const CurveData& c) { return chi(s, t, c); };
  e.expected_dimension = [](const HiggsType& t, const CurveData& c) {
    return expected_dimension(t, c);
  };
  e.toledo = [](const HiggsType& t) { return toledo(t); };
  e.dual = [](const HiggsType& t) { return dual_type(t); };
  e.sigma = [](const HiggsType& t) { return sigma_type(t); };
  e.walls = [](const HiggsType& t, const ExtendedInterval& w) {
    std::vector<Rational> out;
    for (const Wall& wall : numerical_walls(t, w)) out.push_back(wall.alpha_c);
    return out;
  };
  e.alpha_range = [](const HiggsType& t, const CurveData& c) { return alpha_range(t, c).range; };
  e.mw_interval = [](int p, int q, const Rational& alpha, const CurveData& c) {
    const MwInterval mw = mw_interval(p, q, alpha, c);
    return std::pair{mw.tau_min, mw.tau_max};
  };
  e.first_thresholds = [](const HiggsType& t, const CurveData& c) {
    const Thresholds th = thresholds(t, c);
    std::pair<std::optional<Rational>, std::optional<Rational>> out;
    if (!th.alpha_i.empty()) out.first = th.alpha_i.front();
    if (!th.alpha_prime_j.empty()) out.second = th.alpha_prime_j.front();
    return out;
  };
  return e;
}

inline oracle::OracleReport verify_identities(const std::vector<oracle::SweepItem>& sweep) {
  return oracle::verify_identities(sweep, engine_targets());
}

/// Every valid main type with p, q <= rmax and |a|, |b| <= dmax, for each curve.
inline std::vector<oracle::SweepItem> type_sweep(int rmax, std::int64_t dmax,
                                                 const std::vector<CurveData>& curves) {
  std::vector<oracle::SweepItem> out;
  for (const CurveData& c : curves) {
    for (int p = 1; p <= rmax; ++p) {
      for (int q = 1; q <= rmax; ++q) {
        for (std::int64_t a = -dmax; a <= dmax; ++a) {
          for (std::int64_t b = -dmax; b <= dmax; ++b) out.push_back({{p, q, a, b}, c});
        }
      }
    }
  }
  return out;
}

/// p, q <= 4, |a|, |b| <= 5, g in {2, 3}, deg L in {2g-2, 2g-1, 2g}.
inline std::vector<oracle::SweepItem> standard_sweep() {
  std::vector<CurveData> curves;
  for (std::int64_t g : {2, 3}) {
    curves.push_back(CurveData::canonical_twist(g));
    curves.push_back(CurveData::twisted(g, 2 * g - 1));
    curves.push_back(CurveData::twisted(g, 2 * g));
  }
  return type_sweep(4, 5, curves);
}

/// alpha_range when finite, [-5, 5] otherwise.
inline ExtendedInterval sweep_window(const HiggsType& t, const CurveData& c) {
  const ParamRange r = alpha_range(t, c);
  return r.finite ? r.range : ExtendedInterval::closed(-5, 5);
}

/// Engine/oracle equivalence for one type and window: numerical walls against
/// the scan, refined decompositions against brute force, and chamber samples
/// against the pointwise criticality test.
inline oracle::OracleReport check_type(const HiggsType& t, const CurveData& c,
                                       const ExtendedInterval& window,
                                       const std::vector<Wall>& walls) {
  oracle::OracleReport r;
  const std::string tag = t.to_string() + " g=" + std::to_string(c.genus) +
                          " dL=" + std::to_string(c.deg_l) + ": ";
  std::vector<Rational> engine_alphas;
  for (const Wall& w : walls) engine_alphas.push_back(w.alpha_c);
  r.expect(tag + "walls vs scan on " + window.to_string(), oracle::walls_by_scan(t, window),
           engine_alphas);
  for (const Wall& w : walls) {
    const std::string at = tag + "alpha_c=" + w.alpha_c.to_string() + ": ";
    const auto crit = oracle::is_critical(t, w.alpha_c);
    r.expect(at + "witnesses", std::int64_t(crit.witnesses.size()),
             std::int64_t(w.witnesses.size()));
    r.expect_true(at + "witness list", crit.witnesses == w.witnesses);
    const std::int64_t radius = oracle::degree_bound(t, c, w.alpha_c);
    r.expect(at + "decompositions vs brute force",
             oracle::decompositions_bruteforce(t, c, w.alpha_c, radius), w.decompositions);
    r.expect(at + "status", w.decompositions.empty(), w.status == WallStatus::Numerical);
  }
  for (const Chamber& ch : chambers_from_walls(t, c, window, walls)) {
    r.expect_true(tag + "chamber sample " + ch.sample_alpha.to_string() + " not critical",
                  !oracle::is_critical(t, ch.sample_alpha).critical);
  }
  return r;
}

inline oracle::OracleReport check_type(const HiggsType& t, const CurveData& c,
                                       const ExtendedInterval& window) {
  return check_type(t, c, window, enumerate_walls(t, c, window));
}

}  // namespace upq
