#pragma once

#include <algorithm>
#include <vector>

#include "upq/error.hpp"
#include "upq/invariants.hpp"
#include "upq/range.hpp"
#include "upq/types.hpp"

namespace upq {

namespace detail {

/// Integer interval [lo, hi]; empty when lo > hi.
struct IntRange {
  std::int64_t lo;
  std::int64_t hi;

  void clamp(const Rational& l, const Rational& h) {
    lo = std::max(lo, l.ceil().to_int64());
    hi = std::min(hi, h.floor().to_int64());
  }
  void fix(std::int64_t v) {
    lo = std::max(lo, v);
    hi = std::min(hi, v);
  }
};

inline bool part_passes_filters(const HiggsType& part, const Rational& alpha, const CurveData& c) {
  if (!part.is_main()) return true;
  if (!mw_feasible(part, alpha, c)) return false;
  return part.p == part.q || alpha_range(part, c).range.contains(alpha);
}

}  // namespace detail

/// All unordered splittings t = t1 + t2 into valid types of equal alpha_c-slope.
/// Main parts must pass the Milnor-Wood and admissible-range filters at
/// alpha_c. Splittings whose rank ratio equals that of t have equal slopes for
/// every alpha or none, so they never bound a wall and are left out.
inline std::vector<Decomposition> enumerate_decompositions(const HiggsType& t, const CurveData& c,
                                                           const Rational& alpha_c) {
  if (c.deg_l < 1) throw Error(ErrorCode::DegLNonpositive, "deg L must be at least 1");
  std::vector<Decomposition> out;
  const Rational slope = mu_alpha(t, alpha_c);
  for (int p1 = 0; p1 <= t.p; ++p1) {
    for (int q1 = 0; q1 <= t.q; ++q1) {
      const int p2 = t.p - p1, q2 = t.q - q1;
      if ((p1 == 0 && q1 == 0) || (p2 == 0 && q2 == 0)) continue;
      if (std::int64_t{p1} * t.q == std::int64_t{t.p} * q1) continue;
      const int n1 = p1 + q1, n2 = p2 + q2;
      const Rational s1_exact = slope * Rational(n1) - alpha_c * Rational(p1);
      if (!s1_exact.is_integer()) continue;
      const std::int64_t s1 = s1_exact.to_int64();
      const std::int64_t s2 = t.degree() - s1;

      // Degree a1 of V1; b1 = s1 - a1. Main parts have a1 = tau1/2 + p1 s1/n1.
      detail::IntRange a1{INT64_MIN, INT64_MAX};
      if (p1 == 0) a1.fix(0);
      if (q1 == 0) a1.fix(s1);
      if (p2 == 0) a1.fix(t.a);
      if (q2 == 0) a1.fix(s1 - t.b);
      if (p1 >= 1 && q1 >= 1) {
        const MwInterval mw = mw_interval(p1, q1, alpha_c, c);
        const Rational shift(std::int64_t{p1} * s1, n1);
        a1.clamp(mw.tau_min / 2 + shift, mw.tau_max / 2 + shift);
      }
      if (p2 >= 1 && q2 >= 1) {
        const MwInterval mw = mw_interval(p2, q2, alpha_c, c);
        const Rational shift(std::int64_t{p2} * s2, n2);
        // a1 = a - a2 reverses the bounds.
        a1.clamp(Rational(t.a) - (mw.tau_max / 2 + shift), Rational(t.a) - (mw.tau_min / 2 + shift));
      }
      for (std::int64_t x = a1.lo; x <= a1.hi; ++x) {
        const HiggsType t1{p1, q1, x, s1 - x};
        const HiggsType t2 = t - t1;
        if (!is_valid_type(t1) || !is_valid_type(t2)) continue;
        if (!canonical_orientation(t1, t2)) continue;
        if (!detail::part_passes_filters(t1, alpha_c, c)) continue;
        if (!detail::part_passes_filters(t2, alpha_c, c)) continue;
        out.push_back({t1, t2, chi(t2, t1, c), chi(t1, t2, c), same_sign_ranks(t1, t2)});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace upq
