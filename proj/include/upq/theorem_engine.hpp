#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "upq/decompositions.hpp"
#include "upq/error.hpp"
#include "upq/interval.hpp"
#include "upq/invariants.hpp"
#include "upq/range.hpp"
#include "upq/walls.hpp"

namespace upq {

enum class WindowSource {
  Q1Special,
  RegimePositiveAlpha,
  RegimeNegativeAlpha,
  Q1RangeAllNonnegative,
  Q1RangeAllNonpositive,
};

inline std::string to_string(WindowSource s) {
  switch (s) {
    case WindowSource::Q1Special: return "Q1Special";
    case WindowSource::RegimePositiveAlpha: return "RegimePositiveAlpha";
    case WindowSource::RegimeNegativeAlpha: return "RegimeNegativeAlpha";
    case WindowSource::Q1RangeAllNonnegative: return "Q1RangeAllNonnegative";
    case WindowSource::Q1RangeAllNonpositive: return "Q1RangeAllNonpositive";
  }
  return "?";
}

inline WindowSource parse_window_source(const std::string& s) {
  for (auto v : {WindowSource::Q1Special, WindowSource::RegimePositiveAlpha,
                 WindowSource::RegimeNegativeAlpha, WindowSource::Q1RangeAllNonnegative,
                 WindowSource::Q1RangeAllNonpositive}) {
    if (to_string(v) == s) return v;
  }
  throw Error(ErrorCode::ParseError, "bad window source '" + s + "'");
}

/// Parameters where H^2 of the deformation complex is known to vanish.
/// sources lists every clause that contributed, in clause order.
struct VanishingWindow {
  std::vector<ExtendedInterval> intervals;
  bool stable_only = false;
  std::vector<WindowSource> sources;

  bool contains(const Rational& alpha) const {
    return std::any_of(intervals.begin(), intervals.end(),
                       [&](const ExtendedInterval& i) { return i.contains(alpha); });
  }

  friend bool operator==(const VanishingWindow&, const VanishingWindow&) = default;
};

namespace detail {

inline void require_positive_deg_l(const CurveData& c) {
  if (c.deg_l < 1) throw Error(ErrorCode::DegLNonpositive, "deg L must be at least 1");
}

/// 2pq/(min{p,q}|p-q|+p+q) (b/q - a/p + shift) - shift.
inline Rational h2_bound(const HiggsType& t, const Rational& shift) {
  const std::int64_t den = std::int64_t{std::min(t.p, t.q)} * std::abs(t.p - t.q) + t.rank();
  return detail::threshold_formula(t, den, shift);
}

}  // namespace detail

inline VanishingWindow h2_vanishing_window(const HiggsType& t, const CurveData& c) {
  detail::require_positive_deg_l(c);
  const std::int64_t canon = 2 * c.genus - 2;
  if (c.deg_l < canon) {
    throw Error(ErrorCode::HypothesisError, "H^2 vanishing needs deg L >= 2g-2");
  }
  VanishingWindow out;
  out.stable_only = c.deg_l == canon;
  const Rational dl(c.deg_l);
  const Rational d = slope_gap(t);
  std::vector<ExtendedInterval> parts;

  if (t.q == 1 && t.p >= 2 && c.deg_l > canon) {
    const Rational centre = Rational(t.p) * d;
    const Rational radius(std::int64_t{t.p + 1} * (c.deg_l - canon));
    parts.push_back(ExtendedInterval::open(centre - radius, centre + radius));
    out.sources.push_back(WindowSource::Q1Special);
  }
  if (d > -dl) {
    const Rational upper = detail::h2_bound(t, -dl);
    if (upper > 0) {
      parts.push_back(ExtendedInterval::closed_open(0, upper));
      out.sources.push_back(WindowSource::RegimePositiveAlpha);
    }
  }
  if (d < dl) {
    const Rational lower = detail::h2_bound(t, dl);
    if (lower < 0) {
      parts.push_back(ExtendedInterval::open_closed(lower, 0));
      out.sources.push_back(WindowSource::RegimeNegativeAlpha);
    }
  }
  if (t.q == 1 && t.p >= 2 && c.deg_l > canon) {
    const Rational pd = Rational(t.p) * d;
    const Rational slack(std::int64_t{t.p - 2} * (c.deg_l - canon));
    if (pd > Rational(canon) - slack) {
      parts.push_back(ExtendedInterval::at_least(0));
      out.sources.push_back(WindowSource::Q1RangeAllNonnegative);
    }
    if (pd < Rational(-canon) + slack) {
      parts.push_back(ExtendedInterval::at_most(0));
      out.sources.push_back(WindowSource::Q1RangeAllNonpositive);
    }
  }
  out.intervals = merge_intervals(std::move(parts));
  return out;
}

enum class Conclusion {
  NotApplicable,
  Smooth,
  StableLociBirational,
  FullModuliBirational,
  Irreducible,
  GlSemistable,
};

inline std::string to_string(Conclusion c) {
  switch (c) {
    case Conclusion::NotApplicable: return "not applicable";
    case Conclusion::Smooth: return "smooth";
    case Conclusion::StableLociBirational: return "stable loci birational";
    case Conclusion::FullModuliBirational: return "full moduli birational";
    case Conclusion::Irreducible: return "irreducible";
    case Conclusion::GlSemistable: return "associated GL Higgs bundle semistable";
  }
  return "?";
}

inline Conclusion parse_conclusion(const std::string& s) {
  for (auto v : {Conclusion::NotApplicable, Conclusion::Smooth, Conclusion::StableLociBirational,
                 Conclusion::FullModuliBirational, Conclusion::Irreducible,
                 Conclusion::GlSemistable}) {
    if (to_string(v) == s) return v;
  }
  throw Error(ErrorCode::ParseError, "bad conclusion '" + s + "'");
}

/// Outcome of checking the hypotheses of one theorem. applicable is the
/// conjunction of the listed conditions.
struct Verdict {
  bool applicable = false;
  Conclusion conclusion = Conclusion::NotApplicable;
  ExtendedInterval window_used;
  std::vector<std::pair<std::string, bool>> conditions;
  std::vector<std::string> notes;
  std::optional<std::int64_t> dimension;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

namespace detail {

inline Verdict finish(Verdict v, Conclusion if_applicable) {
  v.applicable = std::all_of(v.conditions.begin(), v.conditions.end(),
                             [](const auto& c) { return c.second; });
  v.conclusion = v.applicable ? if_applicable : Conclusion::NotApplicable;
  return v;
}

/// Case (1) window [0, alpha_0) with alpha_0 computed for twist degree `deg`,
/// or nullopt when q > p or mu(V)-mu(W) <= -deg.
inline std::optional<ExtendedInterval> case1_window(const HiggsType& t, std::int64_t deg) {
  const Rational dl(deg);
  if (t.q > t.p || !(slope_gap(t) > -dl)) return std::nullopt;
  const std::int64_t den = std::int64_t{t.p} * t.q - std::int64_t{t.q} * t.q + t.rank();
  return ExtendedInterval::closed_open(0, threshold_formula(t, den, -dl));
}

inline std::optional<ExtendedInterval> case2_window(const HiggsType& t, std::int64_t deg) {
  const Rational dl(deg);
  if (t.p > t.q || !(slope_gap(t) < dl)) return std::nullopt;
  const std::int64_t den = std::int64_t{t.p} * t.q - std::int64_t{t.p} * t.p + t.rank();
  return ExtendedInterval::open_closed(threshold_formula(t, den, dl), 0);
}

inline bool is_critical_value(const HiggsType& t, const Rational& alpha) {
  return !numerical_walls(t, ExtendedInterval::closed(alpha, alpha)).empty();
}

}  // namespace detail

inline Verdict smoothness_verdict(const HiggsType& t, const CurveData& c, const Rational& alpha) {
  const VanishingWindow w = h2_vanishing_window(t, c);
  Verdict v;
  std::vector<ExtendedInterval> parts = w.intervals;
  parts.push_back(ExtendedInterval::closed(0, 0));
  const auto merged = merge_intervals(parts);
  if (!merged.empty()) v.window_used = merged.front();
  for (const auto& i : merged) {
    if (i.contains(alpha)) v.window_used = i;
  }
  v.conditions.emplace_back("alpha in H2 vanishing window or alpha = 0",
                            w.contains(alpha) || alpha.sign() == 0);
  if (alpha.sign() == 0 && !w.contains(alpha)) {
    v.notes.push_back("alpha = 0: H2 vanishing from the general alpha = 0 argument");
  }
  if (w.stable_only) {
    v.notes.push_back(
        "deg L = 2g-2: applies to alpha-stable objects E with no isomorphism "
        "E = sigma(E) (x) L^-1 K");
  }
  if (t.q == 1 && t.p >= 2) {
    v.notes.push_back(
        "q = 1 clause uses the (p+1)(deg L - 2g + 2) radius; a printed variant "
        "with radius (p+1) deg L is not used");
  }
  v.dimension = expected_dimension(t, c);
  return detail::finish(std::move(v), Conclusion::Smooth);
}

/// Codimension estimates for the flip loci on both sides of a wall.
struct CodimBounds {
  std::int64_t bound_plus = 0;
  std::int64_t bound_minus = 0;
  std::vector<std::string> notes;

  friend bool operator==(const CodimBounds&, const CodimBounds&) = default;
};

/// For a splitting whose first part has a smaller share of V than t, the first
/// part is the subobject on the alpha_c^+ side, giving the estimate
/// -chi(t1, t2); the roles swap on the other side.
inline std::optional<CodimBounds> codim_from_decompositions(const HiggsType& t,
                                                            const std::vector<Decomposition>& ds) {
  if (ds.empty()) return std::nullopt;
  CodimBounds out;
  bool first = true;
  bool mixed_signs = false;
  for (const Decomposition& d : ds) {
    // p1/n1 < p/n
    const bool sub_plus = std::int64_t{d.t1.p} * t.rank() < std::int64_t{t.p} * d.t1.rank();
    const std::int64_t plus = sub_plus ? -d.chi_21 : -d.chi_12;
    const std::int64_t minus = sub_plus ? -d.chi_12 : -d.chi_21;
    if (first) {
      out.bound_plus = plus;
      out.bound_minus = minus;
      first = false;
    } else {
      out.bound_plus = std::min(out.bound_plus, plus);
      out.bound_minus = std::min(out.bound_minus, minus);
    }
    mixed_signs = mixed_signs || !d.same_sign_ranks;
  }
  if (out.bound_plus <= 0) {
    out.notes.push_back("bound_plus = " + std::to_string(out.bound_plus) +
                        " is not positive: codimension hypothesis fails");
  }
  if (out.bound_minus <= 0) {
    out.notes.push_back("bound_minus = " + std::to_string(out.bound_minus) +
                        " is not positive: codimension hypothesis fails");
  }
  if (mixed_signs) {
    out.notes.push_back("some splittings have p_i - q_i of opposite signs");
  }
  return out;
}

inline std::optional<CodimBounds> flip_codim_bound(const HiggsType& t, const CurveData& c,
                                                   const Rational& alpha_c) {
  return codim_from_decompositions(t, enumerate_decompositions(t, c, alpha_c));
}

/// Points on either side of alpha_c closer than any other critical value,
/// the window endpoints and 0.
inline std::pair<Rational, Rational> wall_samples(const HiggsType& t, const Rational& alpha_c,
                                                 const std::vector<Rational>& guards) {
  const auto [below, above] = adjacent_walls(t, alpha_c);
  Rational gap = min(alpha_c - below, above - alpha_c);
  for (const Rational& g : guards) {
    const Rational dist = (g - alpha_c).abs();
    if (dist.sign() > 0) gap = min(gap, dist);
  }
  const Rational delta = gap / 2;
  return {alpha_c - delta, alpha_c + delta};
}

inline Verdict birationality_verdict(const HiggsType& t, const CurveData& c,
                                     const Rational& alpha_c,
                                     std::optional<WallStatus> status = std::nullopt) {
  detail::require_positive_deg_l(c);
  Verdict v;
  const bool critical = detail::is_critical_value(t, alpha_c);
  v.conditions.emplace_back("alpha_c is a critical value", critical);

  const auto w1 = detail::case1_window(t, c.deg_l);
  const auto w2 = detail::case2_window(t, c.deg_l);
  std::vector<Rational> guards{Rational(0)};
  for (const auto* w : {&w1, &w2}) {
    if (*w && !(*w)->is_empty()) {
      guards.push_back(*(*w)->lower());
      guards.push_back(*(*w)->upper());
    }
  }
  bool case1 = false, case2 = false;
  if (critical) {
    const auto [lo, hi] = wall_samples(t, alpha_c, guards);
    case1 = w1 && w1->contains(lo) && w1->contains(hi);
    case2 = w2 && w2->contains(lo) && w2->contains(hi);
    v.notes.push_back("samples alpha_c^- = " + lo.to_string() + ", alpha_c^+ = " + hi.to_string());
  }
  if (case1) {
    v.window_used = *w1;
    v.notes.push_back("case (1)");
  } else if (case2) {
    v.window_used = *w2;
    v.notes.push_back("case (2)");
  } else if (w1) {
    v.window_used = *w1;
  } else if (w2) {
    v.window_used = *w2;
  }
  v.conditions.emplace_back("case (1) or case (2) holds at both samples", case1 || case2);
  if (critical && !status) {
    status = enumerate_decompositions(t, c, alpha_c).empty() ? WallStatus::Numerical
                                                             : WallStatus::Decomposable;
  }
  if (critical && status == WallStatus::Numerical) {
    v.notes.push_back("wall is Numerical: flip loci are empty at type level");
  }
  Conclusion conclusion = Conclusion::StableLociBirational;
  if (!genericity(t).alpha_independent_possible) {
    conclusion = Conclusion::FullModuliBirational;
  }
  return detail::finish(std::move(v), conclusion);
}

inline Verdict irreducibility_verdict(const HiggsType& t, const CurveData& c,
                                      const Rational& alpha) {
  Verdict v;
  const std::int64_t canon = 2 * c.genus - 2;
  v.conditions.emplace_back("L = K", c.canonical);
  v.conditions.emplace_back("gcd(p+q, a+b) = 1", std::gcd(std::int64_t{t.rank()}, t.degree()) == 1);
  const Rational bound(std::int64_t{std::min(t.p, t.q)} * canon);
  v.conditions.emplace_back("|tau| <= min{p,q}(2g-2)", toledo(t).abs() <= bound);
  const auto w1 = detail::case1_window(t, canon);
  const auto w2 = detail::case2_window(t, canon);
  const bool in1 = w1 && w1->contains(alpha);
  const bool in2 = w2 && w2->contains(alpha);
  if (in1 || (!in2 && w1)) {
    v.window_used = *w1;
  } else if (w2) {
    v.window_used = *w2;
  }
  v.conditions.emplace_back("alpha in case (1) or case (2) window", in1 || in2);
  return detail::finish(std::move(v), Conclusion::Irreducible);
}

enum class ToledoCase { Case1, Case2, Neither };

inline std::string to_string(ToledoCase c) {
  switch (c) {
    case ToledoCase::Case1: return "Case1";
    case ToledoCase::Case2: return "Case2";
    case ToledoCase::Neither: break;
  }
  return "Neither";
}

inline ToledoCase parse_toledo_case(const std::string& s) {
  if (s == "Case1") return ToledoCase::Case1;
  if (s == "Case2") return ToledoCase::Case2;
  if (s == "Neither") return ToledoCase::Neither;
  throw Error(ErrorCode::ParseError, "bad Toledo case '" + s + "'");
}

struct ToledoRange {
  ToledoCase which = ToledoCase::Neither;
  std::optional<ExtendedInterval> interval;

  friend bool operator==(const ToledoRange&, const ToledoRange&) = default;
};

/// Toledo values for which the birationality windows can be nonempty. Case 1
/// needs q <= p and case 2 needs p <= q.
inline ToledoRange toledo_meaningful_range(const HiggsType& t, const CurveData& c) {
  const Rational tau = toledo(t);
  const Rational dl(c.deg_l);
  const Rational harmonic(2 * std::int64_t{t.p} * t.q, t.rank());
  if (t.q <= t.p) {
    auto i = ExtendedInterval::open(-harmonic * dl, -Rational(t.q - 1) * dl);
    if (i.contains(tau)) return {ToledoCase::Case1, i};
  }
  if (t.p <= t.q) {
    auto i = ExtendedInterval::open(Rational(t.p - 1) * dl, harmonic * dl);
    if (i.contains(tau)) return {ToledoCase::Case2, i};
  }
  return {};
}

/// Window on which alpha-semistability of a U(p,p) object forces semistability
/// of the associated GL(2p) Higgs bundle.
inline Verdict gl_comparison_window(const HiggsType& t, const CurveData& c) {
  Verdict v;
  v.conditions.emplace_back("p = q", t.p == t.q);
  if (t.p != t.q) {
    v.conditions.emplace_back("window nonempty", false);
    return detail::finish(std::move(v), Conclusion::GlSemistable);
  }
  const Rational dl(c.deg_l);
  const Rational d = slope_gap(t);
  const Rational p(t.p);
  std::vector<ExtendedInterval> parts;
  if (d > -dl) {
    const Rational a0 = p * (-d - dl) + dl;
    const auto w = ExtendedInterval::closed_open(0, a0);
    v.notes.push_back("condition (1): alpha_0 = " + a0.to_string() + ", window " + w.to_string());
    parts.push_back(w);
  }
  if (d < dl) {
    const Rational a0p = p * (-d + dl) - dl;
    const auto w = ExtendedInterval::open_closed(a0p, 0);
    v.notes.push_back("condition (2): alpha_0' = " + a0p.to_string() + ", window " + w.to_string());
    parts.push_back(w);
  }
  const auto merged = merge_intervals(std::move(parts));
  if (!merged.empty()) v.window_used = merged.front();
  v.conditions.emplace_back("window nonempty", !merged.empty());
  return detail::finish(std::move(v), Conclusion::GlSemistable);
}

}  // namespace upq
