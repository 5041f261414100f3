#pragma once

// Independent verifiers. Everything here is rederived from the defining
// equations and deliberately shares nothing with the engine beyond the core
// value types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "upq/error.hpp"
#include "upq/interval.hpp"
#include "upq/rational.hpp"
#include "upq/types.hpp"

namespace upq::oracle {

struct Mismatch {
  std::string description;
  std::string expected;
  std::string actual;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct OracleReport {
  std::size_t checked = 0;
  std::vector<Mismatch> mismatches;
  bool passed = true;

  /// Counts one check and records it when expected != actual.
  template <class T>
  void expect(const std::string& what, const T& expected, const T& actual) {
    ++checked;
    if (!(expected == actual)) add_mismatch(what, show(expected), show(actual));
  }

  void expect_true(const std::string& what, bool ok) {
    ++checked;
    if (!ok) add_mismatch(what, "true", "false");
  }

  void add_mismatch(std::string what, std::string expected, std::string actual) {
    mismatches.push_back({std::move(what), std::move(expected), std::move(actual)});
    passed = false;
  }

  void merge(const OracleReport& other) {
    checked += other.checked;
    for (const auto& m : other.mismatches) add_mismatch(m.description, m.expected, m.actual);
  }

  friend bool operator==(const OracleReport&, const OracleReport&) = default;

 private:
  static std::string show(const Rational& r) { return r.to_string(); }
  static std::string show(std::int64_t v) { return std::to_string(v); }
  static std::string show(bool v) { return v ? "true" : "false"; }
  static std::string show(const HiggsType& t) { return t.to_string(); }
  static std::string show(const ExtendedInterval& i) { return i.to_string(); }
  static std::string show(const std::vector<Rational>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].to_string();
    return out + "}";
  }
  static std::string show(const std::vector<Decomposition>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
      out += (i ? "," : "") + v[i].t1.to_string() + "+" + v[i].t2.to_string();
    }
    return out + "}";
  }
};

namespace detail {

inline std::int64_t total_rank(const HiggsType& t) { return std::int64_t{t.p} + t.q; }

/// alpha-slope straight from the definition: (deg V + deg W + alpha rk V) / rk.
inline Rational alpha_slope(const HiggsType& t, const Rational& alpha) {
  return (Rational(t.a + t.b) + alpha * Rational(t.p)) / Rational(total_rank(t));
}

inline Rational tau(const HiggsType& t) {
  return Rational(2) * (Rational(t.q) * Rational(t.a) - Rational(t.p) * Rational(t.b)) /
         Rational(total_rank(t));
}

/// Rank-resolved Milnor-Wood test: some rk(gamma), rk(beta) in [0, min{p,q}]
/// satisfy both one-sided bounds.
inline bool mw_rank_form(const HiggsType& t, const Rational& alpha, std::int64_t deg_l) {
  const Rational tv = tau(t);
  const Rational c = Rational(2 * std::int64_t{t.p} * t.q) / Rational(total_rank(t));
  const Rational dl(deg_l);
  const int m = std::min(t.p, t.q);
  bool upper = false, lower = false;
  for (int r = 0; r <= m; ++r) {
    upper = upper || tv <= Rational(r) * (dl + alpha) - alpha * c;
    lower = lower || tv >= Rational(r) * (alpha - dl) - alpha * c;
  }
  return upper && lower;
}

inline bool admissible_pair(const HiggsType& t, int ps, int qs) {
  if (ps == 0 && qs == 0) return false;
  // p'/(p'+q') == p/(p+q)
  return std::int64_t{ps} * total_rank(t) != std::int64_t{t.p} * (ps + qs);
}

}  // namespace detail

struct CriticalResult {
  bool critical = false;
  std::vector<WitnessTriple> witnesses;
};

/// Tests every admissible (p', q') for an integral s = n'(mu + alpha lambda) - alpha p'.
inline CriticalResult is_critical(const HiggsType& t, const Rational& alpha) {
  CriticalResult out;
  const Rational target = detail::alpha_slope(t, alpha);
  for (int ps = 0; ps <= t.p; ++ps) {
    for (int qs = 0; qs <= t.q; ++qs) {
      if (!detail::admissible_pair(t, ps, qs)) continue;
      const Rational s = Rational(ps + qs) * target - alpha * Rational(ps);
      if (s.is_integer()) out.witnesses.push_back({ps, qs, s.to_int64()});
    }
  }
  out.critical = !out.witnesses.empty();
  return out;
}

namespace detail {

/// Integer-only criticality of k/d (lowest terms, d > 0): n'(a+b) d + k (n' p - p' N)
/// must be divisible by N d for some admissible pair.
inline bool critical_fraction(const HiggsType& t, std::int64_t k, std::int64_t d) {
  const __int128 n = total_rank(t);
  for (int ps = 0; ps <= t.p; ++ps) {
    for (int qs = 0; qs <= t.q; ++qs) {
      if (!admissible_pair(t, ps, qs)) continue;
      const __int128 ns = ps + qs;
      const __int128 num = ns * (t.a + t.b) * d + __int128(k) * (ns * t.p - __int128(ps) * n);
      if (num % (n * d) == 0) return true;
    }
  }
  return false;
}

}  // namespace detail

/// Scans every fraction in the window whose reduced denominator divides some
/// |p' q - p q'| and keeps the critical ones.
inline std::vector<Rational> walls_by_scan(const HiggsType& t, const ExtendedInterval& window) {
  if (window.is_empty()) return {};
  if (!window.is_bounded()) {
    throw Error(ErrorCode::WindowUnbounded, "scan window must be bounded");
  }
  std::set<std::int64_t> dens;
  for (int ps = 0; ps <= t.p; ++ps) {
    for (int qs = 0; qs <= t.q; ++qs) {
      if (!detail::admissible_pair(t, ps, qs)) continue;
      const std::int64_t big = std::abs(std::int64_t{ps} * t.q - std::int64_t{t.p} * qs);
      for (std::int64_t d = 1; d <= big; ++d) {
        if (big % d == 0) dens.insert(d);
      }
    }
  }
  std::vector<Rational> out;
  for (std::int64_t d : dens) {
    const std::int64_t k_lo = (*window.lower() * Rational(d)).ceil().to_int64();
    const std::int64_t k_hi = (*window.upper() * Rational(d)).floor().to_int64();
    for (std::int64_t k = k_lo; k <= k_hi; ++k) {
      if (std::gcd(k, d) != 1) continue;
      if (!detail::critical_fraction(t, k, d)) continue;
      Rational x(k, d);
      if (window.contains(x)) out.push_back(std::move(x));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Hom-complex Euler characteristic: chi = (1-g)(rk Hom0 - rk Hom1) + deg Hom0 - deg Hom1,
/// Hom0 = Hom(V',V) + Hom(W',W), Hom1 = Hom(V',W(x)L) + Hom(W',V(x)L).
inline std::int64_t chi_hom(const HiggsType& s, const HiggsType& t, std::int64_t genus,
                            std::int64_t deg_l) {
  const std::int64_t rk0 = std::int64_t{s.p} * t.p + std::int64_t{s.q} * t.q;
  const std::int64_t deg0 = (s.p * t.a - t.p * s.a) + (s.q * t.b - t.q * s.b);
  const std::int64_t rk1 = std::int64_t{s.p} * t.q + std::int64_t{s.q} * t.p;
  const std::int64_t deg1 =
      (s.p * (t.b + t.q * deg_l) - t.q * s.a) + (s.q * (t.a + t.p * deg_l) - t.p * s.b);
  return (1 - genus) * (rk0 - rk1) + deg0 - deg1;
}

namespace detail {

struct DegreeWindow {
  bool empty = false;
  Rational lo;
  Rational hi;
};

/// Range of a1 allowed by the rank-form Milnor-Wood bounds for the split
/// (p1, q1, s1) of t at alpha.
inline DegreeWindow split_degree_window(const HiggsType& t, int p1, int q1, std::int64_t s1,
                                        const Rational& alpha, std::int64_t deg_l) {
  const Rational dl(deg_l);
  // tau range over the rank choices of the rank-form bounds.
  auto tau_span = [&](int p, int q) {
    const Rational c = Rational(2 * std::int64_t{p} * q) / Rational(p + q);
    const int m = std::min(p, q);
    Rational hi = -alpha * c, lo = -alpha * c;
    for (int r = 0; r <= m; ++r) {
      hi = max(hi, Rational(r) * (dl + alpha) - alpha * c);
      lo = min(lo, Rational(r) * (alpha - dl) - alpha * c);
    }
    return std::pair{lo, hi};
  };
  const int p2 = t.p - p1, q2 = t.q - q1;
  const std::int64_t s2 = t.a + t.b - s1;
  std::optional<Rational> lo, hi;
  auto narrow = [&](const Rational& l, const Rational& h) {
    lo = lo ? max(*lo, l) : l;
    hi = hi ? min(*hi, h) : h;
  };
  if (p1 == 0) narrow(0, 0);
  if (q1 == 0) narrow(s1, s1);
  if (p2 == 0) narrow(t.a, t.a);
  if (q2 == 0) narrow(s1 - t.b, s1 - t.b);
  if (p1 > 0 && q1 > 0) {
    // tau1 = 2 a1 - 2 p1 s1 / n1
    const auto [tl, th] = tau_span(p1, q1);
    const Rational shift = Rational(std::int64_t{p1} * s1) / Rational(p1 + q1);
    narrow(tl / Rational(2) + shift, th / Rational(2) + shift);
  }
  if (p2 > 0 && q2 > 0) {
    const auto [tl, th] = tau_span(p2, q2);
    const Rational shift = Rational(std::int64_t{p2} * s2) / Rational(p2 + q2);
    narrow(Rational(t.a) - (th / Rational(2) + shift), Rational(t.a) - (tl / Rational(2) + shift));
  }
  if (*lo > *hi) return {true, 0, 0};
  return {false, *lo, *hi};
}

inline std::optional<std::int64_t> integral_split_sum(const HiggsType& t, int p1, int q1,
                                                      const Rational& alpha) {
  const Rational s = Rational(p1 + q1) * alpha_slope(t, alpha) - alpha * Rational(p1);
  if (!s.is_integer()) return std::nullopt;
  return s.to_int64();
}

}  // namespace detail

/// Largest |a1| or |b1| any filtered splitting at alpha can have.
inline std::int64_t degree_bound(const HiggsType& t, const CurveData& c, const Rational& alpha) {
  std::int64_t bound = 0;
  for (int p1 = 0; p1 <= t.p; ++p1) {
    for (int q1 = 0; q1 <= t.q; ++q1) {
      if (!detail::admissible_pair(t, p1, q1)) continue;
      if (p1 == t.p && q1 == t.q) continue;
      const auto s1 = detail::integral_split_sum(t, p1, q1, alpha);
      if (!s1) continue;
      const auto w = detail::split_degree_window(t, p1, q1, *s1, alpha, c.deg_l);
      if (w.empty) continue;
      for (const Rational& a1 : {w.lo, w.hi}) {
        bound = std::max({bound, a1.abs().ceil().to_int64(),
                          (Rational(*s1) - a1).abs().ceil().to_int64()});
      }
    }
  }
  return bound;
}

/// Exhaustive search over |a1|, |b1| <= radius. b1 is pinned by the slope
/// equation a1 + b1 = s1, so only a1 is looped.
inline std::vector<Decomposition> decompositions_bruteforce(const HiggsType& t, const CurveData& c,
                                                            const Rational& alpha_c,
                                                            std::int64_t degree_radius) {
  const std::int64_t need = degree_bound(t, c, alpha_c);
  if (need > degree_radius) {
    throw Error(ErrorCode::RadiusTooSmall, "degree radius " + std::to_string(degree_radius) +
                                               " below analytic bound " + std::to_string(need));
  }
  auto passes = [&](const HiggsType& part) {
    return part.p == 0 || part.q == 0 || detail::mw_rank_form(part, alpha_c, c.deg_l);
  };
  std::vector<Decomposition> out;
  const Rational target = detail::alpha_slope(t, alpha_c);
  for (int p1 = 0; p1 <= t.p; ++p1) {
    for (int q1 = 0; q1 <= t.q; ++q1) {
      if (!detail::admissible_pair(t, p1, q1)) continue;
      if (p1 == t.p && q1 == t.q) continue;
      const auto s1 = detail::integral_split_sum(t, p1, q1, alpha_c);
      if (!s1) continue;
      for (std::int64_t a1 = -degree_radius; a1 <= degree_radius; ++a1) {
        const std::int64_t b1 = *s1 - a1;
        if (b1 < -degree_radius || b1 > degree_radius) continue;
        const HiggsType t1{p1, q1, a1, b1};
        const HiggsType t2{t.p - p1, t.q - q1, t.a - a1, t.b - b1};
        if (!is_valid_type(t1) || !is_valid_type(t2)) continue;
        if (detail::alpha_slope(t1, alpha_c) != target) continue;
        if (!canonical_orientation(t1, t2)) continue;
        if (!passes(t1) || !passes(t2)) continue;
        out.push_back({t1, t2, chi_hom(t2, t1, c.genus, c.deg_l),
                       chi_hom(t1, t2, c.genus, c.deg_l), same_sign_ranks(t1, t2)});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Engine entry points exercised by verify_identities. Tests swap individual
/// hooks for corrupted versions to confirm the suite notices.
struct IdentityTargets {
  std::function<std::int64_t(const HiggsType&, const HiggsType&, const CurveData&)> chi;
  std::function<std::int64_t(const HiggsType&, const CurveData&)> expected_dimension;
  std::function<Rational(const HiggsType&)> toledo;
  std::function<HiggsType(const HiggsType&)> dual;
  std::function<HiggsType(const HiggsType&)> sigma;
  std::function<std::vector<Rational>(const HiggsType&, const ExtendedInterval&)> walls;
  std::function<ExtendedInterval(const HiggsType&, const CurveData&)> alpha_range;
  std::function<std::pair<Rational, Rational>(int, int, const Rational&, const CurveData&)>
      mw_interval;
  /// alpha_0 (when q <= p) and alpha'_0 (when p <= q).
  std::function<std::pair<std::optional<Rational>, std::optional<Rational>>(const HiggsType&,
                                                                            const CurveData&)>
      first_thresholds;
};

using SweepItem = std::pair<HiggsType, CurveData>;

/// Window used for the wall symmetry checks; deliberately not symmetric about 0.
inline ExtendedInterval symmetry_window() { return ExtendedInterval::closed(-3, Rational(7, 2)); }

inline OracleReport verify_identities(const std::vector<SweepItem>& sweep,
                                      const IdentityTargets& eng, std::uint32_t seed = 20240601) {
  OracleReport r;
  std::mt19937 rng(seed);
  for (const auto& [t, c] : sweep) {
    const std::string tag = t.to_string() + " g=" + std::to_string(c.genus) +
                            " dL=" + std::to_string(c.deg_l) + ": ";
    const std::int64_t dq = t.q - t.p;
    const std::int64_t closed_dim =
        (c.genus - 1) * dq * dq + 2 * std::int64_t{t.p} * t.q * c.deg_l + 1;
    r.expect(tag + "dimension identity 1 - chi(t,t)", closed_dim, 1 - eng.chi(t, t, c));
    r.expect(tag + "expected_dimension", closed_dim, eng.expected_dimension(t, c));
    r.expect(tag + "chi(t,t) against Hom-complex", chi_hom(t, t, c.genus, c.deg_l),
             eng.chi(t, t, c));

    // Random splittings t = t1 + t2 with the zero-rank degree convention.
    for (int k = 0; k < 3; ++k) {
      const int p1 = std::uniform_int_distribution<int>(0, t.p)(rng);
      const int q1 = std::uniform_int_distribution<int>(0, t.q)(rng);
      std::uniform_int_distribution<std::int64_t> deg(-6, 6);
      HiggsType t1{p1, q1, p1 ? deg(rng) : 0, q1 ? deg(rng) : 0};
      if (p1 == t.p) t1.a = t.a;
      if (q1 == t.q) t1.b = t.b;
      if ((p1 == 0 && q1 == 0) || (p1 == t.p && q1 == t.q)) continue;
      const HiggsType t2 = t - t1;
      const std::string split = tag + "split " + t1.to_string() + "+" + t2.to_string() + ": ";
      r.expect(split + "chi additivity",
               eng.chi(t1, t1, c) + eng.chi(t2, t2, c) + eng.chi(t1, t2, c) + eng.chi(t2, t1, c),
               eng.chi(t, t, c));
      r.expect(split + "chi linear in first slot", eng.chi(t1, t, c) + eng.chi(t2, t, c),
               eng.chi(t, t, c));
      r.expect(split + "chi linear in second slot", eng.chi(t, t1, c) + eng.chi(t, t2, c),
               eng.chi(t, t, c));
      r.expect(split + "chi(t1,t2) against Hom-complex", chi_hom(t1, t2, c.genus, c.deg_l),
               eng.chi(t1, t2, c));
    }

    const Rational tv = detail::tau(t);
    const HiggsType du = eng.dual(t);
    const HiggsType sg = eng.sigma(t);
    r.expect(tag + "dual type", HiggsType{t.p, t.q, -t.a, -t.b}, du);
    r.expect(tag + "sigma type", HiggsType{t.q, t.p, t.b, t.a}, sg);
    r.expect(tag + "toledo", tv, eng.toledo(t));
    r.expect(tag + "toledo antisymmetry under dual", -eng.toledo(t), eng.toledo(du));
    r.expect(tag + "toledo antisymmetry under sigma", -eng.toledo(t), eng.toledo(sg));

    const ExtendedInterval w = symmetry_window();
    std::vector<Rational> negated = eng.walls(t, w);
    for (auto& x : negated) x = -x;
    std::sort(negated.begin(), negated.end());
    r.expect(tag + "walls of sigma(t) on -W", negated, eng.walls(sg, w.negated()));
    r.expect(tag + "walls of dual(t) on -W", negated, eng.walls(du, w.negated()));

    const ExtendedInterval range = eng.alpha_range(t, c);
    r.expect(tag + "range reflection under sigma", range.negated(), eng.alpha_range(sg, c));
    r.expect(tag + "range reflection under dual", range.negated(), eng.alpha_range(du, c));

    const std::int64_t m = std::min(t.p, t.q);
    const auto [lo, hi] = eng.mw_interval(t.p, t.q, Rational(0), c);
    r.expect(tag + "MW lower bound at alpha=0", Rational(-m * c.deg_l), lo);
    r.expect(tag + "MW upper bound at alpha=0", Rational(m * c.deg_l), hi);

    const Rational dl(c.deg_l);
    const Rational d = Rational(t.a, t.p) - Rational(t.b, t.q);
    const auto [a0, a0p] = eng.first_thresholds(t, c);
    if (t.q <= t.p && d > -dl) {
      r.expect(tag + "sign law alpha_0 > 0", tv < -Rational(t.q - 1) * dl, a0 && a0->sign() > 0);
      if (t.p > t.q && range.lower()) {
        r.expect_true(tag + "alpha_0 > alpha_m", a0 && *a0 > *range.lower());
      }
    }
    if (t.p <= t.q && d < dl) {
      r.expect(tag + "sign law alpha'_0 < 0", tv > Rational(t.p - 1) * dl, a0p && a0p->sign() < 0);
      if (t.p < t.q && range.upper()) {
        r.expect_true(tag + "alpha'_0 < alpha_M", a0p && *a0p < *range.upper());
      }
    }
  }
  return r;
}

}  // namespace upq::oracle
