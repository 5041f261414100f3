#pragma once

#include <cstdint>
#include <numeric>

#include "upq/rational.hpp"
#include "upq/types.hpp"

namespace upq {

// Closed-form numerical invariants of types. Every function is exact.

/// mu(E) = (a + b) / (p + q).
inline Rational mu(const HiggsType& t) { return Rational(t.degree(), t.rank()); }

/// alpha-slope mu(E) + alpha p/(p+q).
inline Rational mu_alpha(const HiggsType& t, const Rational& alpha) {
  return mu(t) + alpha * Rational(t.p, t.rank());
}

/// mu(V) - mu(W) = a/p - b/q; main types only.
inline Rational slope_gap(const HiggsType& t) { return Rational(t.a, t.p) - Rational(t.b, t.q); }

/// Toledo invariant 2(qa - pb)/(p+q).
inline Rational toledo(const HiggsType& t) {
  return Rational(2 * (t.q * t.a - t.p * t.b), t.rank());
}

/// Euler characteristic chi(t_sub, t) of the Hom-complex between objects of the
/// two types. Zero-rank types are allowed.
inline std::int64_t chi(const HiggsType& sub, const HiggsType& t, const CurveData& c) {
  const std::int64_t ps = sub.p, qs = sub.q, p = t.p, q = t.q;
  return (1 - c.genus) * (ps * p + qs * q - ps * q - qs * p) + (qs - ps) * (t.b - t.a) +
         (q - p) * (sub.a - sub.b) - (p * qs + ps * q) * c.deg_l;
}

/// Dimension of the stable moduli space where it is smooth: 1 - chi(t, t).
inline std::int64_t expected_dimension(const HiggsType& t, const CurveData& c) {
  return 1 - chi(t, t, c);
}

/// (g-1)(q-p)^2 + 2pq deg(L) + 1.
inline std::int64_t expected_dimension_closed_form(const HiggsType& t, const CurveData& c) {
  const std::int64_t d = t.q - t.p;
  return (c.genus - 1) * d * d + 2 * std::int64_t{t.p} * t.q * c.deg_l + 1;
}

/// Which case of the Milnor-Wood bounds produced each endpoint.
enum class UpperRegime { AboveMinusDegL, AtOrBelowMinusDegL };
enum class LowerRegime { BelowDegL, AtOrAboveDegL };

/// Toledo values not excluded by alpha-semistability at parameter alpha.
/// tau_min > tau_max encodes infeasibility.
struct MwInterval {
  Rational tau_min;
  Rational tau_max;
  UpperRegime regime_upper = UpperRegime::AboveMinusDegL;
  LowerRegime regime_lower = LowerRegime::BelowDegL;

  bool feasible() const { return tau_min <= tau_max; }
  bool contains(const Rational& tau) const { return tau_min <= tau && tau <= tau_max; }

  friend bool operator==(const MwInterval&, const MwInterval&) = default;
};

/// Rank-maximized Milnor-Wood interval. The boundary alpha = -deg L belongs to
/// the second upper case and alpha = deg L to the second lower case; the two
/// formulas agree there.
inline MwInterval mw_interval(int p, int q, const Rational& alpha, const CurveData& c) {
  const Rational dl(c.deg_l);
  const Rational m(std::min(p, q));
  const Rational spread(std::abs(p - q), p + q);
  const Rational harmonic(2 * std::int64_t{p} * q, p + q);
  MwInterval out;
  if (alpha > -dl) {
    out.tau_max = m * (dl - alpha * spread);
    out.regime_upper = UpperRegime::AboveMinusDegL;
  } else {
    out.tau_max = -alpha * harmonic;
    out.regime_upper = UpperRegime::AtOrBelowMinusDegL;
  }
  if (alpha < dl) {
    out.tau_min = m * (-alpha * spread - dl);
    out.regime_lower = LowerRegime::BelowDegL;
  } else {
    out.tau_min = -alpha * harmonic;
    out.regime_lower = LowerRegime::AtOrAboveDegL;
  }
  return out;
}

/// Necessary condition for alpha-semistable objects of type t to exist.
inline bool mw_feasible(const HiggsType& t, const Rational& alpha, const CurveData& c) {
  return mw_interval(t.p, t.q, alpha, c).contains(toledo(t));
}

/// Type of the dual bundle; alpha-stability of the dual matches (-alpha)-stability.
inline HiggsType dual_type(const HiggsType& t) { return {t.p, t.q, -t.a, -t.b}; }

/// Type of sigma(E) = (W, V, gamma, beta); alpha-stability of E matches
/// (-alpha)-stability of sigma(E).
inline HiggsType sigma_type(const HiggsType& t) { return {t.q, t.p, t.b, t.a}; }

struct GenericityFlags {
  bool coprime_rank_sum_exists_m = false;
  bool coprime_pq = false;
  bool alpha_independent_possible = true;

  friend bool operator==(const GenericityFlags&, const GenericityFlags&) = default;
};

/// Tests the two sufficient conditions ruling out alpha-independent strict
/// semistability. gcd(p+q, a+b-mp) only depends on m modulo p+q, so one
/// residue period is scanned.
inline GenericityFlags genericity(const HiggsType& t) {
  GenericityFlags f;
  const std::int64_t n = t.rank();
  for (std::int64_t m = 0; m < n && !f.coprime_rank_sum_exists_m; ++m) {
    f.coprime_rank_sum_exists_m = std::gcd(n, t.degree() - m * t.p) == 1;
  }
  f.coprime_pq = std::gcd(t.p, t.q) == 1;
  f.alpha_independent_possible = !(f.coprime_rank_sum_exists_m || (f.coprime_pq && t.p != t.q));
  return f;
}

}  // namespace upq
