#pragma once

#include <optional>
#include <string>
#include <vector>

#include "upq/error.hpp"
#include "upq/interval.hpp"
#include "upq/invariants.hpp"
#include "upq/rational.hpp"
#include "upq/types.hpp"

namespace upq {

/// Admissible stability parameters for a main type.
struct ParamRange {
  ExtendedInterval range;
  bool finite = false;

  friend bool operator==(const ParamRange&, const ParamRange&) = default;
};

/// [alpha_m, alpha_M] for p != q, the whole line for p == q.
inline ParamRange alpha_range(const HiggsType& t, const CurveData& c) {
  if (t.p == t.q) return {ExtendedInterval::whole(), false};
  const Rational d = slope_gap(t);
  const Rational dl(c.deg_l);
  const int k = std::abs(t.q - t.p);
  const Rational lead(2 * std::int64_t{std::max(t.p, t.q)}, k);
  const Rational spread(t.rank(), k);
  const Rational lo = d > -dl ? -lead * d - spread * dl : -d;
  const Rational hi = d < dl ? -lead * d + spread * dl : -d;
  return {ExtendedInterval::closed(lo, hi), true};
}

/// alpha_i (q <= p) and alpha'_j (p <= q) together with the surjectivity
/// thresholds. Empty vectors / nullopt when the defining hypothesis fails.
struct Thresholds {
  std::vector<Rational> alpha_i;
  std::vector<Rational> alpha_prime_j;
  std::optional<Rational> alpha_t;
  std::optional<Rational> alpha_t_prime;

  friend bool operator==(const Thresholds&, const Thresholds&) = default;
};

namespace detail {

/// 2pq / den * (mu(W) - mu(V) + shift) - shift, the common shape of every
/// threshold below.
inline Rational threshold_formula(const HiggsType& t, std::int64_t den, const Rational& shift) {
  const Rational w_minus_v = -slope_gap(t);
  return Rational(2 * std::int64_t{t.p} * t.q, den) * (w_minus_v + shift) - shift;
}

}  // namespace detail

inline Thresholds thresholds(const HiggsType& t, const CurveData& c) {
  Thresholds out;
  const std::int64_t p = t.p, q = t.q, n = t.rank();
  const Rational dl(c.deg_l);
  const Rational d = slope_gap(t);
  if (q <= p) {
    for (std::int64_t i = 0; i < q; ++i) {
      out.alpha_i.push_back(detail::threshold_formula(t, q * (p - q) + (i + 1) * n, -dl));
    }
  }
  if (p <= q) {
    for (std::int64_t j = 0; j < p; ++j) {
      out.alpha_prime_j.push_back(detail::threshold_formula(t, p * (q - p) + (j + 1) * n, dl));
    }
  }
  // mu(W) - mu(V) > -dL is d < dL.
  if (p >= q && d < dl) out.alpha_t = detail::threshold_formula(t, p * q - q * q + n, dl);
  if (p <= q && d > -dl) out.alpha_t_prime = detail::threshold_formula(t, p * q - p * p + n, -dl);
  return out;
}

/// What the threshold comparisons say about beta: W -> V(x)L or gamma: V -> W(x)L.
struct FieldStatus {
  enum class Kind { Injective, Zero, KernelRankAtMost, KernelRankAtLeast, Unknown };
  Kind kind = Kind::Unknown;
  int bound = 0;  // only meaningful for the two KernelRank kinds

  static FieldStatus injective() { return {Kind::Injective, 0}; }
  static FieldStatus zero() { return {Kind::Zero, 0}; }
  static FieldStatus kernel_at_most(int k) { return {Kind::KernelRankAtMost, k}; }
  static FieldStatus kernel_at_least(int k) { return {Kind::KernelRankAtLeast, k}; }
  static FieldStatus unknown() { return {}; }

  std::string to_string() const {
    switch (kind) {
      case Kind::Injective: return "injective";
      case Kind::Zero: return "zero";
      case Kind::KernelRankAtMost: return "ker<=" + std::to_string(bound);
      case Kind::KernelRankAtLeast: return "ker>=" + std::to_string(bound);
      case Kind::Unknown: break;
    }
    return "unknown";
  }

  static FieldStatus parse(const std::string& s) {
    if (s == "injective") return injective();
    if (s == "zero") return zero();
    if (s == "unknown") return unknown();
    if (s.size() > 5 && s.compare(0, 5, "ker<=") == 0) return kernel_at_most(std::stoi(s.substr(5)));
    if (s.size() > 5 && s.compare(0, 5, "ker>=") == 0) return kernel_at_least(std::stoi(s.substr(5)));
    throw Error(ErrorCode::ParseError, "bad field status '" + s + "'");
  }

  friend bool operator==(const FieldStatus&, const FieldStatus&) = default;
};

enum class Tri { Yes, No, Unknown };

inline std::string to_string(Tri v) {
  switch (v) {
    case Tri::Yes: return "true";
    case Tri::No: return "false";
    case Tri::Unknown: break;
  }
  return "unknown";
}

inline Tri parse_tri(const std::string& s) {
  if (s == "true") return Tri::Yes;
  if (s == "false") return Tri::No;
  if (s == "unknown") return Tri::Unknown;
  throw Error(ErrorCode::ParseError, "bad tri-state '" + s + "'");
}

struct FieldProfile {
  FieldStatus beta_status;
  FieldStatus gamma_status;
  Tri beta_surjective = Tri::Unknown;
  Tri gamma_surjective = Tri::Unknown;
  std::optional<std::string> extreme_note;

  friend bool operator==(const FieldProfile&, const FieldProfile&) = default;
};

/// Structure of the Higgs fields forced on alpha-semistable objects of type t.
/// Only one-directional implications are used; anything else is Unknown.
inline FieldProfile field_profile(const HiggsType& t, const CurveData& c, const Rational& alpha) {
  const ParamRange pr = alpha_range(t, c);
  if (!pr.range.contains(alpha)) {
    throw Error(ErrorCode::OutOfRange,
                "alpha = " + alpha.to_string() + " outside " + pr.range.to_string());
  }
  const Thresholds th = thresholds(t, c);
  const Rational dl(c.deg_l);
  const Rational d = slope_gap(t);
  const int p = t.p, q = t.q;
  FieldProfile out;

  if (p >= q && d > -dl) {
    // alpha_i increases with i: alpha < alpha_{i-1} gives rk ker(beta) < i.
    for (int i = 1; i <= q; ++i) {
      if (alpha < th.alpha_i[i - 1]) {
        out.beta_status = i == 1 ? FieldStatus::injective() : FieldStatus::kernel_at_most(i - 1);
        break;
      }
    }
  } else if (p >= q && d < -dl) {
    // alpha_i decreases: alpha < alpha_{i-1} gives rk ker(beta) > i.
    for (int i = q - 1; i >= 1; --i) {
      if (alpha < th.alpha_i[i - 1]) {
        out.beta_status = i == q - 1 ? FieldStatus::zero() : FieldStatus::kernel_at_least(i + 1);
        break;
      }
    }
  }

  if (p <= q && d < dl) {
    // alpha'_j decreases: alpha > alpha'_{j-1} gives rk ker(gamma) < j.
    for (int j = 1; j <= p; ++j) {
      if (alpha > th.alpha_prime_j[j - 1]) {
        out.gamma_status = j == 1 ? FieldStatus::injective() : FieldStatus::kernel_at_most(j - 1);
        break;
      }
    }
  } else if (p <= q && d > dl) {
    for (int j = p - 1; j >= 1; --j) {
      if (alpha > th.alpha_prime_j[j - 1]) {
        out.gamma_status = j == p - 1 ? FieldStatus::zero() : FieldStatus::kernel_at_least(j + 1);
        break;
      }
    }
  }

  if (pr.finite) {
    const Rational& lo = *pr.range.lower();
    const Rational& hi = *pr.range.upper();
    std::vector<std::string> notes;
    if (alpha == hi && d < dl) {
      notes.push_back("rk(gamma) = min{p,q} at alpha = alpha_M since mu(V)-mu(W) < deg L");
      if (p <= q) out.gamma_status = FieldStatus::injective();
    }
    if (alpha == hi && d > dl) {
      notes.push_back("gamma = 0 at alpha = alpha_M since mu(V)-mu(W) > deg L");
      out.gamma_status = FieldStatus::zero();
    }
    if (alpha == lo && d > -dl) {
      notes.push_back("rk(beta) = min{p,q} at alpha = alpha_m since mu(V)-mu(W) > -deg L");
      if (q <= p) out.beta_status = FieldStatus::injective();
    }
    if (alpha == lo && d < -dl) {
      notes.push_back("beta = 0 at alpha = alpha_m since mu(V)-mu(W) < -deg L");
      out.beta_status = FieldStatus::zero();
    }
    if (!notes.empty()) {
      std::string joined = notes.front();
      for (std::size_t i = 1; i < notes.size(); ++i) joined += "; " + notes[i];
      out.extreme_note = joined;
    }
  }

  // A surjection onto a bundle of larger rank is impossible.
  if (p < q || out.gamma_status.kind == FieldStatus::Kind::Zero) {
    out.gamma_surjective = Tri::No;
  } else if (th.alpha_t && alpha > *th.alpha_t) {
    out.gamma_surjective = Tri::Yes;
  }
  if (q < p || out.beta_status.kind == FieldStatus::Kind::Zero) {
    out.beta_surjective = Tri::No;
  } else if (th.alpha_t_prime && alpha < *th.alpha_t_prime) {
    out.beta_surjective = Tri::Yes;
  }
  return out;
}

}  // namespace upq
