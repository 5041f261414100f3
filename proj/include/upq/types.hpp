#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <tuple>

#include "upq/error.hpp"
#include "upq/interval.hpp"
#include "upq/rational.hpp"

namespace upq {

/// Discrete type (p, q, a, b) = (rk V, rk W, deg V, deg W) of a twisted
/// U(p,q)-Higgs bundle, or of a sub/quotient object. A zero-rank summand
/// carries zero degree.
struct HiggsType {
  int p = 0;
  int q = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;

  int rank() const noexcept { return p + q; }
  std::int64_t degree() const noexcept { return a + b; }
  bool is_main() const noexcept { return p >= 1 && q >= 1; }

  /// Direct sum (componentwise addition).
  friend HiggsType operator+(const HiggsType& x, const HiggsType& y) {
    return {x.p + y.p, x.q + y.q, x.a + y.a, x.b + y.b};
  }
  friend HiggsType operator-(const HiggsType& x, const HiggsType& y) {
    return {x.p - y.p, x.q - y.q, x.a - y.a, x.b - y.b};
  }
  friend auto operator<=>(const HiggsType&, const HiggsType&) = default;

  std::string to_string() const {
    return "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(a) + "," +
           std::to_string(b) + ")";
  }
};

/// True when (p,q,a,b) satisfies every type invariant (no exceptions thrown).
inline bool is_valid_type(std::int64_t p, std::int64_t q, std::int64_t a, std::int64_t b,
                          bool require_main = false) noexcept {
  if (p < 0 || q < 0 || (p == 0 && q == 0)) return false;
  if (require_main && (p == 0 || q == 0)) return false;
  if ((p == 0 && a != 0) || (q == 0 && b != 0)) return false;
  return true;
}

inline bool is_valid_type(const HiggsType& t, bool require_main = false) noexcept {
  return is_valid_type(t.p, t.q, t.a, t.b, require_main);
}

inline HiggsType validate_type(std::int64_t p, std::int64_t q, std::int64_t a, std::int64_t b,
                               bool require_main) {
  constexpr std::int64_t kMaxRank = 1 << 20;
  if (p < 0 || q < 0) throw Error(ErrorCode::RankError, "ranks must be nonnegative");
  if (p == 0 && q == 0) throw Error(ErrorCode::RankError, "ranks (p,q) = (0,0)");
  if (p > kMaxRank || q > kMaxRank) throw Error(ErrorCode::RankError, "rank too large");
  if (require_main && (p == 0 || q == 0)) {
    throw Error(ErrorCode::RankError, "a main type needs p >= 1 and q >= 1");
  }
  if (p == 0 && a != 0) throw Error(ErrorCode::DegreeError, "p = 0 forces a = 0");
  if (q == 0 && b != 0) throw Error(ErrorCode::DegreeError, "q = 0 forces b = 0");
  return {static_cast<int>(p), static_cast<int>(q), a, b};
}

/// Genus of the curve and degree of the twisting line bundle L.
struct CurveData {
  std::int64_t genus = 0;
  std::int64_t deg_l = 0;
  bool canonical = false;

  /// L = K, so deg L = 2g - 2.
  static CurveData canonical_twist(std::int64_t genus) {
    if (genus < 0) throw Error(ErrorCode::CurveError, "genus must be nonnegative");
    return {genus, 2 * genus - 2, true};
  }

  static CurveData twisted(std::int64_t genus, std::int64_t deg_l) {
    if (genus < 0) throw Error(ErrorCode::CurveError, "genus must be nonnegative");
    return {genus, deg_l, false};
  }

  bool is_valid() const noexcept { return genus >= 0 && (!canonical || deg_l == 2 * genus - 2); }

  friend bool operator==(const CurveData&, const CurveData&) = default;
};

/// Rank data (p', q') and degree sum s = a' + b' of a sub-type that can
/// equalize alpha-slopes with the ambient type.
struct WitnessTriple {
  int p_sub = 0;
  int q_sub = 0;
  std::int64_t s_sub = 0;

  friend auto operator<=>(const WitnessTriple&, const WitnessTriple&) = default;
};

/// An unordered equal-slope splitting t = t1 + t2, stored in canonical
/// orientation (see canonical_orientation). Euler characteristics follow the
/// convention chi_ij = chi(t_j, t_i), so chi_21 = chi(t1, t2).
struct Decomposition {
  HiggsType t1;
  HiggsType t2;
  std::int64_t chi_12 = 0;
  std::int64_t chi_21 = 0;
  bool same_sign_ranks = false;

  friend auto operator<=>(const Decomposition&, const Decomposition&) = default;
};

/// Orientation rule for unordered splittings: smaller total rank first, then
/// larger p, then larger a, then larger b.
inline bool canonical_orientation(const HiggsType& t1, const HiggsType& t2) {
  return std::make_tuple(t1.rank(), -t1.p, -t1.a, -t1.b) <
         std::make_tuple(t2.rank(), -t2.p, -t2.a, -t2.b);
}

inline bool same_sign_ranks(const HiggsType& t1, const HiggsType& t2) {
  const int d1 = t1.p - t1.q;
  const int d2 = t2.p - t2.q;
  return (d1 >= 0 && d2 >= 0) || (d1 <= 0 && d2 <= 0);
}

}  // namespace upq
