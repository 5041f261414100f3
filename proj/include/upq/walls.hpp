#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "upq/decompositions.hpp"
#include "upq/error.hpp"
#include "upq/interval.hpp"
#include "upq/range.hpp"
#include "upq/types.hpp"

namespace upq {

enum class WallStatus { Numerical, Decomposable };

inline std::string to_string(WallStatus s) {
  return s == WallStatus::Decomposable ? "decomposable" : "numerical";
}

/// A critical value of the stability parameter. Numerical walls satisfy the
/// integrality condition only; Decomposable ones also admit a valid splitting.
struct Wall {
  Rational alpha_c;
  std::vector<WitnessTriple> witnesses;
  WallStatus status = WallStatus::Numerical;
  std::vector<Decomposition> decompositions;

  friend bool operator==(const Wall&, const Wall&) = default;
};

/// Rank pairs (p', q') that can carry a witness: sub-ranks, not both zero, with
/// a rank ratio different from that of t.
inline std::vector<std::pair<int, int>> admissible_rank_pairs(const HiggsType& t) {
  std::vector<std::pair<int, int>> out;
  for (int ps = 0; ps <= t.p; ++ps) {
    for (int qs = 0; qs <= t.q; ++qs) {
      if (ps == 0 && qs == 0) continue;
      if (std::int64_t{ps} * t.q == std::int64_t{t.p} * qs) continue;
      out.emplace_back(ps, qs);
    }
  }
  return out;
}

/// alpha = ((a+b) n' - s (p+q)) / (p' q - p q'), or nullopt for an
/// inadmissible witness.
inline std::optional<Rational> wall_from_witness(const HiggsType& t, const WitnessTriple& w) {
  if (w.p_sub < 0 || w.q_sub < 0 || w.p_sub > t.p || w.q_sub > t.q) return std::nullopt;
  if (w.p_sub == 0 && w.q_sub == 0) return std::nullopt;
  const std::int64_t den = std::int64_t{w.p_sub} * t.q - std::int64_t{t.p} * w.q_sub;
  if (den == 0) return std::nullopt;
  const std::int64_t n_sub = w.p_sub + w.q_sub;
  return Rational(t.degree() * n_sub - w.s_sub * t.rank(), den);
}

inline void require_bounded(const ExtendedInterval& window) {
  if (!window.is_empty() && !window.is_bounded()) {
    throw Error(ErrorCode::WindowUnbounded, "window " + window.to_string() + " is unbounded");
  }
}

/// Every critical value in the window with all its witnesses, unrefined.
/// For fixed (p', q') the walls form an arithmetic progression in s, so the
/// admissible s are solved for directly.
inline std::vector<Wall> numerical_walls(const HiggsType& t, const ExtendedInterval& window) {
  require_bounded(window);
  if (window.is_empty()) return {};
  const Rational& lo = *window.lower();
  const Rational& hi = *window.upper();
  const std::int64_t n = t.rank();
  std::vector<std::pair<Rational, WitnessTriple>> hits;
  for (const auto& [ps, qs] : admissible_rank_pairs(t)) {
    const std::int64_t den = std::int64_t{ps} * t.q - std::int64_t{t.p} * qs;
    const std::int64_t k = t.degree() * (ps + qs);
    // alpha = (k - s n) / den lies in [lo, hi].
    const Rational x_lo = (Rational(k) - lo * Rational(den)) / Rational(n);
    const Rational x_hi = (Rational(k) - hi * Rational(den)) / Rational(n);
    const std::int64_t s_min = min(x_lo, x_hi).ceil().to_int64();
    const std::int64_t s_max = max(x_lo, x_hi).floor().to_int64();
    for (std::int64_t s = s_min; s <= s_max; ++s) {
      Rational alpha(k - s * n, den);
      if (!window.contains(alpha)) continue;
      hits.emplace_back(std::move(alpha), WitnessTriple{ps, qs, s});
    }
  }
  std::sort(hits.begin(), hits.end());
  std::vector<Wall> walls;
  for (auto& [alpha, w] : hits) {
    if (walls.empty() || walls.back().alpha_c != alpha) {
      walls.push_back(Wall{alpha, {}, WallStatus::Numerical, {}});
    }
    walls.back().witnesses.push_back(w);
  }
  return walls;
}

/// Attaches the equal-slope splittings of t at the wall and sets its status.
inline Wall refine_wall(const HiggsType& t, Wall wall, const CurveData& c) {
  wall.decompositions = enumerate_decompositions(t, c, wall.alpha_c);
  wall.status = wall.decompositions.empty() ? WallStatus::Numerical : WallStatus::Decomposable;
  return wall;
}

inline std::vector<Wall> enumerate_walls(const HiggsType& t, const CurveData& c,
                                         const ExtendedInterval& window) {
  std::vector<Wall> walls = numerical_walls(t, window);
  for (Wall& w : walls) w = refine_wall(t, std::move(w), c);
  return walls;
}

/// Nearest critical values strictly below and above alpha. Witnesses with
/// (p', q') = (p, 0) are spaced (p+q)/(pq) <= p+q apart, so both neighbours
/// always lie within distance p+q.
inline std::pair<Rational, Rational> adjacent_walls(const HiggsType& t, const Rational& alpha) {
  const Rational reach(t.rank());
  const auto walls =
      numerical_walls(t, ExtendedInterval::closed(alpha - reach, alpha + reach));
  std::optional<Rational> below, above;
  for (const Wall& w : walls) {
    if (w.alpha_c < alpha) below = w.alpha_c;
    if (w.alpha_c > alpha && !above) above = w.alpha_c;
  }
  return {*below, *above};
}

/// A maximal open wall-free interval of the window.
struct Chamber {
  ExtendedInterval interval;
  Rational sample_alpha;
  std::optional<FieldProfile> profile;  // nullopt when the sample is not admissible

  friend bool operator==(const Chamber&, const Chamber&) = default;
};

/// Chambers cut out of the window by the given critical values.
inline std::vector<Chamber> chambers_from_walls(const HiggsType& t, const CurveData& c,
                                                const ExtendedInterval& window,
                                                const std::vector<Wall>& walls) {
  require_bounded(window);
  if (window.is_empty()) return {};
  std::vector<Rational> cuts{*window.lower()};
  for (const Wall& w : walls) {
    if (w.alpha_c > cuts.back()) cuts.push_back(w.alpha_c);
  }
  if (*window.upper() > cuts.back()) cuts.push_back(*window.upper());
  const ParamRange pr = alpha_range(t, c);
  std::vector<Chamber> out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Chamber ch;
    ch.interval = ExtendedInterval::open(cuts[i], cuts[i + 1]);
    ch.sample_alpha = (cuts[i] + cuts[i + 1]) / 2;
    if (pr.range.contains(ch.sample_alpha)) ch.profile = field_profile(t, c, ch.sample_alpha);
    out.push_back(std::move(ch));
  }
  return out;
}

inline std::vector<Chamber> chambers(const HiggsType& t, const CurveData& c,
                                     const ExtendedInterval& window) {
  return chambers_from_walls(t, c, window, numerical_walls(t, window));
}

}  // namespace upq
