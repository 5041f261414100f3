#pragma once

#include <optional>
#include <vector>

#include "upq/error.hpp"
#include "upq/invariants.hpp"
#include "upq/oracle.hpp"
#include "upq/parameter_space.hpp"
#include "upq/self_check.hpp"
#include "upq/theorem_engine.hpp"

namespace upq {

struct InvariantSummary {
  Rational mu;
  Rational toledo;
  std::int64_t dimension = 0;
  Rational mw_lo;  // Milnor-Wood interval at alpha = 0
  Rational mw_hi;
  GenericityFlags genericity;
  ToledoRange toledo_range;

  friend bool operator==(const InvariantSummary&, const InvariantSummary&) = default;
};

struct WallReport {
  Wall wall;
  std::optional<CodimBounds> codim;
  Verdict birational;

  friend bool operator==(const WallReport&, const WallReport&) = default;
};

struct ChamberReport {
  Chamber chamber;
  std::optional<Verdict> smoothness;  // nullopt when deg L < 2g-2
  Verdict irreducibility;

  friend bool operator==(const ChamberReport&, const ChamberReport&) = default;
};

struct AnalysisReport {
  HiggsType type;
  CurveData curve;
  ExtendedInterval window;
  InvariantSummary invariants;
  ParamRange range;
  Thresholds thresholds;
  std::optional<VanishingWindow> h2_window;
  std::vector<WallReport> walls;
  std::vector<ChamberReport> chambers;
  std::optional<oracle::OracleReport> self_check;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct AnalyzeOptions {
  bool self_check = false;
  bool decomposition_detail = true;
};

/// Window used when none is given: the admissible range, which only exists
/// for p != q.
inline ExtendedInterval default_window(const HiggsType& t, const CurveData& c) {
  const ParamRange r = alpha_range(t, c);
  if (!r.finite) {
    throw Error(ErrorCode::WindowRequired,
                "type " + t.to_string() + " has p = q and an unbounded range; pass a window");
  }
  return r.range;
}

inline AnalysisReport analyze(const HiggsType& type, const CurveData& c,
                              std::optional<ExtendedInterval> window,
                              const AnalyzeOptions& opts = {}) {
  const HiggsType t = validate_type(type.p, type.q, type.a, type.b, true);
  if (!c.is_valid()) throw Error(ErrorCode::CurveError, "inconsistent curve data");
  if (c.deg_l < 1) throw Error(ErrorCode::DegLNonpositive, "deg L must be at least 1");
  AnalysisReport r;
  r.type = t;
  r.curve = c;
  r.window = window ? *window : default_window(t, c);
  require_bounded(r.window);

  const MwInterval mw0 = mw_interval(t.p, t.q, Rational(0), c);
  r.invariants = {mu(t),      toledo(t),     expected_dimension(t, c), mw0.tau_min,
                  mw0.tau_max, genericity(t), toledo_meaningful_range(t, c)};
  r.range = alpha_range(t, c);
  r.thresholds = thresholds(t, c);
  if (c.deg_l >= 2 * c.genus - 2) r.h2_window = h2_vanishing_window(t, c);

  const std::vector<Wall> walls = enumerate_walls(t, c, r.window);
  for (const Wall& w : walls) {
    WallReport wr;
    wr.wall = w;
    wr.codim = codim_from_decompositions(t, w.decompositions);
    wr.birational = birationality_verdict(t, c, w.alpha_c, w.status);
    if (!opts.decomposition_detail) wr.wall.decompositions.clear();
    r.walls.push_back(std::move(wr));
  }
  for (Chamber& ch : chambers_from_walls(t, c, r.window, walls)) {
    ChamberReport cr;
    if (r.h2_window) cr.smoothness = smoothness_verdict(t, c, ch.sample_alpha);
    cr.irreducibility = irreducibility_verdict(t, c, ch.sample_alpha);
    cr.chamber = std::move(ch);
    r.chambers.push_back(std::move(cr));
  }
  if (opts.self_check) {
    oracle::OracleReport sc = check_type(t, c, r.window, walls);
    sc.merge(verify_identities({{t, c}}));
    r.self_check = std::move(sc);
  }
  return r;
}

}  // namespace upq
