#pragma once

#include <sstream>
#include <string>

#include "upq/report.hpp"
#include "upq/report_json.hpp"

namespace upq {

enum class Format { Text, Json, Svg };

namespace detail {

inline std::string join_rats(const std::vector<Rational>& v) {
  if (v.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].to_string();
  return out;
}

inline std::string opt_str(const std::optional<Rational>& r) { return r ? r->to_string() : "-"; }

inline std::string verdict_line(const Verdict& v) {
  std::string out = v.applicable ? to_string(v.conclusion) : "not applicable";
  out += "  window " + v.window_used.to_string();
  for (const auto& [name, ok] : v.conditions) {
    if (!ok) out += "  [fails: " + name + "]";
  }
  return out;
}

}  // namespace detail

/// Human-readable report. The layout is not a stable interface.
inline std::string render_text(const AnalysisReport& r) {
  std::ostringstream o;
  o << std::boolalpha;
  const auto& inv = r.invariants;
  o << "type " << r.type.to_string() << "  genus " << r.curve.genus << "  deg L " << r.curve.deg_l
    << (r.curve.canonical ? " (L = K)" : "") << "\n";
  o << "window " << r.window.to_string() << "\n";
  o << "mu " << inv.mu << "  toledo " << inv.toledo << "  dimension " << inv.dimension << "\n";
  o << "MW interval at alpha=0: [" << inv.mw_lo << ", " << inv.mw_hi << "]\n";
  o << "genericity: coprime_rank_sum_exists_m=" << inv.genericity.coprime_rank_sum_exists_m
    << " coprime_pq=" << inv.genericity.coprime_pq
    << " alpha_independent_possible=" << inv.genericity.alpha_independent_possible << "\n";
  o << "toledo range: " << to_string(inv.toledo_range.which);
  if (inv.toledo_range.interval) o << " " << inv.toledo_range.interval->to_string();
  o << "\n";
  o << "alpha range: " << r.range.range.to_string() << "\n";
  o << "thresholds: alpha_i = " << detail::join_rats(r.thresholds.alpha_i)
    << "; alpha'_j = " << detail::join_rats(r.thresholds.alpha_prime_j)
    << "; alpha_t = " << detail::opt_str(r.thresholds.alpha_t)
    << "; alpha_t' = " << detail::opt_str(r.thresholds.alpha_t_prime) << "\n";
  if (r.h2_window) {
    o << "H2 vanishing:";
    if (r.h2_window->intervals.empty()) o << " {}";
    for (const auto& i : r.h2_window->intervals) o << " " << i.to_string();
    if (r.h2_window->stable_only) o << " (stable objects only)";
    o << "\n";
  } else {
    o << "H2 vanishing: hypothesis deg L >= 2g-2 fails\n";
  }

  if (r.walls.empty()) {
    o << "walls: none in window\n";
  } else {
    o << "walls:\n";
  }
  for (const WallReport& w : r.walls) {
    o << "  " << w.wall.alpha_c << "  " << to_string(w.wall.status) << "  witnesses";
    for (const auto& x : w.wall.witnesses) o << " (" << x.p_sub << "," << x.q_sub << "," << x.s_sub << ")";
    o << "\n";
    for (const Decomposition& d : w.wall.decompositions) {
      o << "    " << d.t1.to_string() << " + " << d.t2.to_string() << "  chi(t1,t2)=" << d.chi_21
        << "  chi(t2,t1)=" << d.chi_12 << (d.same_sign_ranks ? "" : "  (mixed signs)") << "\n";
    }
    if (w.codim) {
      o << "    codim bounds: S+ >= " << w.codim->bound_plus << ", S- >= " << w.codim->bound_minus
        << "\n";
      for (const auto& n : w.codim->notes) o << "    note: " << n << "\n";
    }
    o << "    birationality: " << detail::verdict_line(w.birational) << "\n";
    for (const auto& n : w.birational.notes) o << "      " << n << "\n";
  }

  o << "chambers:" << (r.chambers.empty() ? " none" : "") << "\n";
  for (const ChamberReport& c : r.chambers) {
    o << "  " << c.chamber.interval.to_string() << "  sample " << c.chamber.sample_alpha << "\n";
    if (c.chamber.profile) {
      const FieldProfile& p = *c.chamber.profile;
      o << "    beta " << p.beta_status.to_string() << " (surjective " << to_string(p.beta_surjective)
        << "), gamma " << p.gamma_status.to_string() << " (surjective "
        << to_string(p.gamma_surjective) << ")\n";
      if (p.extreme_note) o << "    " << *p.extreme_note << "\n";
    } else {
      o << "    sample outside the admissible range\n";
    }
    if (c.smoothness) o << "    smoothness: " << detail::verdict_line(*c.smoothness) << "\n";
    o << "    irreducibility: " << detail::verdict_line(c.irreducibility) << "\n";
  }

  if (r.self_check) {
    o << "self-check: " << (r.self_check->passed ? "passed" : "FAILED") << " ("
      << r.self_check->checked << " checks, " << r.self_check->mismatches.size()
      << " mismatches)\n";
    for (const auto& m : r.self_check->mismatches) {
      o << "  " << m.description << ": expected " << m.expected << ", got " << m.actual << "\n";
    }
  }
  return o.str();
}

/// Number-line diagram of the window. Coordinates are integers computed by
/// exact rational scaling.
inline std::string render_svg(const AnalysisReport& r) {
  constexpr std::int64_t kWidth = 800, kHeight = 200, kMargin = 40, kAxisY = 100;
  const Rational lo = r.window.lower() ? *r.window.lower() : Rational(0);
  const Rational hi = r.window.upper() ? *r.window.upper() : Rational(1);
  const Rational span = hi > lo ? hi - lo : Rational(1);
  auto x_of = [&](const Rational& a) {
    const Rational pos = (a - lo) * Rational(kWidth - 2 * kMargin) / span;
    return kMargin + pos.floor().to_int64();
  };
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
    << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  o << "  <title>" << r.type.to_string() << " on " << r.window.to_string() << "</title>\n";
  o << "  <rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
    << "\" fill=\"white\"/>\n";
  if (r.h2_window) {
    for (const auto& i : r.h2_window->intervals) {
      const ExtendedInterval part = i.intersect(r.window);
      if (part.is_empty() || !part.is_bounded()) continue;
      const std::int64_t x0 = x_of(*part.lower()), x1 = x_of(*part.upper());
      o << "  <rect class=\"h2-window\" x=\"" << x0 << "\" y=\"" << kAxisY - 30 << "\" width=\""
        << x1 - x0 << "\" height=\"60\" fill=\"#cfe3f5\"/>\n";
    }
  }
  o << "  <line class=\"axis\" x1=\"" << kMargin << "\" y1=\"" << kAxisY << "\" x2=\""
    << kWidth - kMargin << "\" y2=\"" << kAxisY << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  o << "  <text x=\"" << kMargin << "\" y=\"" << kAxisY + 50 << "\" font-size=\"12\">" << lo
    << "</text>\n";
  o << "  <text x=\"" << kWidth - kMargin << "\" y=\"" << kAxisY + 50
    << "\" font-size=\"12\" text-anchor=\"end\">" << hi << "</text>\n";
  for (const WallReport& w : r.walls) {
    const std::int64_t x = x_of(w.wall.alpha_c);
    const bool solid = w.wall.status == WallStatus::Decomposable;
    o << "  <line class=\"wall " << to_string(w.wall.status) << "\" x1=\"" << x << "\" y1=\""
      << kAxisY - 35 << "\" x2=\"" << x << "\" y2=\"" << kAxisY + 35
      << "\" stroke=\"#b22222\" stroke-width=\"2\"" << (solid ? "" : " stroke-dasharray=\"5 4\"")
      << "/>\n";
    o << "  <text x=\"" << x << "\" y=\"" << kAxisY - 42
      << "\" font-size=\"12\" text-anchor=\"middle\">" << w.wall.alpha_c << "</text>\n";
  }
  for (std::size_t i = 0; i < r.chambers.size(); ++i) {
    const auto& c = r.chambers[i].chamber;
    o << "  <text class=\"chamber\" x=\"" << x_of(c.sample_alpha) << "\" y=\"" << kAxisY + 20
      << "\" font-size=\"11\" text-anchor=\"middle\">C" << i + 1 << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

inline std::string render(const AnalysisReport& r, Format f) {
  switch (f) {
    case Format::Json: return render_json(r);
    case Format::Svg: return render_svg(r);
    case Format::Text: break;
  }
  return render_text(r);
}

}  // namespace upq
