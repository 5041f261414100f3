#pragma once

#include <json.hpp>

#include <string>

#include "upq/report.hpp"

namespace upq::json_io {

using Json = nlohmann::ordered_json;

inline Json rat(const Rational& r) { return r.to_string(); }
inline Rational rat(const Json& j) { return Rational::parse(j.get<std::string>()); }

inline Json opt_rat(const std::optional<Rational>& r) { return r ? rat(*r) : Json(nullptr); }
inline std::optional<Rational> opt_rat(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return rat(j);
}

inline Json interval(const ExtendedInterval& i) {
  return Json{{"lo", i.lower() ? rat(*i.lower()) : Json("-inf")},
              {"hi", i.upper() ? rat(*i.upper()) : Json("+inf")},
              {"lo_closed", i.lower_closed()},
              {"hi_closed", i.upper_closed()}};
}
inline ExtendedInterval interval(const Json& j) {
  const auto lo = j.at("lo").get<std::string>();
  const auto hi = j.at("hi").get<std::string>();
  return ExtendedInterval::make(lo == "-inf" ? std::nullopt : std::optional(Rational::parse(lo)),
                                hi == "+inf" ? std::nullopt : std::optional(Rational::parse(hi)),
                                j.at("lo_closed").get<bool>(), j.at("hi_closed").get<bool>());
}

inline Json type(const HiggsType& t) { return Json{{"p", t.p}, {"q", t.q}, {"a", t.a}, {"b", t.b}}; }
inline HiggsType type(const Json& j) {
  return {j.at("p").get<int>(), j.at("q").get<int>(), j.at("a").get<std::int64_t>(),
          j.at("b").get<std::int64_t>()};
}

template <class T, class F>
Json list(const std::vector<T>& v, F f) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(f(x));
  return out;
}
template <class T, class F>
std::vector<T> list(const Json& j, F f) {
  std::vector<T> out;
  for (const auto& x : j) out.push_back(f(x));
  return out;
}

inline Json profile(const FieldProfile& p) {
  return Json{{"beta_status", p.beta_status.to_string()},
              {"gamma_status", p.gamma_status.to_string()},
              {"beta_surjective", to_string(p.beta_surjective)},
              {"gamma_surjective", to_string(p.gamma_surjective)},
              {"extreme_note", p.extreme_note ? Json(*p.extreme_note) : Json(nullptr)}};
}
inline FieldProfile profile(const Json& j) {
  FieldProfile p;
  p.beta_status = FieldStatus::parse(j.at("beta_status").get<std::string>());
  p.gamma_status = FieldStatus::parse(j.at("gamma_status").get<std::string>());
  p.beta_surjective = parse_tri(j.at("beta_surjective").get<std::string>());
  p.gamma_surjective = parse_tri(j.at("gamma_surjective").get<std::string>());
  if (!j.at("extreme_note").is_null()) p.extreme_note = j.at("extreme_note").get<std::string>();
  return p;
}

inline Json verdict(const Verdict& v) {
  Json conds = Json::array();
  for (const auto& [name, ok] : v.conditions) conds.push_back(Json::array({name, ok}));
  return Json{{"applicable", v.applicable},
              {"conclusion", to_string(v.conclusion)},
              {"window", interval(v.window_used)},
              {"conditions", conds},
              {"notes", v.notes},
              {"dimension", v.dimension ? Json(*v.dimension) : Json(nullptr)}};
}
inline Verdict verdict(const Json& j) {
  Verdict v;
  v.applicable = j.at("applicable").get<bool>();
  v.conclusion = parse_conclusion(j.at("conclusion").get<std::string>());
  v.window_used = interval(j.at("window"));
  for (const auto& c : j.at("conditions")) {
    v.conditions.emplace_back(c.at(0).get<std::string>(), c.at(1).get<bool>());
  }
  v.notes = j.at("notes").get<std::vector<std::string>>();
  if (!j.at("dimension").is_null()) v.dimension = j.at("dimension").get<std::int64_t>();
  return v;
}

inline Json decomposition(const Decomposition& d) {
  return Json{{"t1", type(d.t1)},
              {"t2", type(d.t2)},
              {"chi_12", d.chi_12},
              {"chi_21", d.chi_21},
              {"same_sign_ranks", d.same_sign_ranks}};
}
inline Decomposition decomposition(const Json& j) {
  return {type(j.at("t1")), type(j.at("t2")), j.at("chi_12").get<std::int64_t>(),
          j.at("chi_21").get<std::int64_t>(), j.at("same_sign_ranks").get<bool>()};
}
inline Json decompositions(const std::vector<Decomposition>& ds) {
  return list(ds, [](const Decomposition& d) { return decomposition(d); });
}

inline Json wall(const WallReport& w) {
  Json witnesses = Json::array();
  for (const auto& x : w.wall.witnesses) witnesses.push_back(Json::array({x.p_sub, x.q_sub, x.s_sub}));
  Json out{{"alpha", rat(w.wall.alpha_c)},
           {"status", to_string(w.wall.status)},
           {"witnesses", witnesses},
           {"decompositions", decompositions(w.wall.decompositions)}};
  out["codim_bounds"] =
      w.codim ? Json::array({w.codim->bound_plus, w.codim->bound_minus}) : Json(nullptr);
  out["codim_notes"] = w.codim ? Json(w.codim->notes) : Json::array();
  out["birational"] = verdict(w.birational);
  return out;
}
inline WallReport wall(const Json& j) {
  WallReport w;
  w.wall.alpha_c = rat(j.at("alpha"));
  w.wall.status = j.at("status").get<std::string>() == "decomposable" ? WallStatus::Decomposable
                                                                      : WallStatus::Numerical;
  for (const auto& x : j.at("witnesses")) {
    w.wall.witnesses.push_back({x.at(0).get<int>(), x.at(1).get<int>(), x.at(2).get<std::int64_t>()});
  }
  w.wall.decompositions = list<Decomposition>(j.at("decompositions"), [](const Json& x) {
    return decomposition(x);
  });
  if (!j.at("codim_bounds").is_null()) {
    w.codim = CodimBounds{j.at("codim_bounds").at(0).get<std::int64_t>(),
                          j.at("codim_bounds").at(1).get<std::int64_t>(),
                          j.at("codim_notes").get<std::vector<std::string>>()};
  }
  w.birational = verdict(j.at("birational"));
  return w;
}

inline Json chamber(const ChamberReport& c) {
  return Json{{"lo", rat(*c.chamber.interval.lower())},
              {"hi", rat(*c.chamber.interval.upper())},
              {"sample", rat(c.chamber.sample_alpha)},
              {"profile", c.chamber.profile ? profile(*c.chamber.profile) : Json(nullptr)},
              {"verdicts",
               {{"smoothness", c.smoothness ? verdict(*c.smoothness) : Json(nullptr)},
                {"irreducibility", verdict(c.irreducibility)}}}};
}
inline ChamberReport chamber(const Json& j) {
  ChamberReport c;
  c.chamber.interval = ExtendedInterval::open(rat(j.at("lo")), rat(j.at("hi")));
  c.chamber.sample_alpha = rat(j.at("sample"));
  if (!j.at("profile").is_null()) c.chamber.profile = profile(j.at("profile"));
  const Json& v = j.at("verdicts");
  if (!v.at("smoothness").is_null()) c.smoothness = verdict(v.at("smoothness"));
  c.irreducibility = verdict(v.at("irreducibility"));
  return c;
}

inline Json oracle_report(const oracle::OracleReport& r) {
  Json mism = Json::array();
  for (const auto& m : r.mismatches) {
    mism.push_back({{"description", m.description}, {"expected", m.expected}, {"actual", m.actual}});
  }
  return Json{{"checked", r.checked}, {"passed", r.passed}, {"mismatches", mism}};
}
inline oracle::OracleReport oracle_report(const Json& j) {
  oracle::OracleReport r;
  r.checked = j.at("checked").get<std::size_t>();
  r.passed = j.at("passed").get<bool>();
  for (const auto& m : j.at("mismatches")) {
    r.mismatches.push_back({m.at("description").get<std::string>(),
                            m.at("expected").get<std::string>(), m.at("actual").get<std::string>()});
  }
  return r;
}

inline Json vanishing(const VanishingWindow& w) {
  Json sources = Json::array();
  for (auto s : w.sources) sources.push_back(to_string(s));
  return Json{{"intervals", list(w.intervals, [](const ExtendedInterval& i) { return interval(i); })},
              {"stable_only", w.stable_only},
              {"sources", sources}};
}
inline VanishingWindow vanishing(const Json& j) {
  VanishingWindow w;
  w.intervals = list<ExtendedInterval>(j.at("intervals"), [](const Json& x) { return interval(x); });
  w.stable_only = j.at("stable_only").get<bool>();
  for (const auto& s : j.at("sources")) w.sources.push_back(parse_window_source(s.get<std::string>()));
  return w;
}

inline Json report(const AnalysisReport& r) {
  const auto& inv = r.invariants;
  Json out;
  out["type"] = type(r.type);
  out["curve"] = {{"genus", r.curve.genus}, {"deg_l", r.curve.deg_l}, {"canonical", r.curve.canonical}};
  out["window"] = interval(r.window);
  out["invariants"] = {
      {"mu", rat(inv.mu)},
      {"toledo", rat(inv.toledo)},
      {"dimension", inv.dimension},
      {"mw_at_zero", Json::array({rat(inv.mw_lo), rat(inv.mw_hi)})},
      {"genericity",
       {{"coprime_rank_sum_exists_m", inv.genericity.coprime_rank_sum_exists_m},
        {"coprime_pq", inv.genericity.coprime_pq},
        {"alpha_independent_possible", inv.genericity.alpha_independent_possible}}},
      {"toledo_case", to_string(inv.toledo_range.which)},
      {"toledo_interval",
       inv.toledo_range.interval ? interval(*inv.toledo_range.interval) : Json(nullptr)}};
  Json range = interval(r.range.range);
  range["finite"] = r.range.finite;
  out["range"] = range;
  out["thresholds"] = {{"alpha_i", list(r.thresholds.alpha_i, [](const Rational& x) { return rat(x); })},
                       {"alpha_prime_j",
                        list(r.thresholds.alpha_prime_j, [](const Rational& x) { return rat(x); })},
                       {"alpha_t", opt_rat(r.thresholds.alpha_t)},
                       {"alpha_t_prime", opt_rat(r.thresholds.alpha_t_prime)}};
  out["h2_window"] = r.h2_window ? vanishing(*r.h2_window) : Json(nullptr);
  out["walls"] = list(r.walls, [](const WallReport& w) { return wall(w); });
  out["chambers"] = list(r.chambers, [](const ChamberReport& c) { return chamber(c); });
  out["self_check"] = r.self_check ? oracle_report(*r.self_check) : Json(nullptr);
  return out;
}

inline AnalysisReport report(const Json& j) {
  AnalysisReport r;
  r.type = type(j.at("type"));
  const Json& c = j.at("curve");
  r.curve = {c.at("genus").get<std::int64_t>(), c.at("deg_l").get<std::int64_t>(),
             c.at("canonical").get<bool>()};
  r.window = interval(j.at("window"));
  const Json& inv = j.at("invariants");
  r.invariants.mu = rat(inv.at("mu"));
  r.invariants.toledo = rat(inv.at("toledo"));
  r.invariants.dimension = inv.at("dimension").get<std::int64_t>();
  r.invariants.mw_lo = rat(inv.at("mw_at_zero").at(0));
  r.invariants.mw_hi = rat(inv.at("mw_at_zero").at(1));
  const Json& g = inv.at("genericity");
  r.invariants.genericity = {g.at("coprime_rank_sum_exists_m").get<bool>(),
                             g.at("coprime_pq").get<bool>(),
                             g.at("alpha_independent_possible").get<bool>()};
  r.invariants.toledo_range.which = parse_toledo_case(inv.at("toledo_case").get<std::string>());
  if (!inv.at("toledo_interval").is_null()) {
    r.invariants.toledo_range.interval = interval(inv.at("toledo_interval"));
  }
  r.range = {interval(j.at("range")), j.at("range").at("finite").get<bool>()};
  const Json& th = j.at("thresholds");
  auto rats = [](const Json& x) { return list<Rational>(x, [](const Json& y) { return rat(y); }); };
  r.thresholds = {rats(th.at("alpha_i")), rats(th.at("alpha_prime_j")), opt_rat(th.at("alpha_t")),
                  opt_rat(th.at("alpha_t_prime"))};
  if (!j.at("h2_window").is_null()) r.h2_window = vanishing(j.at("h2_window"));
  r.walls = list<WallReport>(j.at("walls"), [](const Json& x) { return wall(x); });
  r.chambers = list<ChamberReport>(j.at("chambers"), [](const Json& x) { return chamber(x); });
  if (!j.at("self_check").is_null()) r.self_check = oracle_report(j.at("self_check"));
  return r;
}

}  // namespace upq::json_io

namespace upq {

inline std::string render_json(const AnalysisReport& r, int indent = 2) {
  return json_io::report(r).dump(indent) + "\n";
}

/// Inverse of render_json. Malformed input raises ParseError.
inline AnalysisReport parse_report(const std::string& text) {
  try {
    return json_io::report(json_io::Json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace upq
