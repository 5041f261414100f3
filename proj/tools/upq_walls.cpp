// upq-walls: command-line front end for the wall/chamber analyzer.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "upq/upq.hpp"

namespace {

using upq::json_io::Json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitMismatch = 2;

struct CommonArgs {
  std::string type;
  std::int64_t genus = -1;
  bool canonical = false;
  std::optional<std::int64_t> deg_l;
  std::string window;
  std::string format = "text";
  std::string out;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

std::int64_t parse_int(const std::string& s) {
  const upq::Rational r = upq::Rational::parse(s);
  if (!r.is_integer()) throw upq::Error(upq::ErrorCode::ParseError, "'" + s + "' is not an integer");
  return r.to_int64();
}

upq::HiggsType parse_type(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 4) {
    throw upq::Error(upq::ErrorCode::ParseError, "--type expects P,Q,A,B, got '" + s + "'");
  }
  return upq::validate_type(parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2]),
                            parse_int(parts[3]), true);
}

std::optional<upq::ExtendedInterval> parse_window(const std::string& s) {
  if (s.empty()) return std::nullopt;
  const auto parts = split(s, ',');
  if (parts.size() != 2) {
    throw upq::Error(upq::ErrorCode::ParseError, "--window expects LO,HI, got '" + s + "'");
  }
  const upq::Rational lo = upq::Rational::parse(parts[0]);
  const upq::Rational hi = upq::Rational::parse(parts[1]);
  if (lo > hi) throw upq::Error(upq::ErrorCode::ParseError, "--window has LO > HI");
  return upq::ExtendedInterval::closed(lo, hi);
}

upq::CurveData parse_curve(const CommonArgs& a) {
  if (a.genus < 0) throw upq::Error(upq::ErrorCode::CurveError, "--genus must be nonnegative");
  if (a.canonical == a.deg_l.has_value()) {
    throw upq::Error(upq::ErrorCode::CurveError, "give exactly one of --canonical and --degL");
  }
  return a.canonical ? upq::CurveData::canonical_twist(a.genus)
                     : upq::CurveData::twisted(a.genus, *a.deg_l);
}

upq::Format parse_format(const std::string& f) {
  if (f == "json") return upq::Format::Json;
  if (f == "svg") return upq::Format::Svg;
  return upq::Format::Text;
}

void emit(const CommonArgs& a, const std::string& text) {
  if (a.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(a.out, std::ios::binary);
  if (!f) throw upq::Error(upq::ErrorCode::ParseError, "cannot write '" + a.out + "'");
  f << text;
}

void add_curve_options(CLI::App* sub, CommonArgs& a) {
  sub->add_option("--genus", a.genus, "Genus g of the curve")->required();
  auto* canon = sub->add_flag("--canonical", a.canonical, "Twist by the canonical bundle (deg L = 2g-2)");
  auto* degl = sub->add_option("--degL", a.deg_l, "Degree of the twisting line bundle L");
  canon->excludes(degl);
}

void add_type_options(CLI::App* sub, CommonArgs& a, bool with_format) {
  sub->add_option("--type", a.type, "Type P,Q,A,B")->required();
  add_curve_options(sub, a);
  sub->add_option("--window", a.window, "Finite window LO,HI (rationals as n or n/d)");
  if (with_format) {
    sub->add_option("--format", a.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "svg"}));
  }
  sub->add_option("--out", a.out, "Write output to PATH instead of stdout");
}

upq::ExtendedInterval resolve_window(const CommonArgs& a, const upq::HiggsType& t,
                                     const upq::CurveData& c) {
  if (auto w = parse_window(a.window)) return *w;
  return upq::default_window(t, c);
}

int run_analyze(const CommonArgs& a, bool self_check) {
  const auto t = parse_type(a.type);
  const auto c = parse_curve(a);
  upq::AnalyzeOptions opts;
  opts.self_check = self_check;
  const auto report = upq::analyze(t, c, parse_window(a.window), opts);
  emit(a, upq::render(report, parse_format(a.format)));
  return report.self_check && !report.self_check->passed ? kExitMismatch : kExitOk;
}

int run_walls(const CommonArgs& a) {
  const auto t = parse_type(a.type);
  const auto c = parse_curve(a);
  const auto window = resolve_window(a, t, c);
  const auto walls = upq::enumerate_walls(t, c, window);
  if (a.format == "json") {
    Json arr = Json::array();
    for (const auto& w : walls) {
      upq::WallReport wr{w, upq::codim_from_decompositions(t, w.decompositions),
                         upq::birationality_verdict(t, c, w.alpha_c, w.status)};
      arr.push_back(upq::json_io::wall(wr));
    }
    emit(a, arr.dump(2) + "\n");
    return kExitOk;
  }
  std::ostringstream o;
  if (walls.empty()) o << "walls: none in window\n";
  for (const auto& w : walls) {
    o << w.alpha_c << " " << upq::to_string(w.status) << " witnesses=" << w.witnesses.size()
      << " decompositions=" << w.decompositions.size() << "\n";
  }
  emit(a, o.str());
  return kExitOk;
}

int run_chambers(const CommonArgs& a) {
  const auto t = parse_type(a.type);
  const auto c = parse_curve(a);
  const auto window = resolve_window(a, t, c);
  const auto chambers = upq::chambers(t, c, window);
  if (a.format == "json") {
    Json arr = Json::array();
    for (const auto& ch : chambers) {
      arr.push_back({{"lo", ch.interval.lower()->to_string()},
                     {"hi", ch.interval.upper()->to_string()},
                     {"sample", ch.sample_alpha.to_string()},
                     {"profile", ch.profile ? upq::json_io::profile(*ch.profile) : Json(nullptr)}});
    }
    emit(a, arr.dump(2) + "\n");
    return kExitOk;
  }
  std::ostringstream o;
  for (const auto& ch : chambers) {
    o << ch.interval.to_string() << " sample " << ch.sample_alpha;
    if (ch.profile) {
      o << " beta " << ch.profile->beta_status.to_string() << " gamma "
        << ch.profile->gamma_status.to_string();
    }
    o << "\n";
  }
  emit(a, o.str());
  return kExitOk;
}

int run_verdict(const CommonArgs& a, const std::string& alpha_text, const std::string& wall_text) {
  const auto t = parse_type(a.type);
  const auto c = parse_curve(a);
  if (alpha_text.empty() == wall_text.empty()) {
    throw upq::Error(upq::ErrorCode::ParseError, "give exactly one of --alpha and --wall");
  }
  Json out;
  out["type"] = upq::json_io::type(t);
  if (!alpha_text.empty()) {
    const auto alpha = upq::Rational::parse(alpha_text);
    out["alpha"] = alpha.to_string();
    const auto range = upq::alpha_range(t, c);
    out["profile"] = range.range.contains(alpha)
                         ? upq::json_io::profile(upq::field_profile(t, c, alpha))
                         : Json(nullptr);
    out["smoothness"] = c.deg_l >= 2 * c.genus - 2
                            ? upq::json_io::verdict(upq::smoothness_verdict(t, c, alpha))
                            : Json(nullptr);
    out["irreducibility"] = upq::json_io::verdict(upq::irreducibility_verdict(t, c, alpha));
  } else {
    const auto alpha_c = upq::Rational::parse(wall_text);
    out["wall"] = alpha_c.to_string();
    const auto ds = upq::enumerate_decompositions(t, c, alpha_c);
    out["decompositions"] = upq::json_io::decompositions(ds);
    const auto cb = upq::codim_from_decompositions(t, ds);
    out["codim_bounds"] = cb ? Json::array({cb->bound_plus, cb->bound_minus}) : Json(nullptr);
    out["birational"] = upq::json_io::verdict(upq::birationality_verdict(t, c, alpha_c));
  }
  emit(a, out.dump(2) + "\n");
  return kExitOk;
}

template <class F>
void parallel_for(std::size_t n, F body) {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("UPQ_WALLS_THREADS")) {
    threads = static_cast<unsigned>(std::max(1L, std::strtol(env, nullptr, 10)));
  }
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) body(i);
  };
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

int run_check(const CommonArgs& a) {
  upq::oracle::OracleReport report;
  if (!a.type.empty()) {
    const auto t = parse_type(a.type);
    const auto c = parse_curve(a);
    report = upq::check_type(t, c, resolve_window(a, t, c));
    report.merge(upq::verify_identities({{t, c}}));
  } else {
    const auto sweep = upq::standard_sweep();
    std::vector<upq::oracle::OracleReport> parts(sweep.size());
    parallel_for(sweep.size(), [&](std::size_t i) {
      const auto& [t, c] = sweep[i];
      parts[i] = upq::check_type(t, c, upq::sweep_window(t, c));
    });
    report = upq::verify_identities(sweep);
    for (const auto& p : parts) report.merge(p);
  }
  if (a.format == "json") {
    emit(a, upq::json_io::oracle_report(report).dump(2) + "\n");
  } else {
    std::ostringstream o;
    o << (report.passed ? "passed" : "FAILED") << ": " << report.checked << " checks, "
      << report.mismatches.size() << " mismatches\n";
    for (const auto& m : report.mismatches) {
      o << "  " << m.description << ": expected " << m.expected << ", got " << m.actual << "\n";
    }
    emit(a, o.str());
  }
  return report.passed ? kExitOk : kExitMismatch;
}

int run_sweep(const CommonArgs& a, int rmax, std::int64_t dmax) {
  if (rmax < 1 || dmax < 0) {
    throw upq::Error(upq::ErrorCode::ParseError, "--ranks must be >= 1 and --degrees >= 0");
  }
  const auto c = parse_curve(a);
  const auto window = parse_window(a.window);
  const auto items = upq::type_sweep(rmax, dmax, {c});
  std::vector<std::string> lines(items.size());
  parallel_for(items.size(), [&](std::size_t i) {
    const auto& t = items[i].first;
    try {
      lines[i] = upq::json_io::report(upq::analyze(t, c, window)).dump();
    } catch (const upq::Error& e) {
      Json err{{"type", upq::json_io::type(t)},
               {"error", std::string(upq::to_string(e.code()))},
               {"message", e.what()}};
      lines[i] = err.dump();
    }
  });
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  emit(a, out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact wall and chamber analysis for twisted U(p,q)-Higgs bundle moduli"};
  app.require_subcommand(1);

  CommonArgs args;
  bool self_check = false;
  auto* analyze = app.add_subcommand("analyze", "Full analysis report");
  add_type_options(analyze, args, true);
  analyze->add_flag("--self-check", self_check, "Cross-check the engine against the oracle");

  auto* walls = app.add_subcommand("walls", "Critical values in the window");
  add_type_options(walls, args, true);

  auto* chambers = app.add_subcommand("chambers", "Chambers in the window with field profiles");
  add_type_options(chambers, args, true);

  std::string alpha_text, wall_text;
  auto* verdict = app.add_subcommand("verdict", "Theorem verdicts at a parameter or a wall");
  add_type_options(verdict, args, false);
  verdict->add_option("--alpha", alpha_text, "Parameter value");
  verdict->add_option("--wall", wall_text, "Critical value");

  auto* check = app.add_subcommand("check", "Oracle suite (one type, or the standard sweep)");
  check->add_option("--type", args.type, "Type P,Q,A,B (omit for the standard sweep)");
  check->add_option("--genus", args.genus, "Genus g of the curve");
  auto* ccanon = check->add_flag("--canonical", args.canonical, "L = K");
  auto* cdegl = check->add_option("--degL", args.deg_l, "deg L");
  ccanon->excludes(cdegl);
  check->add_option("--window", args.window, "Finite window LO,HI");
  check->add_option("--format", args.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  check->add_option("--out", args.out, "Output path");

  int rmax = 0;
  std::int64_t dmax = 0;
  auto* sweep = app.add_subcommand("sweep", "Reports for every type in a box, as JSON lines");
  sweep->add_option("--ranks", rmax, "Maximum rank for p and q")->required();
  sweep->add_option("--degrees", dmax, "Maximum |a| and |b|")->required();
  add_curve_options(sweep, args);
  sweep->add_option("--window", args.window, "Finite window LO,HI (required for p = q types)");
  sweep->add_option("--out", args.out, "Output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*analyze) return run_analyze(args, self_check);
    if (*walls) return run_walls(args);
    if (*chambers) return run_chambers(args);
    if (*verdict) return run_verdict(args, alpha_text, wall_text);
    if (*check) {
      if (!args.type.empty() && args.genus < 0) {
        throw upq::Error(upq::ErrorCode::CurveError, "--type needs --genus and a twist");
      }
      return run_check(args);
    }
    if (*sweep) return run_sweep(args, rmax, dmax);
  } catch (const upq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
