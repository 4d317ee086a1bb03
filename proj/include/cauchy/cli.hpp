#pragma once

// Command-line front end: exact parsing of polynomials, points and loops,
// and the subcommand dispatcher. Output is one JSON object per run.

#include "cauchy/counting.hpp"
#include "cauchy/isolate.hpp"
#include "cauchy/path.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cauchy::cli {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Polynomial expressions
// ---------------------------------------------------------------------------

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : s_(text) {}

  GaussPoly parse() {
    GaussPoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail({"'+'", "'-'", "'*'", "'/'", "end of input"});
    return p;
  }

 private:
  static constexpr unsigned max_exponent = 4096;

  [[noreturn]] void fail(std::initializer_list<const char*> expected) const {
    std::string msg = "at position " + std::to_string(pos_) + ": expected ";
    bool first = true;
    for (const char* e : expected) {
      if (!first) msg += " or ";
      msg += e;
      first = false;
    }
    if (pos_ < s_.size()) msg += ", found '" + std::string(1, s_[pos_]) + "'";
    else msg += ", found end of input";
    throw Error(ErrorKind::Parse, msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  GaussPoly expr() {
    GaussPoly acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  GaussPoly term() {
    GaussPoly acc = factor();
    for (;;) {
      if (accept('*')) {
        acc *= factor();
      } else if (peek() == '/') {
        const std::size_t at = pos_;
        ++pos_;
        GaussPoly d = factor();
        if (d.is_zero() || !d.is_constant()) {
          pos_ = at;
          throw Error(ErrorKind::Parse, "at position " + std::to_string(at) + ": division only by a nonzero constant");
        }
        acc = acc.scaled(GaussianRational(1) / d.lead());
      } else {
        return acc;
      }
    }
  }

  GaussPoly factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    GaussPoly base = atom();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail({"nonnegative integer exponent"});
      const std::string digits(s_.substr(start, pos_ - start));
      if (digits.size() > 4 || std::stoul(digits) > max_exponent) {
        pos_ = start;
        throw Error(ErrorKind::Parse, "at position " + std::to_string(start) + ": exponent too large");
      }
      base = pow(base, static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  GaussPoly atom() {
    const char c = peek();
    if (c == 'x') {
      ++pos_;
      return GaussPoly::x();
    }
    if (c == 'i') {
      ++pos_;
      return GaussPoly::constant(GaussianRational::i());
    }
    if (c == '(') {
      ++pos_;
      GaussPoly inner = expr();
      if (!accept(')')) fail({"')'"});
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    fail({"number", "'x'", "'i'", "'('"});
  }

  GaussPoly number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E'))
      throw Error(ErrorKind::Parse, "at position " + std::to_string(pos_) + ": exponent notation is not exact; use p/q or a decimal");
    const auto text = s_.substr(start, pos_ - start);
    try {
      return GaussPoly::constant(Rational::parse(text));
    } catch (const Error&) {
      pos_ = start;
      fail({"integer or exact decimal"});
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

inline GaussianRational parse_gauss_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_array() && j.size() == 2 && j[0].is_string() && j[1].is_string())
    return {Rational::parse(j[0].get<std::string>()), Rational::parse(j[1].get<std::string>())};
  throw Error(ErrorKind::Parse, "expected [\"re\",\"im\"] pair of exact strings, got " + j.dump());
}

inline json parse_json_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace detail

/// Expression text ("x^2 - 2*i*x - 1") or a JSON list of ascending
/// coefficients ([["-1","0"],["0","-2"],["1","0"]]).
inline GaussPoly parse_poly(std::string_view text) {
  std::size_t k = 0;
  while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
  if (k < text.size() && text[k] == '[') {
    const json j = detail::parse_json_text(text);
    if (!j.is_array()) throw Error(ErrorKind::Parse, "coefficient list must be a JSON array");
    std::vector<GaussianRational> cs;
    for (const auto& e : j) cs.push_back(detail::parse_gauss_json(e));
    return GaussPoly(std::move(cs));
  }
  return detail::ExprParser(text).parse();
}

/// A constant expression ("2+2*i") or a JSON pair (["2","2"]).
inline GaussianRational parse_point(std::string_view text) {
  std::size_t k = 0;
  while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
  if (k < text.size() && text[k] == '[') return detail::parse_gauss_json(detail::parse_json_text(text));
  const GaussPoly p = detail::ExprParser(text).parse();
  if (!p.is_constant()) throw Error(ErrorKind::Parse, "point '" + std::string(text) + "' depends on x");
  return p.is_zero() ? GaussianRational(0) : p.lead();
}

/// Expression text that parse_poly maps back to p.
inline std::string render(const GaussPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto cs = p.coeffs();
  for (std::size_t k = cs.size(); k-- > 0;) {
    if (cs[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + cs[k].str() + ")";
    if (k >= 1) out += "*x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

inline json to_json(const GaussianRational& z) { return json::array({z.re.str(), z.im.str()}); }

// ---------------------------------------------------------------------------
// Loops
// ---------------------------------------------------------------------------

inline Loop parse_loop(const json& j) {
  if (!j.is_object() || !j.contains("segments") || !j["segments"].is_array())
    throw Error(ErrorKind::Parse, "loop must be an object with a \"segments\" array");
  std::vector<PathSeg> segs;
  for (const auto& s : j["segments"]) {
    const std::string kind = s.value("kind", "");
    try {
      if (kind == "line") {
        segs.push_back(LineSeg{detail::parse_gauss_json(s.at("a")), detail::parse_gauss_json(s.at("b"))});
      } else if (kind == "arc") {
        if (!s.at("radius").is_string()) throw Error(ErrorKind::Parse, "arc radius must be an exact string");
        segs.push_back(ArcSeg{detail::parse_gauss_json(s.at("center")), Rational::parse(s.at("radius").get<std::string>()),
                              s.at("from_quarter").get<long>(), s.at("to_quarter").get<long>()});
      } else {
        throw Error(ErrorKind::Parse, "segment kind must be \"line\" or \"arc\", got " + s.dump());
      }
    } catch (const json::exception& e) {
      throw Error(ErrorKind::Parse, std::string("malformed segment: ") + e.what());
    }
  }
  return Loop(std::move(segs));
}

inline json loop_to_json(const Loop& loop) {
  json segs = json::array();
  for (const auto& s : loop.segments()) {
    if (auto l = std::get_if<LineSeg>(&s)) {
      segs.push_back({{"kind", "line"}, {"a", to_json(l->a)}, {"b", to_json(l->b)}});
    } else {
      const auto& a = std::get<ArcSeg>(s);
      segs.push_back({{"kind", "arc"},
                      {"center", to_json(a.center)},
                      {"radius", a.radius.str()},
                      {"from_quarter", a.from_quarter},
                      {"to_quarter", a.to_quarter}});
    }
  }
  return {{"segments", segs}};
}

// ---------------------------------------------------------------------------
// run
// ---------------------------------------------------------------------------

enum ExitCode : int {
  exit_ok = 0,
  exit_root_on_border = 2,
  exit_degenerate = 3,
  exit_parse = 4,
  exit_internal = 5,
};

inline int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::RootOnBorder:
    case ErrorKind::PointOnPath:
      return exit_root_on_border;
    case ErrorKind::ZeroPolynomial:
    case ErrorKind::ConstantPolynomial:
    case ErrorKind::DegenerateRectangle:
    case ErrorKind::DegenerateDirection:
    case ErrorKind::NotClosed:
    case ErrorKind::InvalidSegment:
    case ErrorKind::ZeroDenominator:
    case ErrorKind::BadInterval:
      return exit_degenerate;
    case ErrorKind::Parse:
      return exit_parse;
    default:
      return exit_internal;
  }
}

namespace detail {

inline json edges_json(const std::vector<EdgeCertificate>& border) {
  json edges = json::array();
  for (const auto& e : border) {
    json o = {{"from", to_json(e.from)}, {"to", to_json(e.to)}, {"root_free", e.root_free}};
    if (e.changes_alt) o["changes_alt"] = *e.changes_alt;
    edges.push_back(std::move(o));
  }
  return edges;
}

inline json rect_json(const Rectangle& r) {
  return {{"lower_left", to_json(r.lower_left)}, {"upper_right", to_json(r.upper_right)}};
}

inline unsigned threads_from_env() {
  const char* v = std::getenv("CAUCHY_ROOTS_THREADS");
  if (!v || !*v) return 1;
  const std::string s(v);
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error(ErrorKind::Parse, "CAUCHY_ROOTS_THREADS must be a positive integer, got '" + s + "'");
  if (s.size() > 4 || std::stoul(s) == 0)
    throw Error(ErrorKind::Parse, "CAUCHY_ROOTS_THREADS must be a positive integer, got '" + s + "'");
  return static_cast<unsigned>(std::stoul(s));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot read loop file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

struct RunResult {
  int exit_code = 0;
  std::string out;
};

/// Runs one CLI invocation. argv[0] is the program name.
inline RunResult run(const std::vector<std::string>& argv) {
  CLI::App app{"Exact complex root counting and winding numbers", "cauchy-roots"};
  app.require_subcommand(1);

  std::string poly, ll, ur, a, b, point, loop_file, max_width;

  auto* rect = app.add_subcommand("count-rect", "Count roots strictly inside a rectangle");
  rect->add_option("--poly", poly, "Polynomial")->required();
  rect->add_option("--ll", ll, "Lower-left corner")->required();
  rect->add_option("--ur", ur, "Upper-right corner")->required();

  auto* upper = app.add_subcommand("count-upper", "Count roots with Im z > 0");
  upper->add_option("--poly", poly, "Polynomial")->required();

  auto* half = app.add_subcommand("count-half", "Count roots left of the directed line a -> b");
  half->add_option("--poly", poly, "Polynomial")->required();
  half->add_option("--a", a, "Start point")->required();
  half->add_option("--b", b, "End point")->required();

  auto* stable = app.add_subcommand("stable", "Routh-Hurwitz stability: all roots in Re z < 0");
  stable->add_option("--poly", poly, "Polynomial")->required();

  auto* iso = app.add_subcommand("isolate", "Isolate the distinct roots in disjoint rectangles");
  iso->add_option("--poly", poly, "Polynomial")->required();
  iso->add_option("--max-width", max_width, "Maximum box width and height");

  auto* wind = app.add_subcommand("winding", "Winding number of a loop about a point");
  wind->add_option("--loop", loop_file, "Loop JSON file")->required();
  wind->add_option("--point", point, "Point")->required();

  RunResult res;
  auto emit = [&](int code, const json& j) {
    res.exit_code = code;
    res.out = j.dump() + "\n";
  };

  std::vector<std::string> args(argv.size() > 1 ? argv.begin() + 1 : argv.end(), argv.end());
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    res.out = app.help();
    return res;
  } catch (const CLI::ParseError& e) {
    emit(exit_parse, json{{"error", to_string(ErrorKind::Parse)}, {"detail", e.what()}});
    return res;
  }

  try {
    const unsigned threads = detail::threads_from_env();
    json out;
    if (*rect) {
      const GaussPoly p = parse_poly(poly);
      const Rectangle r(parse_point(ll), parse_point(ur));
      try {
        const auto rep = proots_rectangle(p, r, CountOptions{threads});
        out = {{"result", rep.count},
               {"certificate", {{"region", {{"kind", "rectangle"}, {"lower_left", to_json(r.lower_left)}, {"upper_right", to_json(r.upper_right)}}},
                                {"edges", detail::edges_json(rep.border)}}}};
      } catch (const RootOnBorder& e) {
        emit(exit_root_on_border, json{{"error", to_string(ErrorKind::RootOnBorder)},
                                        {"detail", e.detail()},
                                        {"certificate", {{"edges", detail::edges_json(e.border())}}}});
        return res;
      }
    } else if (*upper) {
      const GaussPoly p = parse_poly(poly);
      const auto rep = proots_upper(p);
      out = {{"result", rep.count},
             {"certificate", {{"region", {{"kind", "upper_half_plane"}}},
                              {"degree", p.deg()},
                              {"real_axis_roots", *rep.real_axis_changes},
                              {"index_changes", *rep.index_changes}}}};
    } else if (*half) {
      const GaussPoly p = parse_poly(poly);
      const GaussianRational za = parse_point(a), zb = parse_point(b);
      const auto rep = proots_half(p, za, zb);
      out = {{"result", rep.count},
             {"certificate", {{"region", {{"kind", "half_plane"}, {"a", to_json(za)}, {"b", to_json(zb)}}},
                              {"degree", p.deg()},
                              {"real_axis_roots", *rep.real_axis_changes},
                              {"index_changes", *rep.index_changes}}}};
    } else if (*stable) {
      const GaussPoly p = parse_poly(poly);
      const bool ok = routh_stable(p);
      json cert = {{"degree", p.deg()}};
      try {
        cert["left_half_plane_count"] = proots_half(p, GaussianRational(0), GaussianRational::i()).count;
        cert["root_on_imaginary_axis"] = false;
      } catch (const RootOnBorder&) {
        cert["root_on_imaginary_axis"] = true;
      }
      out = {{"result", ok}, {"certificate", cert}};
    } else if (*iso) {
      const GaussPoly p = parse_poly(poly);
      IsolateOptions opts;
      opts.threads = threads;
      if (!max_width.empty()) {
        opts.max_width = Rational::parse(max_width);
        if (opts.max_width->sign().value() <= 0) throw Error(ErrorKind::Parse, "--max-width must be positive");
      }
      IsolationStats stats;
      const auto boxes = isolate_roots(p, opts, &stats);
      json list = json::array();
      long total = 0;
      for (const auto& bx : boxes) {
        json o = detail::rect_json(bx.rect);
        o["multiplicity"] = bx.multiplicity;
        list.push_back(std::move(o));
        total += bx.multiplicity;
      }
      out = {{"result", list},
             {"certificate", {{"degree", p.deg()},
                              {"distinct_roots", boxes.size()},
                              {"multiplicity_sum", total},
                              {"max_depth", stats.max_depth}}}};
    } else if (*wind) {
      const Loop loop = parse_loop(detail::parse_json_text(detail::read_file(loop_file)));
      const GaussianRational z0 = parse_point(point);
      const Integer n = winding_number(loop, z0);
      json segs = json::array();
      HalfInteger total;
      for (const auto& s : loop.segments()) {
        const HalfInteger idx = cindex_seg(s, z0);
        total += idx;
        segs.push_back({{"kind", std::holds_alternative<LineSeg>(s) ? "line" : "arc"}, {"index", idx.str()}});
      }
      out = {{"result", n.fits_slong_p() ? json(n.get_si()) : json(n.get_str())},
             {"certificate", {{"segments", segs}, {"total_index", total.str()}}}};
    }
    emit(exit_ok, out);
  } catch (const Error& e) {
    emit(exit_code_for(e.kind()), json{{"error", to_string(e.kind())}, {"detail", e.detail()}});
  } catch (const std::exception& e) {
    emit(exit_internal, json{{"error", to_string(ErrorKind::Internal)}, {"detail", e.what()}});
  }
  return res;
}

}  // namespace cauchy::cli
