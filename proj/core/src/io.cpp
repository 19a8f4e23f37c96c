#include "scaling/io.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "scaling/error.hpp"

namespace scaling::io {

namespace {

using Json = nlohmann::ordered_json;

std::size_t lineOfOffset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(offset), '\n'));
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {
    try {
      root_ = Json::parse(text);
    } catch (const Json::parse_error& e) {
      std::size_t at = e.byte == 0 ? 0 : e.byte - 1;
      std::size_t line = lineOfOffset(text, at);
      std::size_t lineStart = text.rfind('\n', at == 0 ? 0 : at - 1);
      std::size_t column = lineStart == std::string_view::npos ? at + 1 : at - lineStart;
      std::string what = e.what();
      auto cut = what.find("syntax error");
      throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                       (cut == std::string::npos ? what : what.substr(cut)));
    }
    if (!root_.is_object()) throw ParseError("line 1: expected a JSON object at the top level");
  }

  const Json& root() const { return root_; }

  [[noreturn]] void fail(const std::string& path, const std::string& token, const std::string& what) const {
    std::size_t line = 1;
    if (!token.empty()) {
      auto at = text_.find(token);
      if (at != std::string_view::npos) line = lineOfOffset(text_, at);
    }
    throw ParseError("line " + std::to_string(line) + ", " + (path.empty() ? "/" : path) + ": " + what);
  }

  const Json* find(const Json& object, const std::string& key) const {
    auto it = object.find(key);
    return it == object.end() ? nullptr : &*it;
  }

  const Json& member(const Json& object, const std::string& key, const std::string& path) const {
    const Json* v = find(object, key);
    if (!v) fail(path, "", "missing field \"" + key + "\"");
    return *v;
  }

  const Json& array(const Json& object, const std::string& key, const std::string& path) const {
    const Json& v = member(object, key, path);
    if (!v.is_array()) fail(path + "/" + key, "\"" + key + "\"", "expected an array");
    return v;
  }

  std::string text(const Json& v, const std::string& path) const {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return v.dump();
    fail(path, v.dump(), "expected a string");
  }

  Rational rational(const Json& v, const std::string& path) const {
    std::string s = text(v, path);
    try {
      return parseRational(s);
    } catch (const ParseError& e) {
      fail(path, "\"" + s + "\"", e.what());
    }
  }

  HpScalar hp(Prime p, const Json& v, const std::string& path) const {
    std::string s = text(v, path);
    try {
      return parseHpScalar(p, s);
    } catch (const Error& e) {
      fail(path, "\"" + s + "\"", e.what());
    }
  }

  RMaxValue rmax(const Json& v, const std::string& path) const {
    std::string s = text(v, path);
    try {
      return parseRMaxValue(s);
    } catch (const ParseError& e) {
      fail(path, "\"" + s + "\"", e.what());
    }
  }

  Prime prime(const Json& object, const std::string& path, bool requirePrimality) const {
    const Json& v = member(object, "p", path);
    if (!v.is_number_unsigned()) fail(path + "/p", "\"p\"", "expected a nonnegative integer");
    auto p = v.get<Prime>();
    if (requirePrimality && !isPrime(p)) fail(path + "/p", "\"p\"", std::to_string(p) + " is not a prime");
    if (!requirePrimality && p == 1) fail(path + "/p", "\"p\"", "p must be 0 (integers) or at least 2");
    return p;
  }

  SlopeGroup group(const Json& object, const std::string& path) const {
    SlopeGroup g;
    if (find(object, "p")) g.prime = prime(object, path, false);
    if (const Json* s = find(object, "scale")) g.scale = rational(*s, path + "/scale");
    if (g.scale <= 0) fail(path + "/scale", "\"scale\"", "scale must be positive");
    return g;
  }

  std::vector<Rational> rationals(const Json& object, const std::string& key, const std::string& path) const {
    std::vector<Rational> out;
    const Json& arr = array(object, key, path);
    for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(rational(arr[i], path + "/" + key + "/" + std::to_string(i)));
    return out;
  }

  /// Runs a constructor, turning invariant violations into anchored parse errors.
  template <typename F>
  auto validated(const std::string& path, const std::string& anchorKey, F&& build) const {
    try {
      return build();
    } catch (const DomainError& e) {
      fail(path, anchorKey.empty() ? "" : "\"" + anchorKey + "\"", e.what());
    } catch (const MismatchError& e) {
      fail(path, anchorKey.empty() ? "" : "\"" + anchorKey + "\"", e.what());
    }
  }

 private:
  std::string_view text_;
  Json root_;
};

Json rationalArray(const std::vector<Rational>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(toString(v));
  return arr;
}

Json groupFields(Json j, const SlopeGroup& g) {
  j["p"] = g.prime;
  j["scale"] = toString(g.scale);
  return j;
}

Json divisorJson(const Divisor& d) {
  Json support = Json::array();
  for (const auto& [rep, c] : d.support()) support.push_back(Json{{"point", toString(rep)}, {"coeff", toString(c)}});
  return Json{{"p", d.prime()}, {"support", support}};
}

Json circleJson(const CircleFunction& f) {
  Json j{{"p", f.prime()}, {"domain", Json::array({"1", std::to_string(f.prime())})}, {"anchor", toString(f.anchor())}};
  Json slopes = Json::array();
  for (const auto& s : f.slopes()) slopes.push_back(toString(s));
  j["kinks"] = rationalArray(f.kinks());
  j["slopes"] = slopes;
  j["convex"] = f.onFundamentalDomain().convex();
  return j;
}

Json reportJson(const FiltrationReport& r) {
  Json levels = Json::array();
  for (const auto& level : r.levels) {
    levels.push_back(Json{{"n", level.n}, {"dim", level.dim}, {"normalized", toString(level.normalized)}});
  }
  return Json{{"p", r.divisor.prime()},
              {"divisor", divisorJson(r.divisor)},
              {"degree", toString(r.degree)},
              {"nMax", r.levels.empty() ? 0u : r.levels.back().n},
              {"levels", levels},
              {"limitEstimate", toString(r.limitEstimate)},
              {"tolerance", toString(r.tolerance)},
              {"converged", r.converged}};
}

Divisor readDivisor(const Reader& in, const Json& object, const std::string& path) {
  Prime p = in.prime(object, path, true);
  Divisor d(p);
  const Json& support = in.array(object, "support", path);
  for (std::size_t i = 0; i < support.size(); ++i) {
    std::string at = path + "/support/" + std::to_string(i);
    const Json& entry = support[i];
    if (!entry.is_object()) in.fail(at, "", "expected an object {\"point\", \"coeff\"}");
    Rational point = in.rational(in.member(entry, "point", at), at + "/point");
    if (point <= 0) in.fail(at + "/point", "\"" + toString(point) + "\"", "points need lambda > 0");
    d.add(point, in.hp(p, in.member(entry, "coeff", at), at + "/coeff"));
  }
  return d;
}

}  // namespace

DocumentKind detectKind(std::string_view text) {
  Reader in(text);
  const Json& j = in.root();
  if (j.contains("levels")) return DocumentKind::Report;
  if (j.contains("vertices")) return DocumentKind::Polygon;
  if (j.contains("support")) return DocumentKind::Divisor;
  if (j.contains("slopes") || j.contains("anchor")) {
    // Circle functions carry a prime and live on a window [a, p a] with a >= 1.
    if (j.contains("p") && j["p"].is_number_unsigned() && isPrime(j["p"].get<Prime>()) &&
        !(j.contains("domain") && j["domain"].is_array() && !j["domain"].empty() && j["domain"][0] == "0")) {
      return j.contains("scale") ? DocumentKind::Function : DocumentKind::CircleFunction;
    }
    return DocumentKind::Function;
  }
  return DocumentKind::Unknown;
}

NewtonPolygon parsePolygon(std::string_view text) {
  Reader in(text);
  const Json& root = in.root();
  SlopeGroup group = in.group(root, "");
  if (!in.find(root, "p")) in.fail("", "", "missing field \"p\"");
  std::vector<Vertex> vertices;
  const Json& arr = in.array(root, "vertices", "");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    std::string at = "/vertices/" + std::to_string(i);
    if (!arr[i].is_array() || arr[i].size() != 2) in.fail(at, "", "expected a pair [\"x\", \"y\"]");
    vertices.push_back(Vertex{in.rational(arr[i][0], at + "/0"), in.rational(arr[i][1], at + "/1")});
  }
  return in.validated("/vertices", "vertices", [&] { return reduce(group, std::move(vertices)); });
}

PiecewiseAffine parseFunction(std::string_view text) {
  Reader in(text);
  const Json& root = in.root();
  SlopeGroup group = in.group(root, "");
  const Json& domain = in.array(root, "domain", "");
  if (domain.size() != 2) in.fail("/domain", "\"domain\"", "expected [\"a\", \"b\"]");
  Interval interval{in.rational(domain[0], "/domain/0"), std::nullopt};
  if (!(domain[1].is_string() && domain[1].get<std::string>() == "inf")) {
    interval.upper = in.rational(domain[1], "/domain/1");
  }
  RMaxValue anchor = in.rmax(in.member(root, "anchor", ""), "/anchor");
  std::vector<Rational> kinks = anchor.isBottom() && !in.find(root, "kinks") ? std::vector<Rational>{}
                                                                             : in.rationals(root, "kinks", "");
  std::vector<Rational> slopes = anchor.isBottom() && !in.find(root, "slopes") ? std::vector<Rational>{}
                                                                               : in.rationals(root, "slopes", "");
  PiecewiseAffine f = in.validated("", "slopes", [&] {
    return PiecewiseAffine::make(group, interval, anchor, std::move(kinks), std::move(slopes));
  });
  if (const Json* flag = in.find(root, "convex")) {
    if (!flag->is_boolean()) in.fail("/convex", "\"convex\"", "expected true or false");
    if (flag->get<bool>() != f.convex()) in.fail("/convex", "\"convex\"", "convex flag disagrees with the slopes");
  }
  return f;
}

CircleFunction parseCircleFunction(std::string_view text) {
  Reader in(text);
  const Json& root = in.root();
  Prime p = in.prime(root, "", true);
  Rational start(1);
  if (const Json* domain = in.find(root, "domain")) {
    if (!domain->is_array() || domain->size() != 2) in.fail("/domain", "\"domain\"", "expected [\"a\", \"p a\"]");
    start = in.rational((*domain)[0], "/domain/0");
    Rational end = in.rational((*domain)[1], "/domain/1");
    if (start <= 0 || end != start * p) in.fail("/domain", "\"domain\"", "a fundamental domain is [a, p a] with a > 0");
  }
  RMaxValue anchor = in.rmax(in.member(root, "anchor", ""), "/anchor");
  if (anchor.isBottom()) return CircleFunction::bottom(p);
  std::vector<Rational> kinks = in.rationals(root, "kinks", "");
  std::vector<HpScalar> slopes;
  const Json& arr = in.array(root, "slopes", "");
  for (std::size_t i = 0; i < arr.size(); ++i) slopes.push_back(in.hp(p, arr[i], "/slopes/" + std::to_string(i)));
  CircleFunction f = in.validated("", "slopes", [&] {
    return CircleFunction::fromWindow(p, start, std::move(kinks), std::move(slopes), anchor);
  });
  if (const Json* flag = in.find(root, "convex")) {
    if (!flag->is_boolean()) in.fail("/convex", "\"convex\"", "expected true or false");
    if (flag->get<bool>() != f.onFundamentalDomain().convex()) {
      in.fail("/convex", "\"convex\"", "convex flag disagrees with the slopes");
    }
  }
  return f;
}

Divisor parseDivisor(std::string_view text) {
  Reader in(text);
  return readDivisor(in, in.root(), "");
}

FiltrationReport parseReport(std::string_view text) {
  Reader in(text);
  const Json& root = in.root();
  FiltrationReport report{readDivisor(in, in.member(root, "divisor", ""), "/divisor"), Rational(0), {}, Rational(0),
                          Rational(0), false};
  report.degree = degree(report.divisor);
  const Json& levels = in.array(root, "levels", "");
  for (std::size_t i = 0; i < levels.size(); ++i) {
    std::string at = "/levels/" + std::to_string(i);
    const Json& n = in.member(levels[i], "n", at);
    const Json& dim = in.member(levels[i], "dim", at);
    if (!n.is_number_unsigned() || !dim.is_number_integer()) in.fail(at, "", "n and dim must be integers");
    report.levels.push_back(FiltrationLevel{n.get<unsigned>(), dim.get<std::int64_t>(),
                                            in.rational(in.member(levels[i], "normalized", at), at + "/normalized")});
  }
  if (!report.levels.empty()) report.limitEstimate = report.levels.back().normalized;
  if (const Json* tol = in.find(root, "tolerance")) report.tolerance = in.rational(*tol, "/tolerance");
  if (const Json* conv = in.find(root, "converged"); conv && conv->is_boolean()) report.converged = conv->get<bool>();
  return report;
}

std::string toJson(const NewtonPolygon& polygon) {
  Json vertices = Json::array();
  for (const auto& v : polygon.vertices()) vertices.push_back(Json::array({toString(v.x), toString(v.y)}));
  return Json{{"p", polygon.group().prime}, {"scale", toString(polygon.group().scale)}, {"vertices", vertices}}.dump(2);
}

std::string toJson(const PiecewiseAffine& f) {
  Json domain = Json::array({toString(f.domain().lower), f.domain().upper ? toString(*f.domain().upper) : "inf"});
  Json j{{"domain", domain}, {"anchor", toString(f.anchor())}};
  j["kinks"] = rationalArray(f.kinks());
  j["slopes"] = rationalArray(f.slopes());
  j["convex"] = f.convex();
  return groupFields(j, f.group()).dump(2);
}

std::string toJson(const CircleFunction& f) { return circleJson(f).dump(2); }

std::string toJson(const Divisor& d) { return divisorJson(d).dump(2); }

std::string toJson(const FiltrationReport& report) { return reportJson(report).dump(2); }

std::string toJson(const PrincipalityReport& report) {
  Json obstructions = Json::array();
  if (report.degreeObstructs) obstructions.push_back("degree");
  if (report.chiObstructs) obstructions.push_back("chi");
  Json j{{"degree", toString(report.degree)},
         {"chi", report.chi},
         {"principal", report.principal()},
         {"obstructions", obstructions}};
  j["witness"] = report.witness ? circleJson(*report.witness) : Json(nullptr);
  return j.dump(2);
}

std::string toJson(const RiemannRochReport& report) {
  return Json{{"degree", toString(report.degree)},
              {"positive", reportJson(report.positive)},
              {"negative", reportJson(report.negative)},
              {"difference", toString(report.difference)},
              {"tolerance", toString(report.tolerance)},
              {"verdict", report.holds ? "PASS" : "FAIL"}}
      .dump(2);
}

std::string toCsv(const FiltrationReport& report) {
  std::ostringstream out;
  out << "n,dim,normalized\n";
  for (const auto& level : report.levels) out << level.n << ',' << level.dim << ',' << toString(level.normalized) << '\n';
  return out.str();
}

}  // namespace scaling::io
