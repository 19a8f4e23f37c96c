// Command-line front end.
//
// Exit codes: 0 success, 1 property or Riemann-Roch failure, 2 input error.
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "scaling/error.hpp"
#include "scaling/io.hpp"
#include "scaling/svg.hpp"
#include "scaling/verify.hpp"

namespace {

using namespace scaling;
using Json = nlohmann::ordered_json;

constexpr int kFailure = 1;
constexpr int kInputError = 2;

struct RunConfig {
  Prime p = 0;  // 0: take p from the input
  unsigned nMax = 6;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::size_t count = 10000;
  std::string out = "-";
  std::string input = "-";
  std::string svgPath;
  std::string fault;
  std::string filter;
  unsigned threads = 0;
};

std::string readInput(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void writeFile(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

void requireFormat(const RunConfig& config, std::initializer_list<const char*> allowed, const char* command) {
  for (const char* f : allowed) {
    if (config.format == f) return;
  }
  throw Error(std::string("format ") + config.format + " is not available for " + command);
}

void checkPrime(const RunConfig& config, Prime found) {
  if (config.p != 0 && config.p != found) {
    throw MismatchError("--p " + std::to_string(config.p) + " but the input uses p = " + std::to_string(found));
  }
}

int cmdLegendre(const RunConfig& config) {
  requireFormat(config, {"text", "json"}, "legendre");
  NewtonPolygon polygon = io::parsePolygon(readInput(config.input));
  if (polygon.group().prime != 0) checkPrime(config, polygon.group().prime);
  PiecewiseAffine f = legendre(polygon);
  bool roundTrip = fromFunction(f) == polygon;

  if (config.format == "json") {
    Json j = Json::parse(io::toJson(f));
    j["roundTrip"] = roundTrip;
    writeFile(config.out, j.dump(2) + "\n");
  } else {
    std::ostringstream text;
    text << "polygon:    " << toString(polygon) << '\n';
    text << "legendre:   " << (f.isBottom() ? "constant -inf" : toString(f)) << '\n';
    text << "round trip: " << (roundTrip ? "ok" : "FAILED") << '\n';
    writeFile(config.out, text.str());
  }
  if (!config.svgPath.empty()) {
    if (f.isBottom()) {
      std::cerr << "legendre: constant -inf, no plot written\n";
    } else {
      writeFile(config.svgPath, svg::plotFunction(f, "Legendre transform"));
    }
  }
  return roundTrip ? 0 : kFailure;
}

int cmdDivisor(const RunConfig& config) {
  requireFormat(config, {"text", "json"}, "divisor");
  CircleFunction f = io::parseCircleFunction(readInput(config.input));
  checkPrime(config, f.prime());
  if (f.isBottom()) throw DomainError("the divisor of the constant -inf is undefined");
  Divisor d = divisorOf(f);
  Rational deg = degree(d);
  unsigned long chi = chiDivisor(d);
  bool balanced = deg == 0 && chi == 0;

  if (config.format == "json") {
    Json j = Json::parse(io::toJson(d));
    Json orders = Json::array();
    for (const auto& [rep, c] : d.support()) orders.push_back(Json{{"point", toString(rep)}, {"order", toString(rep * c.value())}});
    j["orders"] = orders;
    j["degree"] = toString(deg);
    j["chi"] = chi;
    j["sumOfOrders"] = balanced ? "ok" : "FAILED";
    writeFile(config.out, j.dump(2) + "\n");
  } else {
    std::ostringstream text;
    text << "divisor: " << toString(d) << '\n';
    text << "orders:  {";
    bool first = true;
    for (const auto& [rep, c] : d.support()) {
      text << (first ? "" : ", ") << toString(rep * c.value()) << " at " << toString(rep);
      first = false;
    }
    text << "}\n";
    text << "degree:  " << toString(deg) << '\n';
    text << "chi:     " << chi << '\n';
    text << "sum of orders: " << toString(deg) << (balanced ? " (ok)" : " (FAILED)") << '\n';
    writeFile(config.out, text.str());
  }
  return balanced ? 0 : kFailure;
}

int cmdJacobian(const RunConfig& config) {
  requireFormat(config, {"text", "json"}, "jacobian");
  Divisor d = io::parseDivisor(readInput(config.input));
  checkPrime(config, d.prime());
  PrincipalityReport report = isPrincipal(d);
  if (config.format == "json") {
    writeFile(config.out, io::toJson(report) + "\n");
    return 0;
  }
  std::ostringstream text;
  text << "divisor:   " << toString(d) << '\n';
  text << "class:     deg " << toString(report.degree) << ", chi " << report.chi << " in Z/" << d.prime() - 1 << '\n';
  if (report.principal()) {
    text << "principal: yes\nwitness:   " << toString(*report.witness) << '\n';
  } else {
    text << "principal: no (";
    if (report.degreeObstructs) text << "degree" << (report.chiObstructs ? " and " : "");
    if (report.chiObstructs) text << "chi";
    text << " obstruction)\n";
  }
  writeFile(config.out, text.str());
  return 0;
}

std::string rrText(const RiemannRochReport& report) {
  std::ostringstream text;
  text << "D = " << toString(report.positive.divisor) << ", deg D = " << toString(report.degree) << '\n';
  text << "  n  dim H0(D)  p^-n dim        dim H0(-D)  p^-n dim\n";
  for (std::size_t i = 0; i < report.positive.levels.size(); ++i) {
    const auto& a = report.positive.levels[i];
    const auto& b = report.negative.levels[i];
    char line[160];
    std::snprintf(line, sizeof line, "%3u  %9lld  %-14s  %10lld  %s\n", a.n, static_cast<long long>(a.dim),
                  toString(a.normalized).c_str(), static_cast<long long>(b.dim), toString(b.normalized).c_str());
    text << line;
  }
  text << "Dim_R H0(D) ~ " << toString(report.positive.limitEstimate) << ", Dim_R H0(-D) ~ "
       << toString(report.negative.limitEstimate) << '\n';
  text << "difference " << toString(report.difference) << ", deg D " << toString(report.degree) << ", tolerance "
       << toString(report.tolerance) << '\n';
  text << "verdict: " << (report.holds ? "PASS" : "FAIL") << '\n';
  return text.str();
}

int cmdRR(const RunConfig& config) {
  Divisor d = io::parseDivisor(readInput(config.input));
  checkPrime(config, d.prime());
  if (config.nMax < 2) throw DomainError("--n-max must be at least 2");
  RiemannRochReport report = rrCheck(d, config.nMax, SearchOptions{config.threads, 200000});
  if (config.format == "json") {
    writeFile(config.out, io::toJson(report) + "\n");
  } else if (config.format == "csv") {
    writeFile(config.out, "# D\n" + io::toCsv(report.positive) + "# -D\n" + io::toCsv(report.negative) +
                              "# verdict " + (report.holds ? "PASS" : "FAIL") + "\n");
  } else if (config.format == "svg") {
    writeFile(config.out, svg::plotReport(report.positive, "Normalized dimensions of H0(D)"));
  } else {
    writeFile(config.out, rrText(report));
  }
  return report.holds ? 0 : kFailure;
}

int cmdVerify(const RunConfig& config) {
  requireFormat(config, {"text"}, "verify");
  verify::Result result = verify::run(verify::Options{config.seed, config.count, config.fault, config.filter});
  writeFile(config.out, result.report);
  return result.ok() ? 0 : kFailure;
}

int cmdPlot(const RunConfig& config) {
  std::string text = readInput(config.input);
  std::string svgText;
  switch (io::detectKind(text)) {
    case io::DocumentKind::Polygon:
      svgText = svg::plotFunction(legendre(io::parsePolygon(text)), "Legendre transform");
      break;
    case io::DocumentKind::Function:
      svgText = svg::plotFunction(io::parseFunction(text), "Piecewise affine function");
      break;
    case io::DocumentKind::CircleFunction: {
      CircleFunction f = io::parseCircleFunction(text);
      checkPrime(config, f.prime());
      svgText = svg::plotCircleFunction(f, "Function on C_" + std::to_string(f.prime()));
      break;
    }
    case io::DocumentKind::Report: {
      FiltrationReport report = io::parseReport(text);
      if (config.format == "csv") {
        writeFile(config.out, io::toCsv(report));
        return 0;
      }
      svgText = svg::plotReport(report, "Normalized dimensions of H0(D)");
      break;
    }
    default:
      throw ParseError("line 1: cannot plot this document (expected a polygon, function or report)");
  }
  if (config.format == "csv") throw Error("csv output is only available for filtration reports");
  writeFile(config.out, svgText);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical algebra on the scaling site: Newton polygons, divisors on C_p and Riemann-Roch."};
  app.require_subcommand(1);
  RunConfig config;

  auto formats = CLI::IsMember({"text", "json", "csv", "svg"});
  app.add_option("--p", config.p, "Expected prime; must match the input")->check(CLI::PositiveNumber);
  app.add_option("--format", config.format, "Output format: text, json, csv or svg")->check(formats);
  app.add_option("--out", config.out, "Output file, - for stdout");

  auto addInput = [&](CLI::App* sub) {
    sub->add_option("input", config.input, "Input file, - for stdin")->required();
    sub->add_option("--format", config.format, "Output format")->check(formats);
    sub->add_option("--out", config.out, "Output file, - for stdout");
    sub->add_option("--p", config.p, "Expected prime; must match the input")->check(CLI::PositiveNumber);
  };

  auto* legendreCmd = app.add_subcommand("legendre", "Legendre transform of a Newton polygon");
  addInput(legendreCmd);
  legendreCmd->add_option("--svg", config.svgPath, "Also write an SVG plot of the transform");

  auto* divisorCmd = app.add_subcommand("divisor", "Principal divisor of a function on C_p");
  addInput(divisorCmd);

  auto* jacobianCmd = app.add_subcommand("jacobian", "Class of a divisor in the Jacobian, with a witness");
  addInput(jacobianCmd);

  auto* rrCmd = app.add_subcommand("rr", "Norm filtration dimensions of H0(D), H0(-D) and the Riemann-Roch check");
  addInput(rrCmd);
  rrCmd->add_option("--n-max", config.nMax, "Largest filtration level (>= 2)")->capture_default_str();
  rrCmd->add_option("--threads", config.threads, "Worker threads for the stratum search (0: all cores)");

  auto* verifyCmd = app.add_subcommand("verify", "Randomized property suite over all modules");
  verifyCmd->add_option("--seed", config.seed, "Random seed")->capture_default_str();
  verifyCmd->add_option("--count", config.count, "Cases per property")->capture_default_str();
  verifyCmd->add_option("--filter", config.filter, "Only properties whose name starts with this prefix");
  verifyCmd->add_option("--out", config.out, "Output file, - for stdout");
  verifyCmd->add_option("--format", config.format, "Output format (text)")->check(formats);
  verifyCmd->add_option("--inject-bug", config.fault)->group("");

  auto* plotCmd = app.add_subcommand("plot", "SVG plot of a polygon, function or filtration report (CSV for reports)");
  addInput(plotCmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  if (config.format == "text" && plotCmd->parsed()) config.format = "svg";

  try {
    if (legendreCmd->parsed()) return cmdLegendre(config);
    if (divisorCmd->parsed()) return cmdDivisor(config);
    if (jacobianCmd->parsed()) return cmdJacobian(config);
    if (rrCmd->parsed()) return cmdRR(config);
    if (verifyCmd->parsed()) return cmdVerify(config);
    if (plotCmd->parsed()) return cmdPlot(config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
