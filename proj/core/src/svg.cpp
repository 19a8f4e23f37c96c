#include "scaling/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <utility>
#include <vector>

namespace scaling::svg {

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 400;
constexpr double kMargin = 50;

using Point = std::pair<Rational, Rational>;

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

class Canvas {
 public:
  explicit Canvas(std::string title) : title_(std::move(title)) {}

  void setBounds(Rational x0, Rational x1, Rational y0, Rational y1) {
    if (y1 == y0) {
      y0 -= 1;
      y1 += 1;
    }
    x0_ = std::move(x0);
    x1_ = std::move(x1);
    y0_ = std::move(y0);
    y1_ = std::move(y1);
  }

  double sx(const Rational& x) const {
    Rational t = (x - x0_) / (x1_ - x0_);
    return kMargin + t.get_d() * (kWidth - 2 * kMargin);
  }
  double sy(const Rational& y) const {
    Rational t = (y - y0_) / (y1_ - y0_);
    return kHeight - kMargin - t.get_d() * (kHeight - 2 * kMargin);
  }

  void polyline(const std::vector<Point>& points, const std::string& colour, bool dashed = false) {
    body_ << "  <polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\""
          << (dashed ? " stroke-dasharray=\"6 4\"" : "") << " points=\"";
    for (std::size_t i = 0; i < points.size(); ++i) {
      body_ << (i ? " " : "") << fixed(sx(points[i].first)) << ',' << fixed(sy(points[i].second));
    }
    body_ << "\"/>\n";
  }

  void marker(const Point& point, const std::string& colour) {
    body_ << "  <circle cx=\"" << fixed(sx(point.first)) << "\" cy=\"" << fixed(sy(point.second))
          << "\" r=\"3\" fill=\"" << colour << "\"/>\n";
  }

  void legend(const std::string& text) { legends_.push_back(text); }

  std::string render(bool withAxes) const {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" width=\""
        << kWidth << "\" height=\"" << kHeight << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "  <text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"16\">" << escape(title_) << "</text>\n";
    if (withAxes) {
      out << "  <rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kWidth - 2 * kMargin
          << "\" height=\"" << kHeight - 2 * kMargin << "\" fill=\"none\" stroke=\"#999\"/>\n";
      auto label = [&](double x, double y, const std::string& anchor, const std::string& text) {
        out << "  <text x=\"" << fixed(x) << "\" y=\"" << fixed(y) << "\" text-anchor=\"" << anchor
            << "\" font-family=\"sans-serif\" font-size=\"11\">" << escape(text) << "</text>\n";
      };
      label(kMargin, kHeight - kMargin + 16, "middle", toString(x0_));
      label(kWidth - kMargin, kHeight - kMargin + 16, "middle", toString(x1_));
      label(kMargin - 6, kHeight - kMargin + 4, "end", toString(y0_));
      label(kMargin - 6, kMargin + 4, "end", toString(y1_));
    }
    out << body_.str();
    for (std::size_t i = 0; i < legends_.size(); ++i) {
      out << "  <text x=\"" << kMargin + 8 << "\" y=\"" << fixed(kMargin + 18 + 16.0 * static_cast<double>(i))
          << "\" font-family=\"sans-serif\" font-size=\"12\">" << escape(legends_[i]) << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
  }

 private:
  std::string title_;
  Rational x0_{0}, x1_{1}, y0_{0}, y1_{1};
  std::ostringstream body_;
  std::vector<std::string> legends_;
};

std::string emptyPlot(const std::string& title) {
  Canvas canvas(title);
  canvas.legend("f = -inf (bottom): nothing to draw");
  return canvas.render(false);
}

std::pair<Rational, Rational> range(const std::vector<Point>& points) {
  auto [lo, hi] = std::minmax_element(points.begin(), points.end(),
                                      [](const Point& a, const Point& b) { return a.second < b.second; });
  return {lo->second, hi->second};
}

std::string drawGraph(const PiecewiseAffine& f, const Rational& right, const std::string& title) {
  std::vector<Rational> xs{f.domain().lower};
  for (const auto& k : f.kinks()) xs.push_back(k);
  xs.push_back(right);
  std::vector<Point> points;
  for (const auto& x : xs) points.emplace_back(x, f.evalAt(x).value());
  auto [lo, hi] = range(points);
  Canvas canvas(title);
  canvas.setBounds(f.domain().lower, right, lo, hi);
  canvas.polyline(points, "#1f5fa8");
  for (std::size_t i = 1; i + 1 < points.size(); ++i) canvas.marker(points[i], "#c0392b");
  return canvas.render(true);
}

}  // namespace

std::string plotFunction(const PiecewiseAffine& f, const std::string& title) {
  if (f.isBottom()) return emptyPlot(title);
  Rational right;
  if (f.domain().upper) {
    right = *f.domain().upper;
  } else {
    Rational last = f.kinks().empty() ? f.domain().lower : f.kinks().back();
    Rational span = last - f.domain().lower;
    right = last + (span > 0 ? span / 2 : Rational(1));
  }
  return drawGraph(f, right, title);
}

std::string plotCircleFunction(const CircleFunction& f, const std::string& title) {
  if (f.isBottom()) return emptyPlot(title);
  return drawGraph(f.onFundamentalDomain(), Rational(f.prime()), title);
}

std::string plotReport(const FiltrationReport& report, const std::string& title) {
  if (report.levels.empty()) {
    Canvas canvas(title);
    canvas.legend("no filtration levels");
    return canvas.render(false);
  }
  std::vector<Point> points;
  for (const auto& level : report.levels) points.emplace_back(Rational(level.n), level.normalized);
  auto [lo, hi] = range(points);
  lo = std::min(lo, report.degree);
  hi = std::max(hi, report.degree);
  Rational first = points.front().first;
  Rational last = points.back().first == first ? first + 1 : points.back().first;
  Canvas canvas(title);
  canvas.setBounds(first, last, lo, hi);
  canvas.polyline({{first, report.degree}, {last, report.degree}}, "#7f8c8d", true);
  canvas.polyline(points, "#1f5fa8");
  for (const auto& point : points) canvas.marker(point, "#1f5fa8");
  canvas.legend("p^-n dim H0(D)^(p^n) against n");
  canvas.legend("dashed: deg D = " + toString(report.degree));
  return canvas.render(true);
}

}  // namespace scaling::svg
