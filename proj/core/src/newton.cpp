#include "scaling/newton.hpp"

#include <algorithm>

#include "scaling/error.hpp"

namespace scaling {

namespace {

void requireSameGroup(const NewtonPolygon& a, const NewtonPolygon& b) {
  if (!(a.group() == b.group())) {
    throw MismatchError("Newton polygons over different slope groups: " + toString(a.group()) + " vs " +
                        toString(b.group()));
  }
}

/// Cross product sign of (b - a) x (c - a); > 0 means c lies strictly above
/// the line through a and b when a.x < b.x < c.x.
Rational turn(const Vertex& a, const Vertex& b, const Vertex& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

}  // namespace

NewtonPolygon NewtonPolygon::zero(SlopeGroup group) { return reduce(std::move(group), {}); }

NewtonPolygon NewtonPolygon::unit(SlopeGroup group) {
  return reduce(std::move(group), {Vertex{Rational(0), Rational(0)}});
}

RMaxValue NewtonPolygon::support(const Rational& lambda) const {
  RMaxValue best = RMaxValue::bottom();
  for (const auto& v : vertices_) best = join(best, RMaxValue(Rational(lambda * v.x + v.y)));
  return best;
}

NewtonPolygon reduce(SlopeGroup group, std::vector<Vertex> raw) {
  for (const auto& v : raw) {
    if (!group.contains(v.x)) {
      throw DomainError("vertex abscissa " + toString(v.x) + " is not in " + toString(group));
    }
  }
  NewtonPolygon out(std::move(group));
  if (raw.empty()) return out;

  // One candidate per abscissa, the highest.
  std::sort(raw.begin(), raw.end(), [](const Vertex& a, const Vertex& b) {
    return a.x < b.x || (a.x == b.x && a.y > b.y);
  });
  raw.erase(std::unique(raw.begin(), raw.end(), [](const Vertex& a, const Vertex& b) { return a.x == b.x; }),
            raw.end());

  // The winner just to the right of lambda = 0 is the rightmost of the highest
  // vertices; everything to its left only ever ties at lambda = 0 or loses.
  auto top = std::max_element(raw.begin(), raw.end(),
                              [](const Vertex& a, const Vertex& b) { return a.y < b.y || (a.y == b.y && a.x < b.x); });
  raw.erase(raw.begin(), top);

  // Strictly concave upper hull.
  std::vector<Vertex>& hull = out.vertices_;
  for (auto& v : raw) {
    while (hull.size() >= 2 && turn(hull[hull.size() - 2], hull.back(), v) >= 0) hull.pop_back();
    hull.push_back(std::move(v));
  }
  return out;
}

PiecewiseAffine legendre(const NewtonPolygon& polygon) {
  const auto& vs = polygon.vertices();
  if (vs.empty()) return PiecewiseAffine::bottom(polygon.group(), Interval::halfLine());
  std::vector<Rational> kinks;
  std::vector<Rational> slopes{vs.front().x};
  for (std::size_t j = 1; j < vs.size(); ++j) {
    // lambda x_{j-1} + y_{j-1} = lambda x_j + y_j
    kinks.push_back((vs[j - 1].y - vs[j].y) / (vs[j].x - vs[j - 1].x));
    slopes.push_back(vs[j].x);
  }
  return PiecewiseAffine::make(polygon.group(), Interval::halfLine(), RMaxValue(vs.front().y), std::move(kinks),
                               std::move(slopes));
}

NewtonPolygon fromFunction(const PiecewiseAffine& f) {
  if (!(f.domain() == Interval::halfLine())) {
    throw DomainError("fromFunction needs a function on [0, inf)");
  }
  if (f.isBottom()) return NewtonPolygon::zero(f.group());
  if (!f.convex()) throw DomainError("fromFunction needs a convex function");
  std::vector<Vertex> vertices;
  Rational start(0);
  for (std::size_t i = 0; i < f.slopes().size(); ++i) {
    if (i > 0) start = f.kinks()[i - 1];
    const Rational& slope = f.slopes()[i];
    vertices.push_back(Vertex{slope, f.evalAt(start).value() - slope * start});
  }
  NewtonPolygon polygon = reduce(f.group(), vertices);
  if (polygon.vertices().size() != vertices.size()) {
    // Only happens when a piece has zero length, which make() rules out.
    throw DomainError("function pieces are not all supporting");
  }
  return polygon;
}

NewtonPolygon polyJoin(const NewtonPolygon& a, const NewtonPolygon& b) {
  requireSameGroup(a, b);
  std::vector<Vertex> all(a.vertices());
  all.insert(all.end(), b.vertices().begin(), b.vertices().end());
  return reduce(a.group(), std::move(all));
}

NewtonPolygon polyTimes(const NewtonPolygon& a, const NewtonPolygon& b) {
  requireSameGroup(a, b);
  std::vector<Vertex> sums;
  sums.reserve(a.vertices().size() * b.vertices().size());
  for (const auto& u : a.vertices()) {
    for (const auto& v : b.vertices()) sums.push_back(Vertex{u.x + v.x, u.y + v.y});
  }
  return reduce(a.group(), std::move(sums));
}

std::string toString(const NewtonPolygon& polygon) {
  std::string out = "{";
  for (std::size_t i = 0; i < polygon.vertices().size(); ++i) {
    const auto& v = polygon.vertices()[i];
    out += (i ? ", (" : "(") + toString(v.x) + ", " + toString(v.y) + ")";
  }
  return out + "}";
}

}  // namespace scaling
