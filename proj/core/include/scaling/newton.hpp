#pragma once

// Newton polygons with vertices in H x Q, i.e. elements of the reduced semiring
// H_max (x)_B R_max, and the Legendre transform
//
//     l_N(lambda) = max_j (lambda * x_j + y_j),   lambda >= 0,
//
// identifying them with convex piecewise affine functions on [0, inf) with
// slopes in H. Join is the convex hull of the union (pointwise max of l), and
// multiplication the Minkowski sum (pointwise sum of l).

#include <string>
#include <vector>

#include "scaling/piecewise.hpp"

namespace scaling {

struct Vertex {
  Rational x;
  Rational y;

  friend bool operator==(const Vertex& a, const Vertex& b) { return a.x == b.x && a.y == b.y; }
};

class NewtonPolygon {
 public:
  /// The empty polygon: l = -inf, the zero of the semiring.
  static NewtonPolygon zero(SlopeGroup group);
  /// {(0, 0)}: l = 0, the unit of the semiring.
  static NewtonPolygon unit(SlopeGroup group);

  const SlopeGroup& group() const { return group_; }
  /// Reduced vertices, x strictly increasing.
  const std::vector<Vertex>& vertices() const { return vertices_; }
  bool isZero() const { return vertices_.empty(); }

  /// l_N(lambda) straight from the vertex list.
  RMaxValue support(const Rational& lambda) const;

  friend bool operator==(const NewtonPolygon& a, const NewtonPolygon& b) {
    return a.group_ == b.group_ && a.vertices_ == b.vertices_;
  }

 private:
  friend NewtonPolygon reduce(SlopeGroup group, std::vector<Vertex> raw);
  explicit NewtonPolygon(SlopeGroup group) : group_(std::move(group)) {}

  SlopeGroup group_;
  std::vector<Vertex> vertices_;
};

/// Keeps exactly the vertices that are the unique maximizer of
/// lambda * x + y on some open subinterval of [0, inf). Throws DomainError
/// when an abscissa is not in the group.
NewtonPolygon reduce(SlopeGroup group, std::vector<Vertex> raw);

PiecewiseAffine legendre(const NewtonPolygon& polygon);

/// Inverse of legendre. f must be convex and defined on [0, inf).
NewtonPolygon fromFunction(const PiecewiseAffine& f);

NewtonPolygon polyJoin(const NewtonPolygon& a, const NewtonPolygon& b);
NewtonPolygon polyTimes(const NewtonPolygon& a, const NewtonPolygon& b);

std::string toString(const NewtonPolygon& polygon);

}  // namespace scaling
