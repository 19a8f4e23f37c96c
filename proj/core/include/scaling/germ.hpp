#pragma once

// Stalk semirings at points of the scaling site.
//
//  * R_H: germs (x, h+, h-) of piecewise affine functions at a point H, with
//    join taking the larger value and, on ties, the outer envelope of the
//    one-sided slopes; multiplication adds componentwise.
//  * Z_H = (R x H)_max: pairs (x, h) ordered lexicographically.
//
// Both have a bottom element (the germ of the constant -inf), neutral for
// join and absorbing for multiplication. Evaluation (x, ...) -> x is a
// semiring homomorphism to R_max.

#include <string>

#include "scaling/scalars.hpp"

namespace scaling {

struct Germ {
  RMaxValue x;
  Rational hplus;
  Rational hminus;

  static Germ bottom() { return Germ{}; }
  static Germ make(RMaxValue value, Rational plus, Rational minus);

  bool isBottom() const { return x.isBottom(); }
  /// Germ of a locally convex function.
  bool convex() const { return isBottom() || hplus >= hminus; }
  Rational order() const { return hplus - hminus; }

  friend bool operator==(const Germ& a, const Germ& b);
};

Germ germJoin(const Germ& a, const Germ& b);
Germ germMul(const Germ& a, const Germ& b);
RMaxValue evalChar(const Germ& g);

struct LexElement {
  RMaxValue x;
  Rational h;

  static LexElement bottom() { return LexElement{}; }
  static LexElement make(RMaxValue value, Rational slope);

  bool isBottom() const { return x.isBottom(); }

  friend bool operator==(const LexElement& a, const LexElement& b);
  /// Lexicographic: first on x, then on h. Bottom is the least element.
  friend bool operator<(const LexElement& a, const LexElement& b);
};

LexElement lexJoin(const LexElement& a, const LexElement& b);
LexElement lexMul(const LexElement& a, const LexElement& b);
RMaxValue evalCharLex(const LexElement& a);

std::string toString(const Germ& g);
std::string toString(const LexElement& a);

}  // namespace scaling
