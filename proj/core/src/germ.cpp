#include "scaling/germ.hpp"

namespace scaling {

Germ Germ::make(RMaxValue value, Rational plus, Rational minus) {
  if (value.isBottom()) return bottom();
  return Germ{std::move(value), std::move(plus), std::move(minus)};
}

bool operator==(const Germ& a, const Germ& b) {
  if (a.isBottom() || b.isBottom()) return a.isBottom() == b.isBottom();
  return a.x == b.x && a.hplus == b.hplus && a.hminus == b.hminus;
}

Germ germJoin(const Germ& a, const Germ& b) {
  if (a.isBottom()) return b;
  if (b.isBottom()) return a;
  if (a.x > b.x) return a;
  if (b.x > a.x) return b;
  return Germ{a.x, a.hplus > b.hplus ? a.hplus : b.hplus, a.hminus < b.hminus ? a.hminus : b.hminus};
}

Germ germMul(const Germ& a, const Germ& b) {
  if (a.isBottom() || b.isBottom()) return Germ::bottom();
  return Germ{times(a.x, b.x), a.hplus + b.hplus, a.hminus + b.hminus};
}

RMaxValue evalChar(const Germ& g) { return g.x; }

LexElement LexElement::make(RMaxValue value, Rational slope) {
  if (value.isBottom()) return bottom();
  return LexElement{std::move(value), std::move(slope)};
}

bool operator==(const LexElement& a, const LexElement& b) {
  if (a.isBottom() || b.isBottom()) return a.isBottom() == b.isBottom();
  return a.x == b.x && a.h == b.h;
}

bool operator<(const LexElement& a, const LexElement& b) {
  if (b.isBottom()) return false;
  if (a.isBottom()) return true;
  if (a.x != b.x) return a.x < b.x;
  return a.h < b.h;
}

LexElement lexJoin(const LexElement& a, const LexElement& b) {
  if (a.isBottom()) return b;
  if (b.isBottom()) return a;
  if (a.x > b.x) return a;
  if (b.x > a.x) return b;
  return LexElement{a.x, a.h > b.h ? a.h : b.h};
}

LexElement lexMul(const LexElement& a, const LexElement& b) {
  if (a.isBottom() || b.isBottom()) return LexElement::bottom();
  return LexElement{times(a.x, b.x), a.h + b.h};
}

RMaxValue evalCharLex(const LexElement& a) { return a.x; }

std::string toString(const Germ& g) {
  if (g.isBottom()) return "(-inf)";
  return "(" + toString(g.x) + ", " + toString(g.hplus) + ", " + toString(g.hminus) + ")";
}

std::string toString(const LexElement& a) {
  if (a.isBottom()) return "(-inf)";
  return "(" + toString(a.x) + ", " + toString(a.h) + ")";
}

}  // namespace scaling
