#include "scaling/piecewise.hpp"

#include <algorithm>
#include <sstream>

#include "scaling/error.hpp"

namespace scaling {

SlopeGroup SlopeGroup::hp(Prime p, Rational scale) {
  if (p < 2) throw DomainError("H_p requires p >= 2");
  if (scale <= 0) throw DomainError("slope group scale must be positive");
  return SlopeGroup{p, std::move(scale)};
}

bool SlopeGroup::contains(const Rational& x) const {
  Rational unit = x / scale;
  if (prime == 0) return unit.get_den() == 1;
  return HpScalar::tryFromRational(prime, unit).has_value();
}

std::string toString(const SlopeGroup& group) {
  std::string base = group.prime == 0 ? "Z" : "Z[1/" + std::to_string(group.prime) + "]";
  if (group.scale == 1) return base;
  return toString(group.scale) + "*" + base;
}

Interval Interval::closed(Rational a, Rational b) {
  if (a < 0) throw DomainError("interval must lie in [0, inf)");
  if (b <= a) throw DomainError("empty interval [" + toString(a) + ", " + toString(b) + "]");
  return Interval{std::move(a), std::move(b)};
}

bool Interval::contains(const Rational& x) const { return x >= lower && (!upper || x <= *upper); }

bool Interval::interior(const Rational& x) const { return x > lower && (!upper || x < *upper); }

namespace {

std::string describe(const Interval& d) {
  return "[" + toString(d.lower) + ", " + (d.upper ? toString(*d.upper) : std::string("inf")) + "]";
}

void requireCompatible(const PiecewiseAffine& f, const PiecewiseAffine& g) {
  if (!(f.group() == g.group())) {
    throw MismatchError("slope groups differ: " + toString(f.group()) + " vs " + toString(g.group()));
  }
  if (!(f.domain() == g.domain())) {
    throw MismatchError("domains differ: " + describe(f.domain()) + " vs " + describe(g.domain()));
  }
}

/// Sorted union of the kink sets.
std::vector<Rational> mergedKinks(const PiecewiseAffine& f, const PiecewiseAffine& g) {
  std::vector<Rational> out;
  std::merge(f.kinks().begin(), f.kinks().end(), g.kinks().begin(), g.kinks().end(),
             std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

PiecewiseAffine PiecewiseAffine::make(SlopeGroup group, Interval domain, RMaxValue anchor,
                                      std::vector<Rational> kinks, std::vector<Rational> slopes) {
  if (domain.lower < 0) throw DomainError("domain must lie in [0, inf)");
  if (domain.upper && *domain.upper <= domain.lower) throw DomainError("empty domain " + describe(domain));
  PiecewiseAffine f(std::move(group), std::move(domain));
  if (anchor.isBottom()) return f;

  if (slopes.size() != kinks.size() + 1) {
    throw DomainError("expected " + std::to_string(kinks.size() + 1) + " slopes for " +
                      std::to_string(kinks.size()) + " kinks, got " + std::to_string(slopes.size()));
  }
  for (std::size_t i = 0; i < kinks.size(); ++i) {
    if (!f.domain_.interior(kinks[i])) {
      throw DomainError("kink " + toString(kinks[i]) + " is not interior to " + describe(f.domain_));
    }
    if (i > 0 && kinks[i] <= kinks[i - 1]) throw DomainError("kinks must be strictly increasing");
  }
  for (const auto& s : slopes) {
    if (!f.group_.contains(s)) {
      throw DomainError("slope " + toString(s) + " is not in " + toString(f.group_));
    }
  }

  f.anchor_ = std::move(anchor);
  f.slopes_.push_back(slopes.front());
  for (std::size_t i = 0; i < kinks.size(); ++i) {
    if (slopes[i + 1] == f.slopes_.back()) continue;
    f.kinks_.push_back(kinks[i]);
    f.slopes_.push_back(slopes[i + 1]);
  }
  return f;
}

PiecewiseAffine PiecewiseAffine::bottom(SlopeGroup group, Interval domain) {
  return make(std::move(group), std::move(domain), RMaxValue::bottom(), {}, {});
}

PiecewiseAffine PiecewiseAffine::constant(SlopeGroup group, Interval domain, Rational value) {
  return make(std::move(group), std::move(domain), RMaxValue(std::move(value)), {}, {Rational(0)});
}

bool PiecewiseAffine::convex() const {
  for (std::size_t i = 1; i < slopes_.size(); ++i) {
    if (slopes_[i] <= slopes_[i - 1]) return false;
  }
  return true;
}

RMaxValue PiecewiseAffine::evalAt(const Rational& lambda) const {
  if (!domain_.contains(lambda)) {
    throw DomainError("point " + toString(lambda) + " outside domain " + describe(domain_));
  }
  if (isBottom()) return RMaxValue::bottom();
  Rational value = anchor_.value();
  Rational left = domain_.lower;
  for (std::size_t i = 0; i < slopes_.size(); ++i) {
    bool last = i == kinks_.size();
    if (!last && kinks_[i] < lambda) {
      value += slopes_[i] * (kinks_[i] - left);
      left = kinks_[i];
      continue;
    }
    value += slopes_[i] * (lambda - left);
    break;
  }
  return RMaxValue(value);
}

std::size_t PiecewiseAffine::pieceRightOf(const Rational& lambda) const {
  return static_cast<std::size_t>(std::upper_bound(kinks_.begin(), kinks_.end(), lambda) - kinks_.begin());
}

std::size_t PiecewiseAffine::pieceLeftOf(const Rational& lambda) const {
  return static_cast<std::size_t>(std::lower_bound(kinks_.begin(), kinks_.end(), lambda) - kinks_.begin());
}

bool operator==(const PiecewiseAffine& a, const PiecewiseAffine& b) {
  return a.group_ == b.group_ && a.domain_ == b.domain_ && a.anchor_ == b.anchor_ && a.kinks_ == b.kinks_ &&
         a.slopes_ == b.slopes_;
}

PiecewiseAffine pointwiseJoin(const PiecewiseAffine& f, const PiecewiseAffine& g) {
  requireCompatible(f, g);
  if (f.isBottom()) return g;
  if (g.isBottom()) return f;

  std::vector<Rational> breaks = mergedKinks(f, g);
  std::vector<Rational> starts{f.domain().lower};
  starts.insert(starts.end(), breaks.begin(), breaks.end());

  std::vector<Rational> kinks;
  std::vector<Rational> slopes;
  for (std::size_t seg = 0; seg < starts.size(); ++seg) {
    const Rational& left = starts[seg];
    std::optional<Rational> right =
        seg + 1 < starts.size() ? std::optional<Rational>(starts[seg + 1]) : f.domain().upper;
    const Rational& sf = f.slopes()[f.pieceRightOf(left)];
    const Rational& sg = g.slopes()[g.pieceRightOf(left)];
    Rational gap = f.evalAt(left).value() - g.evalAt(left).value();
    Rational slopeGap = sf - sg;

    std::vector<Rational> pieceStarts{left};
    if (slopeGap != 0) {
      Rational crossing = left - gap / slopeGap;
      if (crossing > left && (!right || crossing < *right)) pieceStarts.push_back(crossing);
    }
    for (const auto& a : pieceStarts) {
      Rational gapAt = gap + slopeGap * (a - left);
      bool fWins = gapAt > 0 || (gapAt == 0 && slopeGap >= 0);
      if (!(seg == 0 && a == left)) kinks.push_back(a);
      slopes.push_back(fWins ? sf : sg);
    }
  }
  RMaxValue anchor = join(f.anchor(), g.anchor());
  return PiecewiseAffine::make(f.group(), f.domain(), anchor, std::move(kinks), std::move(slopes));
}

PiecewiseAffine pointwiseTimes(const PiecewiseAffine& f, const PiecewiseAffine& g) {
  requireCompatible(f, g);
  if (f.isBottom()) return f;
  if (g.isBottom()) return g;
  std::vector<Rational> kinks = mergedKinks(f, g);
  std::vector<Rational> slopes;
  slopes.reserve(kinks.size() + 1);
  slopes.push_back(f.slopes().front() + g.slopes().front());
  for (const auto& k : kinks) slopes.push_back(f.slopes()[f.pieceRightOf(k)] + g.slopes()[g.pieceRightOf(k)]);
  return PiecewiseAffine::make(f.group(), f.domain(), times(f.anchor(), g.anchor()), std::move(kinks),
                               std::move(slopes));
}

PiecewiseAffine gammaAction(unsigned long n, const PiecewiseAffine& f) {
  if (n == 0) throw DomainError("gamma_n requires n >= 1");
  Rational factor(n);
  Interval domain{f.domain().lower / factor, std::nullopt};
  if (f.domain().upper) domain.upper = *f.domain().upper / factor;
  if (f.isBottom()) return PiecewiseAffine::bottom(f.group(), domain);
  std::vector<Rational> kinks;
  for (const auto& k : f.kinks()) kinks.push_back(k / factor);
  std::vector<Rational> slopes;
  for (const auto& s : f.slopes()) slopes.push_back(s * factor);
  return PiecewiseAffine::make(f.group(), domain, f.anchor(), std::move(kinks), std::move(slopes));
}

Germ germAt(const PiecewiseAffine& f, const Rational& lambda) {
  if (!f.domain().interior(lambda)) {
    throw DomainError("germ requested at " + toString(lambda) + ", which is not interior to " +
                      describe(f.domain()));
  }
  if (f.isBottom()) return Germ::bottom();
  return Germ::make(f.evalAt(lambda), lambda * f.slopes()[f.pieceRightOf(lambda)],
                    lambda * f.slopes()[f.pieceLeftOf(lambda)]);
}

Rational orderAt(const PiecewiseAffine& f, const Rational& lambda) {
  if (f.isBottom()) throw DomainError("order of the bottom function is undefined");
  return germAt(f, lambda).order();
}

std::string toString(const PiecewiseAffine& f) {
  std::ostringstream out;
  out << "{domain " << describe(f.domain()) << ", anchor " << toString(f.anchor());
  if (!f.isBottom()) {
    out << ", kinks [";
    for (std::size_t i = 0; i < f.kinks().size(); ++i) out << (i ? ", " : "") << toString(f.kinks()[i]);
    out << "], slopes [";
    for (std::size_t i = 0; i < f.slopes().size(); ++i) out << (i ? ", " : "") << toString(f.slopes()[i]);
    out << "]";
  }
  out << "}";
  return out.str();
}

}  // namespace scaling
