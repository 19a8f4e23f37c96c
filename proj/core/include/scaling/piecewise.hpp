#pragma once

// Continuous piecewise affine functions on intervals of [0, inf) with slopes in a
// rank one subgroup H of Q, under pointwise max and plus. Convex ones are the
// sections of the structure sheaf; arbitrary ones the sections of its sheaf of
// fractions.

#include <optional>
#include <string>
#include <vector>

#include "scaling/germ.hpp"
#include "scaling/scalars.hpp"

namespace scaling {

/// H = scale * Z[1/prime], or scale * Z when prime == 0.
struct SlopeGroup {
  Prime prime = 0;
  Rational scale = 1;

  static SlopeGroup integers() { return {}; }
  static SlopeGroup hp(Prime p, Rational scale = 1);

  bool contains(const Rational& x) const;
  /// n * H, which is a subgroup of H.
  friend bool operator==(const SlopeGroup& a, const SlopeGroup& b) {
    return a.prime == b.prime && a.scale == b.scale;
  }
};

std::string toString(const SlopeGroup& group);

/// Closed interval [lower, upper] with 0 <= lower < upper; upper may be +inf.
struct Interval {
  Rational lower;
  std::optional<Rational> upper;

  static Interval halfLine() { return Interval{Rational(0), std::nullopt}; }
  static Interval closed(Rational a, Rational b);

  bool contains(const Rational& x) const;
  bool interior(const Rational& x) const;
  bool bounded() const { return upper.has_value(); }

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lower == b.lower && a.upper == b.upper;
  }
};

class PiecewiseAffine {
 public:
  /// Validates and canonicalizes: kinks strictly increasing and interior to
  /// the domain, one slope per piece, slopes in the group, adjacent equal
  /// slopes merged. A bottom anchor yields the bottom function.
  static PiecewiseAffine make(SlopeGroup group, Interval domain, RMaxValue anchor,
                              std::vector<Rational> kinks, std::vector<Rational> slopes);
  static PiecewiseAffine bottom(SlopeGroup group, Interval domain);
  static PiecewiseAffine constant(SlopeGroup group, Interval domain, Rational value);

  const SlopeGroup& group() const { return group_; }
  const Interval& domain() const { return domain_; }
  /// Value at the left endpoint of the domain.
  const RMaxValue& anchor() const { return anchor_; }
  const std::vector<Rational>& kinks() const { return kinks_; }
  const std::vector<Rational>& slopes() const { return slopes_; }

  bool isBottom() const { return anchor_.isBottom(); }
  /// Slopes strictly increase across every kink.
  bool convex() const;

  /// Throws DomainError outside the domain.
  RMaxValue evalAt(const Rational& lambda) const;

  /// Index of the piece containing (lambda, lambda + eps), resp. (lambda - eps, lambda).
  std::size_t pieceRightOf(const Rational& lambda) const;
  std::size_t pieceLeftOf(const Rational& lambda) const;

  friend bool operator==(const PiecewiseAffine& a, const PiecewiseAffine& b);

 private:
  PiecewiseAffine(SlopeGroup group, Interval domain) : group_(std::move(group)), domain_(std::move(domain)) {}

  SlopeGroup group_;
  Interval domain_;
  RMaxValue anchor_;
  std::vector<Rational> kinks_;
  std::vector<Rational> slopes_;
};

PiecewiseAffine pointwiseJoin(const PiecewiseAffine& f, const PiecewiseAffine& g);
PiecewiseAffine pointwiseTimes(const PiecewiseAffine& f, const PiecewiseAffine& g);

/// gamma_n(f)(lambda) = f(n lambda), defined on (1/n) * domain(f).
PiecewiseAffine gammaAction(unsigned long n, const PiecewiseAffine& f);

/// (f(lambda), lambda * f'+(lambda), lambda * f'-(lambda)) at an interior point.
Germ germAt(const PiecewiseAffine& f, const Rational& lambda);

/// h+ - h- at an interior point; f must not be bottom.
Rational orderAt(const PiecewiseAffine& f, const Rational& lambda);

std::string toString(const PiecewiseAffine& f);

}  // namespace scaling
