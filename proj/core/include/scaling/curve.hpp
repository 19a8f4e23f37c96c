#pragma once

// The periodic orbit C_p = R*_+ / p^Z of the scaling flow.
//
// Points are classes lambda * p^Z, represented by the unique lambda in [1, p).
// Global sections of K_p are continuous piecewise affine functions f on
// R*_+ with slopes in H_p and f(p lambda) = f(lambda); they are stored on
// the fundamental domain [1, p]. Periodicity forces f'(p lambda) = f'(lambda) / p,
// so the slope just below 1 is p times the slope just below p.
//
// At H = lambda H_p the order of f is lambda * (f'+ - f'-). A divisor stores,
// per point, the H_p coefficient d with D(H) = rep * d.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scaling/piecewise.hpp"

namespace scaling {

/// Throws DomainError unless p is prime.
void requirePrime(Prime p);

class PointCp {
 public:
  Prime prime() const { return p_; }
  /// Representative in [1, p).
  const Rational& rep() const { return rep_; }

  friend bool operator==(const PointCp& a, const PointCp& b) { return a.p_ == b.p_ && a.rep_ == b.rep_; }

 private:
  friend PointCp normalizePoint(Prime p, const Rational& lambda);
  PointCp(Prime p, Rational rep) : p_(p), rep_(std::move(rep)) {}
  Prime p_;
  Rational rep_;
};

/// lambda * p^k in [1, p). Throws DomainError for lambda <= 0.
PointCp normalizePoint(Prime p, const Rational& lambda);

/// The exponent k with lambda * p^k in [1, p).
long normalizingExponent(Prime p, const Rational& lambda);

class CircleFunction {
 public:
  /// Slopes s_0..s_m on the arcs [1, b_1], ..., [b_m, p]; kinks in the open
  /// interval (1, p), strictly increasing. Throws DomainError when the
  /// closure sum s_i (b_{i+1} - b_i) is nonzero.
  static CircleFunction build(Prime p, std::vector<Rational> kinks, std::vector<HpScalar> slopes, RMaxValue anchor);
  static CircleFunction bottom(Prime p);
  static CircleFunction constant(Prime p, Rational value);

  /// Same as build, but with the function described on an arbitrary
  /// fundamental domain [start, p * start]; kinks lie in (start, p * start)
  /// and anchor is the value at start.
  static CircleFunction fromWindow(Prime p, const Rational& start, std::vector<Rational> kinks,
                                   std::vector<HpScalar> slopes, RMaxValue anchor);

  /// Restriction to [1, p] as a function with slopes in H_p.
  PiecewiseAffine onFundamentalDomain() const;
  /// Inverse of onFundamentalDomain; f must be defined on [1, p] with f(1) = f(p).
  static CircleFunction fromFundamentalDomain(Prime p, const PiecewiseAffine& f);

  Prime prime() const { return p_; }
  const std::vector<Rational>& kinks() const { return kinks_; }
  const std::vector<HpScalar>& slopes() const { return slopes_; }
  /// Value at lambda = 1.
  const RMaxValue& anchor() const { return anchor_; }
  bool isBottom() const { return anchor_.isBottom(); }

  /// Value at any lambda > 0.
  RMaxValue evalAt(const Rational& lambda) const;

  /// Left endpoint of arc i (1 for i = 0).
  Rational arcStart(std::size_t i) const;
  Rational arcEnd(std::size_t i) const;

  friend bool operator==(const CircleFunction& a, const CircleFunction& b);

 private:
  explicit CircleFunction(Prime p) : p_(p) {}

  Prime p_;
  std::vector<Rational> kinks_;
  std::vector<HpScalar> slopes_;
  RMaxValue anchor_;
};

CircleFunction buildCircleFunction(Prime p, std::vector<Rational> kinks, std::vector<HpScalar> slopes,
                                   RMaxValue anchor);

/// Pointwise max and plus; both preserve periodicity.
CircleFunction circleJoin(const CircleFunction& f, const CircleFunction& g);
CircleFunction circleTimes(const CircleFunction& f, const CircleFunction& g);
/// Multiplicative inverse -f in the semifield of sections; f must not be bottom.
CircleFunction circleInverse(const CircleFunction& f);

class Divisor {
 public:
  explicit Divisor(Prime p);

  /// Adds coeff at the class of lambda. The real value lambda * coeff is kept,
  /// so the stored coefficient is rescaled to the canonical representative.
  Divisor& add(const Rational& lambda, const HpScalar& coeff);

  Prime prime() const { return p_; }
  /// rep -> nonzero coefficient.
  const std::map<Rational, HpScalar>& support() const { return support_; }
  bool empty() const { return support_.empty(); }
  HpScalar coefficientAt(const PointCp& point) const;

  Divisor operator-() const;
  Divisor& operator+=(const Divisor& other);
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a += -b; }

  /// Pointwise comparison of the real values.
  bool isEffective() const;

  friend bool operator==(const Divisor& a, const Divisor& b) { return a.p_ == b.p_ && a.support_ == b.support_; }

 private:
  Prime p_;
  std::map<Rational, HpScalar> support_;
};

/// Principal divisor (f); f must not be bottom.
Divisor divisorOf(const CircleFunction& f);

/// sum over the support of rep * coeff.
Rational degree(const Divisor& d);

/// sum of chiScalar over the coefficients, in Z/(p-1)Z.
unsigned long chiDivisor(const Divisor& d);

struct JacobianClass {
  Rational degree;
  unsigned long chi = 0;

  friend bool operator==(const JacobianClass& a, const JacobianClass& b) {
    return a.degree == b.degree && a.chi == b.chi;
  }
};

JacobianClass jacobianClass(const Divisor& d);

struct PrincipalityReport {
  Rational degree;
  unsigned long chi = 0;
  bool degreeObstructs = false;
  bool chiObstructs = false;
  /// Anchor 0; present exactly when neither invariant obstructs.
  std::optional<CircleFunction> witness;

  bool principal() const { return witness.has_value(); }
};

PrincipalityReport isPrincipal(const Divisor& d);

std::string toString(const PointCp& point);
std::string toString(const CircleFunction& f);
std::string toString(const Divisor& d);

}  // namespace scaling
