#include "scaling/curve.hpp"

#include <algorithm>
#include <sstream>

#include "scaling/error.hpp"

namespace scaling {

void requirePrime(Prime p) {
  if (!isPrime(p)) throw DomainError(std::to_string(p) + " is not a prime");
}

long normalizingExponent(Prime p, const Rational& lambda) {
  if (lambda <= 0) throw DomainError("points of C_p need lambda > 0, got " + toString(lambda));
  Rational base(p);
  Rational x = lambda;
  long k = 0;
  while (x >= base) {
    x /= base;
    --k;
  }
  while (x < 1) {
    x *= base;
    ++k;
  }
  return k;
}

PointCp normalizePoint(Prime p, const Rational& lambda) {
  requirePrime(p);
  long k = normalizingExponent(p, lambda);
  return PointCp(p, lambda * powerOf(p, k));
}

// ---------------------------------------------------------------------------
// CircleFunction

CircleFunction CircleFunction::build(Prime p, std::vector<Rational> kinks, std::vector<HpScalar> slopes,
                                     RMaxValue anchor) {
  requirePrime(p);
  CircleFunction f(p);
  if (anchor.isBottom()) return f;
  if (slopes.size() != kinks.size() + 1) {
    throw DomainError("expected " + std::to_string(kinks.size() + 1) + " slopes for " +
                      std::to_string(kinks.size()) + " kinks, got " + std::to_string(slopes.size()));
  }
  Rational end(p);
  for (std::size_t i = 0; i < kinks.size(); ++i) {
    if (kinks[i] <= 1 || kinks[i] >= end) {
      throw DomainError("kink " + toString(kinks[i]) + " is not in the open interval (1, " + std::to_string(p) + ")");
    }
    if (i > 0 && kinks[i] <= kinks[i - 1]) throw DomainError("kinks must be strictly increasing");
  }
  for (const auto& s : slopes) {
    if (s.prime() != p) throw MismatchError("slope " + toString(s) + " is not over p = " + std::to_string(p));
  }

  Rational closure(0);
  Rational left(1);
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    const Rational& right = i < kinks.size() ? kinks[i] : end;
    closure += slopes[i].value() * (right - left);
    left = right;
  }
  if (closure != 0) {
    throw DomainError("closure violated: f(p) - f(1) = " + toString(closure) + ", expected 0");
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

CircleFunction CircleFunction::bottom(Prime p) { return build(p, {}, {}, RMaxValue::bottom()); }

CircleFunction CircleFunction::constant(Prime p, Rational value) {
  return build(p, {}, {HpScalar(p)}, RMaxValue(std::move(value)));
}

CircleFunction CircleFunction::fromWindow(Prime p, const Rational& start, std::vector<Rational> kinks,
                                          std::vector<HpScalar> slopes, RMaxValue anchor) {
  requirePrime(p);
  if (anchor.isBottom()) return bottom(p);
  if (slopes.size() != kinks.size() + 1) {
    throw DomainError("expected " + std::to_string(kinks.size() + 1) + " slopes for " +
                      std::to_string(kinks.size()) + " kinks, got " + std::to_string(slopes.size()));
  }
  long shift = normalizingExponent(p, start);
  Rational factor = powerOf(p, shift);
  Rational pr(p);

  // Rescale the window onto [a, p a] with a in [1, p).
  std::vector<Rational> bounds{start * factor};
  for (const auto& k : kinks) {
    if (k <= start || k >= start * pr) throw DomainError("kink " + toString(k) + " outside the window");
    bounds.push_back(k * factor);
  }
  bounds.push_back(start * pr * factor);
  for (std::size_t i = 1; i < bounds.size(); ++i) {
    if (bounds[i] <= bounds[i - 1]) throw DomainError("kinks must be strictly increasing");
  }
  for (auto& s : slopes) s = s.timesPowerOfP(-shift);

  std::vector<Rational> newBreaks;  // starts of pieces in [1, p]
  std::vector<HpScalar> newSlopes;
  // The part of the window beyond p wraps around to [1, a], slopes scaled by p.
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    if (bounds[i + 1] <= pr) continue;
    newBreaks.push_back(std::max(bounds[i], pr) / pr);
    newSlopes.push_back(slopes[i].timesPowerOfP(1));
  }
  Rational valueAtP = anchor.value();
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    if (bounds[i] >= pr) break;
    newBreaks.push_back(bounds[i]);
    newSlopes.push_back(slopes[i]);
    valueAtP += slopes[i].value() * (std::min(bounds[i + 1], pr) - bounds[i]);
  }
  std::vector<Rational> newKinks(newBreaks.begin() + 1, newBreaks.end());
  return build(p, std::move(newKinks), std::move(newSlopes), RMaxValue(valueAtP));
}

PiecewiseAffine CircleFunction::onFundamentalDomain() const {
  Interval domain = Interval::closed(Rational(1), Rational(p_));
  if (isBottom()) return PiecewiseAffine::bottom(SlopeGroup::hp(p_), domain);
  std::vector<Rational> slopes;
  for (const auto& s : slopes_) slopes.push_back(s.value());
  return PiecewiseAffine::make(SlopeGroup::hp(p_), domain, anchor_, kinks_, std::move(slopes));
}

CircleFunction CircleFunction::fromFundamentalDomain(Prime p, const PiecewiseAffine& f) {
  if (!(f.domain() == Interval::closed(Rational(1), Rational(p)))) {
    throw DomainError("expected a function on [1, " + std::to_string(p) + "]");
  }
  if (f.isBottom()) return bottom(p);
  std::vector<HpScalar> slopes;
  for (const auto& s : f.slopes()) slopes.push_back(HpScalar::fromRational(p, s));
  return build(p, f.kinks(), std::move(slopes), f.anchor());
}

RMaxValue CircleFunction::evalAt(const Rational& lambda) const {
  if (isBottom()) return RMaxValue::bottom();
  Rational x = normalizePoint(p_, lambda).rep();
  Rational value = anchor_.value();
  for (std::size_t i = 0; i < slopes_.size(); ++i) {
    Rational start = arcStart(i);
    if (start >= x) break;
    value += slopes_[i].value() * (std::min(arcEnd(i), x) - start);
  }
  return RMaxValue(value);
}

Rational CircleFunction::arcStart(std::size_t i) const { return i == 0 ? Rational(1) : kinks_[i - 1]; }

Rational CircleFunction::arcEnd(std::size_t i) const { return i < kinks_.size() ? kinks_[i] : Rational(p_); }

bool operator==(const CircleFunction& a, const CircleFunction& b) {
  return a.p_ == b.p_ && a.anchor_ == b.anchor_ && a.kinks_ == b.kinks_ && a.slopes_ == b.slopes_;
}

CircleFunction buildCircleFunction(Prime p, std::vector<Rational> kinks, std::vector<HpScalar> slopes,
                                   RMaxValue anchor) {
  return CircleFunction::build(p, std::move(kinks), std::move(slopes), std::move(anchor));
}

namespace {

void requireSamePrime(Prime a, Prime b) {
  if (a != b) throw MismatchError("objects over different primes " + std::to_string(a) + " and " + std::to_string(b));
}

}  // namespace

CircleFunction circleJoin(const CircleFunction& f, const CircleFunction& g) {
  requireSamePrime(f.prime(), g.prime());
  return CircleFunction::fromFundamentalDomain(f.prime(), pointwiseJoin(f.onFundamentalDomain(), g.onFundamentalDomain()));
}

CircleFunction circleTimes(const CircleFunction& f, const CircleFunction& g) {
  requireSamePrime(f.prime(), g.prime());
  return CircleFunction::fromFundamentalDomain(f.prime(), pointwiseTimes(f.onFundamentalDomain(), g.onFundamentalDomain()));
}

CircleFunction circleInverse(const CircleFunction& f) {
  if (f.isBottom()) throw DomainError("-inf has no inverse");
  std::vector<HpScalar> slopes;
  for (const auto& s : f.slopes()) slopes.push_back(-s);
  return CircleFunction::build(f.prime(), f.kinks(), std::move(slopes), RMaxValue(Rational(-f.anchor().value())));
}

// ---------------------------------------------------------------------------
// Divisor

Divisor::Divisor(Prime p) : p_(p) { requirePrime(p); }

Divisor& Divisor::add(const Rational& lambda, const HpScalar& coeff) {
  requireSamePrime(p_, coeff.prime());
  long k = normalizingExponent(p_, lambda);
  Rational rep = lambda * powerOf(p_, k);
  HpScalar scaled = coeff.timesPowerOfP(-k);
  auto it = support_.find(rep);
  if (it == support_.end()) {
    if (!scaled.isZero()) support_.emplace(std::move(rep), std::move(scaled));
    return *this;
  }
  it->second += scaled;
  if (it->second.isZero()) support_.erase(it);
  return *this;
}

HpScalar Divisor::coefficientAt(const PointCp& point) const {
  requireSamePrime(p_, point.prime());
  auto it = support_.find(point.rep());
  return it == support_.end() ? HpScalar(p_) : it->second;
}

Divisor Divisor::operator-() const {
  Divisor out(p_);
  for (const auto& [rep, c] : support_) out.support_.emplace(rep, -c);
  return out;
}

Divisor& Divisor::operator+=(const Divisor& other) {
  requireSamePrime(p_, other.p_);
  for (const auto& [rep, c] : other.support_) add(rep, c);
  return *this;
}

bool Divisor::isEffective() const {
  return std::all_of(support_.begin(), support_.end(), [](const auto& entry) { return entry.second.sign() > 0; });
}

Divisor divisorOf(const CircleFunction& f) {
  if (f.isBottom()) throw DomainError("the divisor of -inf is undefined");
  Prime p = f.prime();
  Divisor d(p);
  const auto& s = f.slopes();
  for (std::size_t i = 1; i < s.size(); ++i) d.add(f.kinks()[i - 1], s[i] - s[i - 1]);
  d.add(Rational(1), s.front() - s.back().timesPowerOfP(1));
  return d;
}

Rational degree(const Divisor& d) {
  Rational total(0);
  for (const auto& [rep, c] : d.support()) total += rep * c.value();
  return total;
}

unsigned long chiDivisor(const Divisor& d) {
  Prime modulus = d.prime() - 1;
  unsigned long total = 0;
  for (const auto& [rep, c] : d.support()) total = (total + chiScalar(c)) % modulus;
  return modulus == 1 ? 0 : total;
}

JacobianClass jacobianClass(const Divisor& d) { return JacobianClass{degree(d), chiDivisor(d)}; }

PrincipalityReport isPrincipal(const Divisor& d) {
  Prime p = d.prime();
  PrincipalityReport report;
  report.degree = degree(d);
  report.chi = chiDivisor(d);
  report.degreeObstructs = report.degree != 0;
  report.chiObstructs = report.chi != 0;
  if (report.degreeObstructs || report.chiObstructs) return report;

  // s_i = s_0 + sum_{j <= i} d_j along the interior support, and the wrap
  // coefficient d_1 = s_0 - p s_m gives s_0 (1 - p) = d_1 + p sum_j d_j.
  HpScalar atOne(p);
  HpScalar interior(p);
  std::vector<Rational> kinks;
  std::vector<HpScalar> jumps;
  for (const auto& [rep, c] : d.support()) {
    if (rep == 1) {
      atOne = c;
      continue;
    }
    kinks.push_back(rep);
    jumps.push_back(c);
    interior += c;
  }
  auto first = (atOne + interior.timesPowerOfP(1)).divideExact(Integer(1) - Integer(p));
  if (!first) throw Error("internal: chi = 0 but the wrap equation has no solution in H_p");
  std::vector<HpScalar> slopes{*first};
  for (const auto& j : jumps) slopes.push_back(slopes.back() + j);
  report.witness = CircleFunction::build(p, std::move(kinks), std::move(slopes), RMaxValue(0));
  return report;
}

// ---------------------------------------------------------------------------

std::string toString(const PointCp& point) { return toString(point.rep()); }

std::string toString(const CircleFunction& f) {
  std::ostringstream out;
  out << "{p " << f.prime() << ", anchor " << toString(f.anchor());
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

std::string toString(const Divisor& d) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [rep, c] : d.support()) {
    out << (first ? "" : ", ") << toString(rep) << " -> " << toString(c);
    first = false;
  }
  out << "}";
  return out.str();
}

}  // namespace scaling
