#include "scaling/generators.hpp"

#include <algorithm>

#include "scaling/error.hpp"

namespace scaling::gen {

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw DomainError("empty random range");
  std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  // Rejection keeps the draw exactly uniform.
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

bool Rng::chance(std::uint64_t num, std::uint64_t den) {
  return static_cast<std::uint64_t>(range(0, static_cast<std::int64_t>(den) - 1)) < num;
}

namespace {

std::int64_t bound(unsigned size) { return 4 * static_cast<std::int64_t>(std::max(size, 1u)); }

Integer toInteger(std::int64_t v) { return Integer(static_cast<long>(v)); }

/// Distinct sorted rationals in (lo, hi).
std::vector<Rational> sortedPoints(Rng& rng, const Rational& lo, const Rational& hi, std::size_t count, unsigned size) {
  std::vector<Rational> points;
  for (std::size_t i = 0; i < count; ++i) points.push_back(rationalBetween(rng, lo, hi, size));
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

/// g = gcd(a, b) with x a + y b = g.
void extendedGcd(const Integer& a, const Integer& b, Integer& g, Integer& x, Integer& y) {
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

}  // namespace

Rational rational(Rng& rng, unsigned size) {
  Integer num = toInteger(rng.range(-bound(size), bound(size)));
  Integer den = toInteger(rng.range(1, static_cast<std::int64_t>(size) + 1));
  return makeRational(num, den);
}

Rational rationalBetween(Rng& rng, const Rational& lo, const Rational& hi, unsigned size) {
  // Grid of step 1/q, refined until the open interval contains a grid point.
  for (std::int64_t q = rng.range(1, static_cast<std::int64_t>(size) + 2);; q *= 2) {
    Integer first = floorOf(lo * q) + 1;
    Integer last = ceilOf(hi * q) - 1;
    if (first > last) continue;
    Integer span = last - first;
    std::int64_t offset = span.fits_slong_p() && span < 1000000 ? rng.range(0, span.get_si())
                                                                 : rng.range(0, 1000000);
    return makeRational(first + offset, toInteger(q));
  }
}

HpScalar hpScalar(Rng& rng, Prime p, unsigned size) {
  Integer num = toInteger(rng.range(-bound(size), bound(size)));
  auto pexp = static_cast<unsigned long>(rng.range(0, std::min<std::int64_t>(size, 3)));
  return HpScalar(p, num, pexp);
}

Rational groupElement(Rng& rng, const SlopeGroup& group, unsigned size) {
  if (group.prime == 0) return group.scale * Rational(toInteger(rng.range(-bound(size), bound(size))));
  return group.scale * hpScalar(rng, group.prime, size).value();
}

RMaxValue rmax(Rng& rng, unsigned size) {
  if (rng.chance(1, 10)) return RMaxValue::bottom();
  return RMaxValue(rational(rng, size));
}

SlopeGroup slopeGroup(Rng& rng) {
  static const Prime primes[] = {0, 2, 3, 5};
  SlopeGroup group{primes[rng.range(0, 3)], Rational(1)};
  if (rng.chance(1, 4)) group.scale = makeRational(toInteger(rng.range(1, 5)), toInteger(rng.range(1, 3)));
  return group;
}

NewtonPolygon polygon(Rng& rng, const SlopeGroup& group, unsigned size) {
  if (rng.chance(1, 20)) return NewtonPolygon::zero(group);
  std::vector<Vertex> raw;
  auto count = rng.range(1, static_cast<std::int64_t>(size) + 2);
  for (std::int64_t i = 0; i < count; ++i) raw.push_back(Vertex{groupElement(rng, group, size), rational(rng, size)});
  return reduce(group, std::move(raw));
}

PiecewiseAffine function(Rng& rng, const SlopeGroup& group, const Interval& domain, unsigned size) {
  if (rng.chance(1, 20)) return PiecewiseAffine::bottom(group, domain);
  Rational hi = domain.upper ? *domain.upper : domain.lower + Rational(toInteger(bound(size)));
  auto count = static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(size) + 1));
  std::vector<Rational> kinks = sortedPoints(rng, domain.lower, hi, count, size);
  std::vector<Rational> slopes;
  for (std::size_t i = 0; i <= kinks.size(); ++i) slopes.push_back(groupElement(rng, group, size));
  return PiecewiseAffine::make(group, domain, RMaxValue(rational(rng, size)), std::move(kinks), std::move(slopes));
}

Germ germ(Rng& rng, unsigned size) {
  RMaxValue x = rmax(rng, size);
  if (x.isBottom()) return Germ::bottom();
  return Germ::make(x, rational(rng, size), rational(rng, size));
}

LexElement lexElement(Rng& rng, unsigned size) {
  RMaxValue x = rmax(rng, size);
  if (x.isBottom()) return LexElement::bottom();
  return LexElement::make(x, rational(rng, size));
}

CircleFunction circleFunction(Rng& rng, Prime p, unsigned size) {
  Rational pr(p);
  RMaxValue anchor(rational(rng, size));
  auto count = static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(size) + 2));
  std::vector<Rational> kinks = sortedPoints(rng, Rational(1), pr, count, size);
  if (kinks.empty()) return CircleFunction::constant(p, anchor.value());

  // Arc lengths over a common denominator: integers a_i with sum t_i a_i = 0.
  std::vector<Rational> bounds{Rational(1)};
  bounds.insert(bounds.end(), kinks.begin(), kinks.end());
  bounds.push_back(pr);
  std::vector<Integer> lengths;
  Integer common(1);
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    Rational length = bounds[i + 1] - bounds[i];
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), length.get_den_mpz_t());
  }
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    Rational scaled = (bounds[i + 1] - bounds[i]) * common;
    lengths.push_back(scaled.get_num());
  }

  std::size_t arcs = lengths.size();
  std::size_t a = static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(arcs) - 1));
  std::size_t b = static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(arcs) - 2));
  if (b >= a) ++b;
  Integer g, x, y;
  extendedGcd(lengths[a], lengths[b], g, x, y);
  std::vector<Integer> t(arcs);
  Integer rest(0);
  for (std::size_t i = 0; i < arcs; ++i) {
    if (i == a || i == b) continue;
    t[i] = g * toInteger(rng.range(-bound(size), bound(size)));
    rest += t[i] * lengths[i];
  }
  // t_a a_a + t_b a_b = -rest, plus a random multiple of the kernel direction.
  Integer k = -rest / g;
  Integer free = toInteger(rng.range(-2, 2));
  t[a] = k * x + free * (lengths[b] / g);
  t[b] = k * y - free * (lengths[a] / g);

  auto shift = static_cast<unsigned long>(rng.range(0, std::min<std::int64_t>(size, 3)));
  std::vector<HpScalar> slopes;
  for (const auto& ti : t) slopes.emplace_back(p, ti, shift);
  return buildCircleFunction(p, std::move(kinks), std::move(slopes), anchor);
}

Divisor degreeZeroDivisor(Rng& rng, Prime p, unsigned size, unsigned long chi) {
  Rational pr(p);
  Divisor d(p);
  HpScalar h(p);
  auto pairs = rng.range(0, std::max<std::int64_t>(1, size / 2));
  for (std::int64_t i = 0; i < pairs; ++i) {
    // Points beta and beta + delta with delta in H_p: c beta - c (beta + delta) = -c delta.
    HpScalar delta(p, toInteger(rng.range(1, 3)), static_cast<unsigned long>(rng.range(1, 3)));
    if (delta.value() >= pr - 1) continue;
    Rational beta = rationalBetween(rng, Rational(1), pr - delta.value(), size);
    HpScalar c = hpScalar(rng, p, size);
    d.add(beta, c);
    d.add(beta + delta.value(), -c);
  }
  auto singles = rng.range(0, std::max<std::int64_t>(1, size / 2));
  for (std::int64_t i = 0; i < singles; ++i) {
    HpScalar point(p, toInteger(rng.range(1, 8)), static_cast<unsigned long>(rng.range(0, 3)));
    if (point.value() <= 0) continue;
    d.add(point.value(), hpScalar(rng, p, size));
  }
  // Balance the degree at the class of 1; the difference lies in H_p.
  Rational deg = degree(d);
  d.add(Rational(1), -HpScalar::fromRational(p, deg));

  // {gamma -> e, 1 -> -gamma e} with gamma = 1 + 1/p has degree 0 and chi = -chi(e).
  if (p > 2) {
    unsigned long m = p - 1;
    unsigned long have = chiDivisor(d);
    unsigned long need = (have + m - chi % m) % m;  // chi(e) such that have - chi(e) = chi
    if (need != 0) {
      HpScalar e(p, Integer(static_cast<long>(need)) + Integer(static_cast<long>(m)) * toInteger(rng.range(-2, 2)));
      HpScalar gamma = HpScalar(p, Integer(static_cast<long>(p + 1)), 1);
      d.add(gamma.value(), e);
      d.add(Rational(1), -(gamma * e));
    }
  }
  return d;
}

Divisor smallDivisor(Rng& rng, Prime p, unsigned points, std::int64_t bound) {
  Rational pr(p);
  Divisor d(p);
  auto count = rng.range(1, std::max<std::int64_t>(1, points));
  for (std::int64_t i = 0; i < count; ++i) {
    Rational where = rng.chance(1, 3) ? Rational(1) : rationalBetween(rng, Rational(1), pr, 3);
    HpScalar c(p, toInteger(rng.range(-bound * static_cast<std::int64_t>(p), bound * static_cast<std::int64_t>(p))), 1);
    if (!c.isZero()) d.add(where, c);
  }
  return d;
}

}  // namespace scaling::gen
