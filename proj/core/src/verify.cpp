#include "scaling/verify.hpp"

#include <sstream>

#include "scaling/error.hpp"
#include "scaling/io.hpp"
#include "scaling/riemann_roch.hpp"

namespace scaling::verify {

namespace {

using Outcome_ = std::optional<std::string>;

constexpr unsigned kMaxSize = 8;
constexpr int kShrinkAttempts = 64;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t caseSeed(std::uint64_t seed, std::size_t property, std::size_t index) {
  return splitmix(splitmix(seed ^ splitmix(property + 1)) ^ (index * 0xD1B54A32D192ED03ULL));
}

Prime pick(gen::Rng& rng, std::initializer_list<Prime> primes) {
  auto i = static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(primes.size()) - 1));
  return *(primes.begin() + static_cast<long>(i));
}

template <typename T>
std::string show(const T& v) {
  return toString(v);
}

/// Semiring laws for (join, mul) with the given zero and one.
template <typename T, typename Join, typename Mul>
Outcome_ semiringLaws(const T& a, const T& b, const T& c, const T& zero, const T& one, Join join, Mul mul) {
  auto fail = [&](const char* law) -> Outcome_ {
    return std::string(law) + " fails for a = " + show(a) + ", b = " + show(b) + ", c = " + show(c);
  };
  if (!(join(a, a) == a)) return fail("join idempotence");
  if (!(join(a, b) == join(b, a))) return fail("join commutativity");
  if (!(join(join(a, b), c) == join(a, join(b, c)))) return fail("join associativity");
  if (!(mul(a, b) == mul(b, a))) return fail("times commutativity");
  if (!(mul(mul(a, b), c) == mul(a, mul(b, c)))) return fail("times associativity");
  if (!(mul(a, join(b, c)) == join(mul(a, b), mul(a, c)))) return fail("distributivity");
  if (!(join(a, zero) == a)) return fail("zero is neutral for join");
  if (!(mul(a, zero) == zero)) return fail("zero absorbs");
  if (!(mul(a, one) == a)) return fail("one is neutral for times");
  return std::nullopt;
}

Interval randomDomain(gen::Rng& rng) {
  if (rng.chance(1, 2)) return Interval::halfLine();
  Rational a = makeRational(Integer(static_cast<long>(rng.range(0, 4))), Integer(static_cast<long>(rng.range(1, 3))));
  return Interval::closed(a, a + Rational(static_cast<long>(rng.range(1, 6))));
}

/// An interior point, often one of the kinks.
Rational interiorPoint(gen::Rng& rng, const Interval& domain, const std::vector<Rational>& kinks, unsigned size) {
  if (!kinks.empty() && rng.chance(1, 2)) return kinks[static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(kinks.size()) - 1))];
  Rational hi = domain.upper ? *domain.upper : domain.lower + 4 * Rational(static_cast<long>(size + 1));
  return gen::rationalBetween(rng, domain.lower, hi, size);
}

std::vector<Property> buildProperties() {
  std::vector<Property> all;
  auto add = [&](std::string name, std::size_t cost, Check check) {
    all.push_back(Property{std::move(name), cost, std::move(check)});
  };

  // -- scalars --------------------------------------------------------------
  add("scalars/hp-ring", 1, [](gen::Rng& rng, unsigned size, const Operations&) -> Outcome_ {
    Prime p = pick(rng, {2, 3, 5, 7});
    HpScalar a = gen::hpScalar(rng, p, size), b = gen::hpScalar(rng, p, size), c = gen::hpScalar(rng, p, size);
    if ((a + b).value() != a.value() + b.value() || (a * b).value() != a.value() * b.value()) {
      return "arithmetic disagrees with Q for " + show(a) + ", " + show(b);
    }
    if (!((a + b) + c == a + (b + c)) || !(a * (b + c) == a * b + a * c)) {
      return "ring laws fail for " + show(a) + ", " + show(b) + ", " + show(c);
    }
    if (!(parseHpScalar(p, show(a)) == a)) return "string round trip fails for " + show(a);
    return std::nullopt;
  });
  add("scalars/padic-abs", 1, [](gen::Rng& rng, unsigned size, const Operations&) -> Outcome_ {
    Prime p = pick(rng, {2, 3, 5, 7});
    HpScalar a = gen::hpScalar(rng, p, size), b = gen::hpScalar(rng, p, size);
    if (padicAbs(a * b) != padicAbs(a) * padicAbs(b)) return "not multiplicative at " + show(a) + ", " + show(b);
    if (padicAbs(a + b) > std::max(padicAbs(a), padicAbs(b))) return "not ultrametric at " + show(a) + ", " + show(b);
    return std::nullopt;
  });
  add("scalars/chi-ring-map", 1, [](gen::Rng& rng, unsigned size, const Operations&) -> Outcome_ {
    Prime p = pick(rng, {2, 3, 5, 7});
    HpScalar a = gen::hpScalar(rng, p, size), b = gen::hpScalar(rng, p, size);
    unsigned long m = p - 1;
    if (chiScalar(a + b) != (chiScalar(a) + chiScalar(b)) % m || chiScalar(a * b) != (chiScalar(a) * chiScalar(b)) % m) {
      return "chi is not a ring map at " + show(a) + ", " + show(b) + " (p = " + std::to_string(p) + ")";
    }
    return std::nullopt;
  });
  add("scalars/rmax-semiring", 1, [](gen::Rng& rng, unsigned size, const Operations&) -> Outcome_ {
    RMaxValue a = gen::rmax(rng, size), b = gen::rmax(rng, size), c = gen::rmax(rng, size);
    return semiringLaws(a, b, c, RMaxValue::bottom(), RMaxValue(0), join, times);
  });

  // -- germ algebras ----------------------------------------------------------
  add("germ/rh-semiring", 1, [](gen::Rng& rng, unsigned size, const Operations& ops) -> Outcome_ {
    Germ a = gen::germ(rng, size), b = gen::germ(rng, size), c = gen::germ(rng, size);
    if (rng.chance(1, 3)) b.x = a.x;  // ties exercise the slope rule
    return semiringLaws(a, b, c, Germ::bottom(), Germ::make(RMaxValue(0), 0, 0), ops.germJoin, germMul);
  });
  add("germ/zh-semiring", 1, [](gen::Rng& rng, unsigned size, const Operations& ops) -> Outcome_ {
    LexElement a = gen::lexElement(rng, size), b = gen::lexElement(rng, size), c = gen::lexElement(rng, size);
    if (rng.chance(1, 3)) b.x = a.x;
    return semiringLaws(a, b, c, LexElement::bottom(), LexElement::make(RMaxValue(0), 0), ops.lexJoin, lexMul);
  });
  add("germ/eval-homomorphism", 1, [](gen::Rng& rng, unsigned size, const Operations& ops) -> Outcome_ {
    Germ a = gen::germ(rng, size), b = gen::germ(rng, size);
    LexElement u = gen::lexElement(rng, size), v = gen::lexElement(rng, size);
    if (!(evalChar(ops.germJoin(a, b)) == join(evalChar(a), evalChar(b))) ||
        !(evalChar(germMul(a, b)) == times(evalChar(a), evalChar(b)))) {
      return "evalChar fails at " + show(a) + ", " + show(b);
    }
    if (!(evalCharLex(ops.lexJoin(u, v)) == join(evalCharLex(u), evalCharLex(v))) ||
        !(evalCharLex(lexMul(u, v)) == times(evalCharLex(u), evalCharLex(v)))) {
      return "lex evaluation fails at " + show(u) + ", " + show(v);
    }
    return std::nullopt;
  });
  add("germ/zh-total-order", 1, [](gen::Rng& rng, unsigned size, const Operations& ops) -> Outcome_ {
    LexElement a = gen::lexElement(rng, size), b = gen::lexElement(rng, size);
    if (rng.chance(1, 3)) b.x = a.x;
    LexElement j = ops.lexJoin(a, b);
    if (!(j == a || j == b) || j < a || j < b) return "join is not the lexicographic max of " + show(a) + ", " + show(b);
    return std::nullopt;
  });

  // -- newton-legendre ----------------------------------------------------------
  add("newton/semiring", 1, [](gen::Rng& rng, unsigned size, const Operations&) -> Outcome_ {
    SlopeGroup g = gen::slopeGroup(rng);
    NewtonPolygon a = gen::polygon(rng, g, size), b = gen::polygon(rng, g, size), c = gen::polygon(rng, g, size);
    return semiringLaws(a, b, c, NewtonPolygon::zero(g), NewtonPolygon::unit(g), polyJoin, polyTimes);
  });
  add("newton/legendre-round-trip", 1, [](gen::Rng& rng, unsigned size, const Operations&) -> Outcome_ {
    NewtonPolygon a = gen::polygon(rng, gen::slopeGroup(rng), size);
    if (!(fromFunction(legendre(a)) == a)) return "fromFunction(legendre(N)) != N for N = " + show(a);
    return std::nullopt;
  });
  add("newton/legendre-morphism", 1, [](gen::Rng& rng, unsigned size, const Operations&) -> Outcome_ {
    SlopeGroup g = gen::slopeGroup(rng);
    NewtonPolygon a = gen::polygon(rng, g, size), b = gen::polygon(rng, g, size);
    NewtonPolygon j = polyJoin(a, b), t = polyTimes(a, b);
    if (!(legendre(j) == pointwiseJoin(legendre(a), legendre(b))) ||
        !(legendre(t) == pointwiseTimes(legendre(a), legendre(b)))) {
      return "legendre is not a morphism at " + show(a) + ", " + show(b);
    }
    for (int i = 0; i < 10; ++i) {
      Rational lambda = gen::rationalBetween(rng, Rational(-1), Rational(4 * static_cast<long>(size) + 4), size);
      if (lambda < 0) lambda = 0;
      if (!(legendre(j).evalAt(lambda) == join(a.support(lambda), b.support(lambda))) ||
          !(legendre(t).evalAt(lambda) == times(a.support(lambda), b.support(lambda)))) {
        return "pointwise check fails at lambda = " + show(lambda) + " for " + show(a) + ", " + show(b);
      }
    }
    return std::nullopt;
  });
  add("newton/cancellation", 1, [](gen::Rng& rng, unsigned size, const Operations&) -> Outcome_ {
    SlopeGroup g = gen::slopeGroup(rng);
    NewtonPolygon n = gen::polygon(rng, g, size);
    if (n.isZero()) n = NewtonPolygon::unit(g);
    NewtonPolygon m = gen::polygon(rng, g, size);
    // Near misses: m' shares most of m.
    std::vector<Vertex> raw = m.vertices();
    if (!raw.empty() && rng.chance(1, 2)) raw.pop_back();
    raw.push_back(Vertex{gen::groupElement(rng, g, size), gen::rational(rng, size)});
    NewtonPolygon m2 = reduce(g, raw);
    if (!(m == m2) && polyTimes(n, m) == polyTimes(n, m2)) {
      return "N M = N M' with M != M' for N = " + show(n) + ", M = " + show(m) + ", M' = " + show(m2);
    }
    return std::nullopt;
  });
  add("newton/json-round-trip", 1, [](gen::Rng& rng, unsigned size, const Operations&) -> Outcome_ {
    NewtonPolygon a = gen::polygon(rng, gen::slopeGroup(rng), size);
    if (!(io::parsePolygon(io::toJson(a)) == a)) return "JSON round trip fails for " + show(a);
    return std::nullopt;
  });

  // -- piecewise-affine ---------------------------------------------------------
  add("piecewise/pointwise-ops", 1, [](gen::Rng& rng, unsigned size, const Operations&) -> Outcome_ {
    SlopeGroup g = gen::slopeGroup(rng);
    Interval d = randomDomain(rng);
    PiecewiseAffine f = gen::function(rng, g, d, size), h = gen::function(rng, g, d, size);
    PiecewiseAffine j = pointwiseJoin(f, h), t = pointwiseTimes(f, h);
    for (int i = 0; i < 10; ++i) {
      Rational lambda = interiorPoint(rng, d, j.kinks(), size);
      if (!(j.evalAt(lambda) == join(f.evalAt(lambda), h.evalAt(lambda))) ||
          !(t.evalAt(lambda) == times(f.evalAt(lambda), h.evalAt(lambda)))) {
        return "pointwise ops fail at " + show(lambda) + " for " + show(f) + ", " + show(h);
      }
    }
    return std::nullopt;
  });
  add("piecewise/germ-homomorphism", 1, [](gen::Rng& rng, unsigned size, const Operations& ops) -> Outcome_ {
    SlopeGroup g = gen::slopeGroup(rng);
    Interval d = randomDomain(rng);
    PiecewiseAffine f = gen::function(rng, g, d, size), h = gen::function(rng, g, d, size);
    std::vector<Rational> kinks = f.kinks();
    kinks.insert(kinks.end(), h.kinks().begin(), h.kinks().end());
    PiecewiseAffine joined = pointwiseJoin(f, h);
    kinks.insert(kinks.end(), joined.kinks().begin(), joined.kinks().end());
    Rational lambda = interiorPoint(rng, d, kinks, size);
    if (!(germAt(pointwiseJoin(f, h), lambda) == ops.germJoin(germAt(f, lambda), germAt(h, lambda)))) {
      return "germ of the join differs at " + show(lambda) + " for " + show(f) + ", " + show(h);
    }
    if (!(germAt(pointwiseTimes(f, h), lambda) == germMul(germAt(f, lambda), germAt(h, lambda)))) {
      return "germ of the product differs at " + show(lambda) + " for " + show(f) + ", " + show(h);
    }
    return std::nullopt;
  });
  add("piecewise/gamma-composition", 1, [](gen::Rng& rng, unsigned size, const Operations&) -> Outcome_ {
    SlopeGroup g = gen::slopeGroup(rng);
    PiecewiseAffine f = gen::function(rng, g, randomDomain(rng), size);
    auto n = static_cast<unsigned long>(rng.range(1, 6)), m = static_cast<unsigned long>(rng.range(1, 6));
    if (!(gammaAction(n * m, f) == gammaAction(n, gammaAction(m, f)))) {
      return "gamma_" + std::to_string(n * m) + " != gamma_" + std::to_string(n) + " gamma_" + std::to_string(m) +
             " on " + show(f);
    }
    return std::nullopt;
  });
  add("piecewise/json-round-trip", 1, [](gen::Rng& rng, unsigned size, const Operations&) -> Outcome_ {
    PiecewiseAffine f = gen::function(rng, gen::slopeGroup(rng), randomDomain(rng), size);
    if (!(io::parseFunction(io::toJson(f)) == f)) return "JSON round trip fails for " + show(f);
    return std::nullopt;
  });

  // -- curve-cp ---------------------------------------------------------------
  add("curve/conservation", 1, [](gen::Rng& rng, unsigned size, const Operations& ops) -> Outcome_ {
    Prime p = pick(rng, {2, 3, 5});
    CircleFunction f = gen::circleFunction(rng, p, size);
    Divisor d = ops.divisorOf(f);
    if (degree(d) != 0 || chiDivisor(d) != 0) {
      return "divisor " + show(d) + " of " + show(f) + " has degree " + show(degree(d)) + ", chi " +
             std::to_string(chiDivisor(d));
    }
    return std::nullopt;
  });
  add("curve/divisor-homomorphism", 1, [](gen::Rng& rng, unsigned size, const Operations& ops) -> Outcome_ {
    Prime p = pick(rng, {2, 3, 5});
    CircleFunction f = gen::circleFunction(rng, p, size), g = gen::circleFunction(rng, p, size);
    if (!(ops.divisorOf(circleTimes(f, g)) == ops.divisorOf(f) + ops.divisorOf(g))) {
      return "(f g) != (f) + (g) for " + show(f) + ", " + show(g);
    }
    if (!(ops.divisorOf(circleInverse(f)) == -ops.divisorOf(f))) return "(1/f) != -(f) for " + show(f);
    return std::nullopt;
  });
  add("curve/periodic-join", 1, [](gen::Rng& rng, unsigned size, const Operations&) -> Outcome_ {
    Prime p = pick(rng, {2, 3, 5});
    CircleFunction f = gen::circleFunction(rng, p, size), g = gen::circleFunction(rng, p, size);
    CircleFunction j = circleJoin(f, g);
    for (int i = 0; i < 5; ++i) {
      Rational lambda = gen::rationalBetween(rng, Rational(1, 10), Rational(4 * static_cast<long>(p)), size);
      if (!(j.evalAt(lambda) == join(f.evalAt(lambda), g.evalAt(lambda))) ||
          !(f.evalAt(lambda) == f.evalAt(lambda * p))) {
        return "join or periodicity fails at " + show(lambda) + " for " + show(f) + ", " + show(g);
      }
    }
    return std::nullopt;
  });
  add("curve/jacobian-principal", 1, [](gen::Rng& rng, unsigned size, const Operations& ops) -> Outcome_ {
    Prime p = pick(rng, {2, 3, 5, 7});
    Divisor d = gen::degreeZeroDivisor(rng, p, size, 0);
    PrincipalityReport report = isPrincipal(d);
    if (!report.witness) return "deg 0, chi 0 divisor " + show(d) + " has no witness";
    if (!(ops.divisorOf(*report.witness) == d)) return "witness of " + show(d) + " has divisor " + show(ops.divisorOf(*report.witness));
    return std::nullopt;
  });
  add("curve/jacobian-obstruction", 1, [](gen::Rng& rng, unsigned size, const Operations&) -> Outcome_ {
    Prime p = pick(rng, {3, 5, 7});
    auto chi = static_cast<unsigned long>(rng.range(1, static_cast<std::int64_t>(p) - 2));
    Divisor d = gen::degreeZeroDivisor(rng, p, size, chi);
    PrincipalityReport report = isPrincipal(d);
    if (chiDivisor(d) != chi || report.witness || !report.chiObstructs || report.degreeObstructs) {
      return "divisor " + show(d) + " with chi " + std::to_string(chi) + " was not rejected by chi alone";
    }
    return std::nullopt;
  });
  add("curve/jacobian-classes", 1, [](gen::Rng& rng, unsigned size, const Operations&) -> Outcome_ {
    Prime p = pick(rng, {3, 5, 7});
    auto a = static_cast<unsigned long>(rng.range(0, static_cast<std::int64_t>(p) - 2));
    auto b = static_cast<unsigned long>(rng.range(0, static_cast<std::int64_t>(p) - 2));
    Divisor d = gen::degreeZeroDivisor(rng, p, size, a), e = gen::degreeZeroDivisor(rng, p, size, b);
    if (isPrincipal(d - e).principal() != (a == b)) {
      return "classes " + std::to_string(a) + ", " + std::to_string(b) + " misjudged for " + show(d) + ", " + show(e);
    }
    return std::nullopt;
  });
  add("curve/json-round-trip", 1, [](gen::Rng& rng, unsigned size, const Operations&) -> Outcome_ {
    Prime p = pick(rng, {2, 3, 5, 7});
    CircleFunction f = gen::circleFunction(rng, p, size);
    Divisor d = gen::degreeZeroDivisor(rng, p, size, 0);
    if (!(io::parseCircleFunction(io::toJson(f)) == f)) return "JSON round trip fails for " + show(f);
    if (!(io::parseDivisor(io::toJson(d)) == d)) return "JSON round trip fails for " + show(d);
    return std::nullopt;
  });

  // -- riemann-roch -------------------------------------------------------------
  add("rr/monotone", 50, [](gen::Rng& rng, unsigned, const Operations&) -> Outcome_ {
    Prime p = pick(rng, {2, 3});
    Divisor d = gen::smallDivisor(rng, p, 3, 2);
    Divisor e(p);
    e.add(gen::rationalBetween(rng, Rational(1), Rational(static_cast<long>(p)), 3), HpScalar(p, Integer(1), 1));
    for (unsigned n = 0; n < 3; ++n) {
      std::int64_t here = dimFiltration(d, n), next = dimFiltration(d, n + 1), bigger = dimFiltration(d + e, n);
      if (next < here) return "dim drops from n = " + std::to_string(n) + " for " + show(d);
      if (bigger < here) return "dim drops when adding " + show(e) + " to " + show(d) + " at n = " + std::to_string(n);
    }
    return std::nullopt;
  });
  add("rr/negative-degree", 50, [](gen::Rng& rng, unsigned, const Operations&) -> Outcome_ {
    Prime p = pick(rng, {2, 3});
    Divisor d = gen::smallDivisor(rng, p, 3, 2);
    if (degree(d) >= 0) d = -d;
    if (degree(d) == 0) return std::nullopt;
    for (unsigned n = 0; n <= 3; ++n) {
      if (dimFiltration(d, n) != 0) return "deg < 0 divisor " + show(d) + " has sections at n = " + std::to_string(n);
    }
    return std::nullopt;
  });
  add("rr/formula", 100, [](gen::Rng& rng, unsigned, const Operations&) -> Outcome_ {
    Prime p = pick(rng, {2, 3});
    Divisor d = gen::smallDivisor(rng, p, 3, 1);
    RiemannRochReport report = rrCheck(d, p == 2 ? 6 : 4);
    if (!report.holds) {
      return "D = " + show(d) + ": difference " + show(report.difference) + ", degree " + show(report.degree) +
             ", tolerance " + show(report.tolerance);
    }
    return std::nullopt;
  });

  return all;
}

Outcome_ guarded(const Property& property, gen::Rng& rng, unsigned size, const Operations& ops) {
  try {
    return property.check(rng, size, ops);
  } catch (const std::exception& e) {
    return std::string("threw: ") + e.what();
  }
}

}  // namespace

std::vector<std::string> knownFaults() { return {"germ-join-tie", "lex-join-order", "divisor-wrap"}; }

Operations withFault(const std::string& fault) {
  Operations ops{scaling::germJoin, scaling::lexJoin,
                 [](const CircleFunction& f) { return scaling::divisorOf(f); }};
  if (fault.empty()) return ops;
  if (fault == "germ-join-tie") {
    // Inner envelope on ties instead of the outer one.
    ops.germJoin = [](const Germ& a, const Germ& b) {
      if (a.isBottom() || b.isBottom() || !(a.x == b.x)) return scaling::germJoin(a, b);
      return Germ::make(a.x, std::min(a.hplus, b.hplus), std::max(a.hminus, b.hminus));
    };
  } else if (fault == "lex-join-order") {
    // Compares the slope before the value.
    ops.lexJoin = [](const LexElement& a, const LexElement& b) {
      if (a.isBottom()) return b;
      if (b.isBottom()) return a;
      if (a.h != b.h) return a.h > b.h ? a : b;
      return a.x < b.x ? b : a;
    };
  } else if (fault == "divisor-wrap") {
    // Forgets the factor p in the coefficient at the wrap point.
    ops.divisorOf = [](const CircleFunction& f) {
      Divisor d = scaling::divisorOf(f);
      if (!f.isBottom()) d.add(Rational(1), f.slopes().back().timesInteger(Integer(static_cast<long>(f.prime() - 1))));
      return d;
    };
  } else {
    std::string names;
    for (const auto& n : knownFaults()) names += (names.empty() ? "" : ", ") + n;
    throw DomainError("unknown fault \"" + fault + "\" (known: " + names + ")");
  }
  return ops;
}

const std::vector<Property>& properties() {
  static const std::vector<Property> all = buildProperties();
  return all;
}

std::optional<std::string> runProperty(const Property& property, std::uint64_t seed, std::size_t index,
                                       std::size_t cases, const Operations& ops) {
  for (std::size_t i = 0; i < cases; ++i) {
    unsigned size = 1 + static_cast<unsigned>(i % kMaxSize);
    gen::Rng rng(caseSeed(seed, index, i));
    Outcome_ failure = guarded(property, rng, size, ops);
    if (!failure) continue;

    // Shrink: the smallest size with a counterexample among a few fresh draws.
    std::string best = *failure;
    unsigned bestSize = size;
    for (unsigned smaller = 1; smaller < size && bestSize == size; ++smaller) {
      for (int attempt = 0; attempt < kShrinkAttempts; ++attempt) {
        gen::Rng retry(caseSeed(seed ^ (0xA5A5A5A5ULL + smaller), index, static_cast<std::size_t>(attempt)));
        if (Outcome_ small = guarded(property, retry, smaller, ops)) {
          best = *small;
          bestSize = smaller;
          break;
        }
      }
    }
    std::ostringstream out;
    out << "case " << i << " (size " << size << ")";
    if (bestSize < size) out << ", shrunk to size " << bestSize;
    out << ": " << best;
    return out.str();
  }
  return std::nullopt;
}

Result run(const Options& options) {
  Operations ops = withFault(options.fault);
  Result result;
  std::ostringstream report;
  report << "verify seed=" << options.seed << " count=" << options.count;
  if (!options.fault.empty()) report << " fault=" << options.fault;
  report << '\n';
  if (options.count == 0) {
    report << "warning: no cases (count = 0)\n";
    result.report = report.str();
    return result;
  }
  const auto& all = properties();
  for (std::size_t index = 0; index < all.size(); ++index) {
    const Property& property = all[index];
    if (property.name.rfind(options.filter, 0) != 0) continue;
    Outcome outcome;
    outcome.name = property.name;
    outcome.cases = (options.count + property.costDivisor - 1) / property.costDivisor;
    if (auto failure = runProperty(property, options.seed, index, outcome.cases, ops)) {
      outcome.ok = false;
      outcome.reproducer = *failure;
      ++result.failures;
    }
    report << (outcome.ok ? "[ok]   " : "[FAIL] ") << outcome.name;
    for (std::size_t pad = outcome.name.size(); pad < 30; ++pad) report << ' ';
    report << outcome.cases << " cases\n";
    if (!outcome.ok) report << "       reproducer: " << outcome.reproducer << '\n';
    result.outcomes.push_back(std::move(outcome));
  }
  report << "summary: " << result.outcomes.size() << " properties, " << result.failures << " failures\n";
  result.report = report.str();
  return result;
}

}  // namespace scaling::verify
