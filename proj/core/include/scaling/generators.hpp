#pragma once
// Seeded random instances of every domain type, for property testing.
//
// Draws use a fixed engine (mt19937_64) and a bounded draw defined here, so a
// seed reproduces the same instances on every platform. `size` bounds the
// magnitudes and lengths; smaller sizes give simpler counterexamples.
#include <cstdint>
#include <random>

#include "scaling/curve.hpp"
#include "scaling/germ.hpp"
#include "scaling/newton.hpp"

namespace scaling::gen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi);
  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den);

 private:
  std::mt19937_64 engine_;
};

/// a/b with |a| <= 4 size and 1 <= b <= size + 1.
Rational rational(Rng& rng, unsigned size);
/// A rational in the open interval (lo, hi).
Rational rationalBetween(Rng& rng, const Rational& lo, const Rational& hi, unsigned size);
/// a/p^k with |a| <= 4 size, k <= min(size, 3).
HpScalar hpScalar(Rng& rng, Prime p, unsigned size);
/// An element of the group (p = 0: scale * Z).
Rational groupElement(Rng& rng, const SlopeGroup& group, unsigned size);
/// Bottom with probability 1/10.
RMaxValue rmax(Rng& rng, unsigned size);

/// Random group, H_p with p in {2, 3, 5} or Z, with scale 1 or a small rational.
SlopeGroup slopeGroup(Rng& rng);
/// Reduced polygon with up to size + 2 raw points; the zero polygon with probability 1/20.
NewtonPolygon polygon(Rng& rng, const SlopeGroup& group, unsigned size);
/// Any (not necessarily convex) function with slopes in group on the domain.
PiecewiseAffine function(Rng& rng, const SlopeGroup& group, const Interval& domain, unsigned size);

Germ germ(Rng& rng, unsigned size);
LexElement lexElement(Rng& rng, unsigned size);

/// Periodic function with kinks at arbitrary rationals of (1, p); closure is
/// solved exactly with an extended gcd step. Never bottom.
CircleFunction circleFunction(Rng& rng, Prime p, unsigned size);

/// Degree 0 divisor with prescribed chi, mixing arbitrary rational points
/// (in pairs whose difference lies in H_p) with points of H_p.
Divisor degreeZeroDivisor(Rng& rng, Prime p, unsigned size, unsigned long chi);
/// Small divisor for Riemann-Roch runs: at most `points` points, coefficients
/// bounded by `bound` in absolute value with denominators up to p.
Divisor smallDivisor(Rng& rng, Prime p, unsigned points, std::int64_t bound);

}  // namespace scaling::gen
