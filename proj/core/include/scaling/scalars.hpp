#pragma once

// Exact scalars: arbitrary precision rationals, the ring H_p = Z[1/p] with its
// p-adic absolute value and residue map, and the max-plus value type R_max.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace scaling {

using Integer = mpz_class;
using Rational = mpq_class;

/// Prime (or, for H_p arithmetic alone, any base >= 2).
using Prime = unsigned long;

Rational makeRational(const Integer& num, const Integer& den);

/// "a" for integers, "a/b" otherwise.
std::string toString(const Rational& q);

/// Accepts "a", "-a", "a/b" with b != 0. Throws ParseError.
Rational parseRational(std::string_view text);

bool isPrime(Prime p);

/// p-adic valuation of a nonzero integer.
unsigned long valuation(const Integer& n, Prime p);

/// p^k as an exact rational; k may be negative.
Rational powerOf(Prime p, long k);

/// Largest integer <= q, and smallest integer >= q.
Integer floorOf(const Rational& q);
Integer ceilOf(const Rational& q);

/// An element num / p^pexp of H_p = Z[1/p], kept in normal form:
/// either pexp == 0 or p does not divide num. Zero is (0, 0).
class HpScalar {
 public:
  explicit HpScalar(Prime p);
  HpScalar(Prime p, Integer num, unsigned long pexp = 0);

  /// Throws DomainError when the denominator of q is not a power of p.
  static HpScalar fromRational(Prime p, const Rational& q);
  static std::optional<HpScalar> tryFromRational(Prime p, const Rational& q);

  Prime prime() const { return p_; }
  const Integer& numerator() const { return num_; }
  unsigned long pexp() const { return pexp_; }
  bool isZero() const { return num_ == 0; }
  int sign() const { return sgn(num_); }

  Rational value() const;

  /// v_p of the value; the value must be nonzero.
  long valuation() const;

  HpScalar operator-() const;
  HpScalar& operator+=(const HpScalar& other);
  HpScalar& operator-=(const HpScalar& other);
  HpScalar& operator*=(const HpScalar& other);

  friend HpScalar operator+(HpScalar a, const HpScalar& b) { return a += b; }
  friend HpScalar operator-(HpScalar a, const HpScalar& b) { return a -= b; }
  friend HpScalar operator*(HpScalar a, const HpScalar& b) { return a *= b; }

  /// Multiplication by p^k for any integer k.
  HpScalar timesPowerOfP(long k) const;
  HpScalar timesInteger(const Integer& m) const;

  /// Division by an integer coprime to p when the quotient stays in H_p.
  std::optional<HpScalar> divideExact(const Integer& divisor) const;

  friend bool operator==(const HpScalar& a, const HpScalar& b);
  friend std::strong_ordering operator<=>(const HpScalar& a, const HpScalar& b);

 private:
  void normalize();
  void requireSamePrime(const HpScalar& other) const;

  Prime p_;
  Integer num_;
  unsigned long pexp_ = 0;
};

/// |h|_p = p^(pexp - v_p(num)) for h != 0, and 0 for h = 0.
Rational padicAbs(const HpScalar& h);

/// Canonical residue of h in H_p/(p-1)H_p = Z/(p-1)Z, in [0, p-1).
unsigned long chiScalar(const HpScalar& h);

/// "a" when pexp == 0, else "a/p^k" (for example "7/5^1").
std::string toString(const HpScalar& h);

/// Accepts "a", "a/p^k" and plain "a/b" whose denominator is a power of p.
HpScalar parseHpScalar(Prime p, std::string_view text);

/// An element of R_max = Q ∪ {-inf} with join = max and times = +.
class RMaxValue {
 public:
  RMaxValue() = default;  // bottom
  RMaxValue(Rational v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  RMaxValue(long v) : value_(Rational(v)) {}       // NOLINT(google-explicit-constructor)

  static RMaxValue bottom() { return {}; }

  bool isBottom() const { return !value_.has_value(); }
  const Rational& value() const;

  friend bool operator==(const RMaxValue& a, const RMaxValue& b);
  friend std::strong_ordering operator<=>(const RMaxValue& a, const RMaxValue& b);

 private:
  std::optional<Rational> value_;
};

RMaxValue join(const RMaxValue& a, const RMaxValue& b);
RMaxValue times(const RMaxValue& a, const RMaxValue& b);

/// "-inf" for bottom.
std::string toString(const RMaxValue& v);
RMaxValue parseRMaxValue(std::string_view text);

}  // namespace scaling
