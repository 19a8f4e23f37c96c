#include "scaling/scalars.hpp"

#include <cctype>

#include "scaling/error.hpp"

namespace scaling {

namespace {

std::strong_ordering orderOf(int c) {
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool isIntegerLiteral(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parseInteger(std::string_view s, std::string_view whole) {
  if (!isIntegerLiteral(s)) {
    throw ParseError("malformed number \"" + std::string(whole) + "\"");
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return Integer(digits, 10);
}

/// Returns k when n == p^k, nullopt otherwise. n must be positive.
std::optional<unsigned long> logExact(Integer n, Prime p) {
  unsigned long k = 0;
  while (n > 1) {
    if (!mpz_divisible_ui_p(n.get_mpz_t(), p)) return std::nullopt;
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    ++k;
  }
  return k;
}

}  // namespace

Rational makeRational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string toString(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parseRational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parseInteger(text, text));
  Integer num = parseInteger(text.substr(0, slash), text);
  std::string_view denText = text.substr(slash + 1);
  if (!denText.empty() && (denText[0] == '-' || denText[0] == '+')) {
    throw ParseError("malformed number \"" + std::string(text) + "\"");
  }
  Integer den = parseInteger(denText, text);
  if (den == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  return makeRational(num, den);
}

bool isPrime(Prime p) {
  if (p < 2) return false;
  for (Prime d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

unsigned long valuation(const Integer& n, Prime p) {
  if (n == 0) throw DomainError("valuation of zero");
  Integer m = abs(n);
  unsigned long v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    ++v;
  }
  return v;
}

Rational powerOf(Prime p, long k) {
  Integer power;
  mpz_ui_pow_ui(power.get_mpz_t(), p, static_cast<unsigned long>(k < 0 ? -k : k));
  return k < 0 ? Rational(Integer(1), power) : Rational(power);
}

Integer floorOf(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceilOf(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// ---------------------------------------------------------------------------
// HpScalar

HpScalar::HpScalar(Prime p) : HpScalar(p, Integer(0), 0) {}

HpScalar::HpScalar(Prime p, Integer num, unsigned long pexp)
    : p_(p), num_(std::move(num)), pexp_(pexp) {
  if (p_ < 2) throw DomainError("H_p requires p >= 2");
  normalize();
}

void HpScalar::normalize() {
  if (num_ == 0) {
    pexp_ = 0;
    return;
  }
  while (pexp_ > 0 && mpz_divisible_ui_p(num_.get_mpz_t(), p_)) {
    mpz_divexact_ui(num_.get_mpz_t(), num_.get_mpz_t(), p_);
    --pexp_;
  }
}

void HpScalar::requireSamePrime(const HpScalar& other) const {
  if (p_ != other.p_) {
    throw MismatchError("H_p scalars over different primes " + std::to_string(p_) + " and " +
                        std::to_string(other.p_));
  }
}

std::optional<HpScalar> HpScalar::tryFromRational(Prime p, const Rational& q) {
  if (p < 2) throw DomainError("H_p requires p >= 2");
  auto k = logExact(q.get_den(), p);
  if (!k) return std::nullopt;
  return HpScalar(p, q.get_num(), *k);
}

HpScalar HpScalar::fromRational(Prime p, const Rational& q) {
  auto h = tryFromRational(p, q);
  if (!h) {
    throw DomainError(toString(q) + " is not in H_" + std::to_string(p) +
                      " (denominator is not a power of " + std::to_string(p) + ")");
  }
  return *h;
}

Rational HpScalar::value() const {
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), p_, pexp_);
  return makeRational(num_, den);
}

long HpScalar::valuation() const {
  return static_cast<long>(scaling::valuation(num_, p_)) - static_cast<long>(pexp_);
}

HpScalar HpScalar::operator-() const { return HpScalar(p_, -num_, pexp_); }

HpScalar& HpScalar::operator+=(const HpScalar& other) {
  requireSamePrime(other);
  Integer a = num_;
  Integer b = other.num_;
  unsigned long e = std::max(pexp_, other.pexp_);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), p_, e - pexp_);
  a *= scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), p_, e - other.pexp_);
  b *= scale;
  num_ = a + b;
  pexp_ = e;
  normalize();
  return *this;
}

HpScalar& HpScalar::operator-=(const HpScalar& other) { return *this += -other; }

HpScalar& HpScalar::operator*=(const HpScalar& other) {
  requireSamePrime(other);
  num_ *= other.num_;
  pexp_ += other.pexp_;
  normalize();
  return *this;
}

HpScalar HpScalar::timesPowerOfP(long k) const {
  if (k >= 0) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), p_, static_cast<unsigned long>(k));
    return HpScalar(p_, num_ * scale, pexp_);
  }
  return HpScalar(p_, num_, pexp_ + static_cast<unsigned long>(-k));
}

HpScalar HpScalar::timesInteger(const Integer& m) const { return HpScalar(p_, num_ * m, pexp_); }

std::optional<HpScalar> HpScalar::divideExact(const Integer& divisor) const {
  if (divisor == 0) throw DomainError("division by zero");
  if (!mpz_divisible_p(num_.get_mpz_t(), divisor.get_mpz_t())) return std::nullopt;
  Integer q;
  mpz_divexact(q.get_mpz_t(), num_.get_mpz_t(), divisor.get_mpz_t());
  return HpScalar(p_, q, pexp_);
}

bool operator==(const HpScalar& a, const HpScalar& b) {
  a.requireSamePrime(b);
  return a.num_ == b.num_ && a.pexp_ == b.pexp_;
}

std::strong_ordering operator<=>(const HpScalar& a, const HpScalar& b) {
  a.requireSamePrime(b);
  return orderOf(cmp(a.value(), b.value()));
}

Rational padicAbs(const HpScalar& h) {
  if (h.isZero()) return Rational(0);
  return powerOf(h.prime(), -h.valuation());
}

unsigned long chiScalar(const HpScalar& h) {
  // p ≡ 1 (mod p-1), so dividing by p^k does not change the residue.
  Prime modulus = h.prime() - 1;
  if (modulus == 1) return 0;
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), h.numerator().get_mpz_t(), modulus);
  return r.get_ui();
}

std::string toString(const HpScalar& h) {
  if (h.pexp() == 0) return h.numerator().get_str();
  return h.numerator().get_str() + "/" + std::to_string(h.prime()) + "^" + std::to_string(h.pexp());
}

HpScalar parseHpScalar(Prime p, std::string_view text) {
  auto slash = text.find('/');
  auto caret = text.find('^');
  if (slash != std::string_view::npos && caret != std::string_view::npos && caret > slash) {
    Integer num = parseInteger(text.substr(0, slash), text);
    Integer base = parseInteger(text.substr(slash + 1, caret - slash - 1), text);
    Integer expo = parseInteger(text.substr(caret + 1), text);
    if (base != p) {
      throw ParseError("\"" + std::string(text) + "\" uses base " + base.get_str() +
                       " but the ambient prime is " + std::to_string(p));
    }
    if (expo < 0 || !expo.fits_ulong_p()) {
      throw ParseError("bad exponent in \"" + std::string(text) + "\"");
    }
    return HpScalar(p, num, expo.get_ui());
  }
  Rational q = parseRational(text);
  auto h = HpScalar::tryFromRational(p, q);
  if (!h) {
    throw ParseError("\"" + std::string(text) + "\" is not in H_" + std::to_string(p));
  }
  return *h;
}

// ---------------------------------------------------------------------------
// RMaxValue

const Rational& RMaxValue::value() const {
  if (!value_) throw DomainError("value of -inf requested");
  return *value_;
}

bool operator==(const RMaxValue& a, const RMaxValue& b) {
  if (a.isBottom() || b.isBottom()) return a.isBottom() == b.isBottom();
  return *a.value_ == *b.value_;
}

std::strong_ordering operator<=>(const RMaxValue& a, const RMaxValue& b) {
  if (a.isBottom() || b.isBottom()) {
    if (a.isBottom() && b.isBottom()) return std::strong_ordering::equal;
    return a.isBottom() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return orderOf(cmp(*a.value_, *b.value_));
}

RMaxValue join(const RMaxValue& a, const RMaxValue& b) { return a < b ? b : a; }

RMaxValue times(const RMaxValue& a, const RMaxValue& b) {
  if (a.isBottom() || b.isBottom()) return RMaxValue::bottom();
  return RMaxValue(Rational(a.value() + b.value()));
}

std::string toString(const RMaxValue& v) { return v.isBottom() ? "-inf" : toString(v.value()); }

RMaxValue parseRMaxValue(std::string_view text) {
  if (text == "-inf") return RMaxValue::bottom();
  return RMaxValue(parseRational(text));
}

}  // namespace scaling
