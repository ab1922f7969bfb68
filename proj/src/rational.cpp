#include "bqa/rational.hpp"

#include <limits>
#include <ostream>

namespace bqa {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();
constexpr __int128 kMin = std::numeric_limits<std::int64_t>::min();

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(n, d);
}

Rational Rational::from_wide(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return {};
  const __int128 g = gcd128(n, d);
  n /= g;
  d /= g;
  if (n > kMax || n < kMin || d > kMax) throw std::overflow_error("rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(n);
  r.den_ = static_cast<std::int64_t>(d);
  return r;
}

Rational Rational::inverse() const {
  if (num_ == 0) throw std::domain_error("inverse of zero");
  return from_wide(den_, num_);
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == 1 && o.den_ == 1) {
    std::int64_t s;
    if (!__builtin_add_overflow(num_, o.num_, &s)) {
      num_ = s;
      return *this;
    }
  }
  const __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
  const __int128 d = static_cast<__int128>(den_) * o.den_;
  return *this = from_wide(n, d);
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (den_ == 1 && o.den_ == 1) {
    std::int64_t p;
    if (!__builtin_mul_overflow(num_, o.num_, &p)) {
      num_ = p;
      return *this;
    }
  }
  return *this = from_wide(static_cast<__int128>(num_) * o.num_,
                           static_cast<__int128>(den_) * o.den_);
}

Rational& Rational::operator/=(const Rational& o) { return *this *= o.inverse(); }

Rational operator-(const Rational& a) {
  if (a.num_ == std::numeric_limits<std::int64_t>::min()) throw std::overflow_error("rational overflow");
  Rational r = a;
  r.num_ = -r.num_;
  return r;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace bqa
