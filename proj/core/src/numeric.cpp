#include "npc/numeric.hpp"

#include <limits>
#include <sstream>

namespace npc {

namespace {

constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();
constexpr __int128 kMin = std::numeric_limits<std::int64_t>::min();

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

}  // namespace

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("int64 addition overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("int64 subtraction overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("int64 multiplication overflow");
  return r;
}

std::int64_t to_int64(const Integer& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw ArithmeticOverflow("integer " + value.str() + " does not fit in 64 bits");
  }
  return value.convert_to<std::int64_t>();
}

Rational64::Rational64(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("Rational64: zero denominator");
  *this = from_wide(n, d);
}

Rational64 Rational64::from_wide(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n > kMax || n < kMin || d > kMax) throw ArithmeticOverflow("Rational64 overflow");
  Rational64 q;
  q.num_ = static_cast<std::int64_t>(n);
  q.den_ = n == 0 ? 1 : static_cast<std::int64_t>(d);
  return q;
}

Rational64 operator+(const Rational64& a, const Rational64& b) {
  if (a.den_ == 1 && b.den_ == 1) return Rational64(checked_add(a.num_, b.num_));
  return Rational64::from_wide(static_cast<__int128>(a.num_) * b.den_ +
                                   static_cast<__int128>(b.num_) * a.den_,
                               static_cast<__int128>(a.den_) * b.den_);
}

Rational64 operator-(const Rational64& a, const Rational64& b) {
  if (a.den_ == 1 && b.den_ == 1) return Rational64(checked_sub(a.num_, b.num_));
  return Rational64::from_wide(static_cast<__int128>(a.num_) * b.den_ -
                                   static_cast<__int128>(b.num_) * a.den_,
                               static_cast<__int128>(a.den_) * b.den_);
}

Rational64 operator*(const Rational64& a, const Rational64& b) {
  if (a.den_ == 1 && b.den_ == 1) return Rational64(checked_mul(a.num_, b.num_));
  return Rational64::from_wide(static_cast<__int128>(a.num_) * b.num_,
                               static_cast<__int128>(a.den_) * b.den_);
}

Rational64 operator/(const Rational64& a, const Rational64& b) {
  if (b.num_ == 0) throw std::domain_error("Rational64: division by zero");
  return Rational64::from_wide(static_cast<__int128>(a.num_) * b.den_,
                               static_cast<__int128>(a.den_) * b.num_);
}

Rational64 Rational64::operator-() const {
  if (num_ == std::numeric_limits<std::int64_t>::min()) throw ArithmeticOverflow("Rational64 negation");
  Rational64 q = *this;
  q.num_ = -q.num_;
  return q;
}

bool operator<(const Rational64& a, const Rational64& b) {
  return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

std::string Rational64::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rational64& q) {
  os << q.num();
  if (q.den() != 1) os << '/' << q.den();
  return os;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && (a > 0)) ++q;
  return q;
}

}  // namespace npc
