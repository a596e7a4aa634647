#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace npc {

using Integer = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;

/// Thrown by the fixed-width arithmetic below when a result does not fit in 64 bits.
/// Callers that can recompute in arbitrary precision catch it and retry.
class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Narrow an arbitrary-precision integer, throwing ArithmeticOverflow if it does not fit.
std::int64_t to_int64(const Integer& value);

/// Exact rational with 64-bit numerator and denominator, always reduced and with
/// positive denominator. Every operation either returns the exact result or throws
/// ArithmeticOverflow.
class Rational64 {
 public:
  constexpr Rational64() = default;
  constexpr Rational64(std::int64_t n) : num_(n) {}  // NOLINT: implicit by design of field code
  Rational64(std::int64_t n, std::int64_t d);

  [[nodiscard]] std::int64_t num() const { return num_; }
  [[nodiscard]] std::int64_t den() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_ == 0; }
  [[nodiscard]] int sign() const { return (num_ > 0) - (num_ < 0); }

  friend Rational64 operator+(const Rational64& a, const Rational64& b);
  friend Rational64 operator-(const Rational64& a, const Rational64& b);
  friend Rational64 operator*(const Rational64& a, const Rational64& b);
  friend Rational64 operator/(const Rational64& a, const Rational64& b);
  Rational64 operator-() const;

  Rational64& operator+=(const Rational64& o) { return *this = *this + o; }
  Rational64& operator-=(const Rational64& o) { return *this = *this - o; }
  Rational64& operator*=(const Rational64& o) { return *this = *this * o; }
  Rational64& operator/=(const Rational64& o) { return *this = *this / o; }

  friend bool operator==(const Rational64& a, const Rational64& b) = default;
  friend bool operator<(const Rational64& a, const Rational64& b);
  friend bool operator>(const Rational64& a, const Rational64& b) { return b < a; }
  friend bool operator<=(const Rational64& a, const Rational64& b) { return !(b < a); }
  friend bool operator>=(const Rational64& a, const Rational64& b) { return !(a < b); }

  [[nodiscard]] BigRational to_big() const { return BigRational(num_, den_); }
  [[nodiscard]] std::string str() const;

 private:
  static Rational64 from_wide(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational64& q);

inline int sign_of(const Rational64& q) { return q.sign(); }
inline int sign_of(const BigRational& q) { return q.sign(); }
inline bool is_zero(const Rational64& q) { return q.is_zero(); }
inline bool is_zero(const BigRational& q) { return q.is_zero(); }
inline BigRational to_big(const Rational64& q) { return q.to_big(); }
inline BigRational to_big(const BigRational& q) { return q; }

/// Run `fn.template operator()<Rational64>()` and fall back to arbitrary precision
/// if any intermediate overflows. Both instantiations must compute the same value.
template <class Fn>
auto with_exact_field(Fn&& fn) {
  try {
    return fn.template operator()<Rational64>();
  } catch (const ArithmeticOverflow&) {
    return fn.template operator()<BigRational>();
  }
}

/// floor(a / b) for b > 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
/// ceil(a / b) for b > 0.
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

}  // namespace npc
