#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "sumset/errors.hpp"

namespace sumset {

namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

}  // namespace checked

// Floor and ceiling of num/den for den > 0.
inline constexpr Int floor_div(Int num, Int den) {
  Int q = num / den;
  if ((num % den != 0) && (num < 0)) --q;
  return q;
}

inline constexpr Int ceil_div(Int num, Int den) {
  Int q = num / den;
  if ((num % den != 0) && (num > 0)) ++q;
  return q;
}

/// Exact rational with positive denominator, always in lowest terms.
struct Rational {
  Int num = 0;
  Int den = 1;

  constexpr Rational() = default;
  constexpr Rational(Int value) : num(value), den(1) {}  // NOLINT(implicit)
  Rational(Int n, Int d) : num(n), den(d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    if (den < 0) {
      num = checked::sub(0, num);
      den = checked::sub(0, den);
    }
    const Int g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_integer() const noexcept { return den == 1; }

  friend bool operator==(const Rational&, const Rational&) = default;

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num) * b.den;
    const __int128 rhs = static_cast<__int128>(b.num) * a.den;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(checked::sub(checked::mul(a.num, b.den), checked::mul(b.num, a.den)),
                    checked::mul(a.den, b.den));
  }

  std::string to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

/// Closed integer interval [lo, hi]; empty when hi < lo.
struct Interval {
  Int lo = 0;
  Int hi = -1;

  bool empty() const noexcept { return hi < lo; }
  Int length() const noexcept { return hi - lo; }

  friend bool operator==(const Interval&, const Interval&) = default;

  std::string to_string() const {
    return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
  }
};

}  // namespace sumset
