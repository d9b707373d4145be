// Copyright 2026 The drg authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DRG_RATIONAL_HPP
#define DRG_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "drg/errors.hpp"

namespace drg {

/// Overflow-checked 64-bit integer helpers. All derived parameters are
/// computed with these so integrality tests stay exact.
inline int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

/// Checked a^e for e >= 0.
inline int64_t checked_pow(int64_t a, int64_t e) {
  int64_t r = 1;
  for (int64_t i = 0; i < e; ++i) r = checked_mul(r, a);
  return r;
}

/// Exact rational number on checked 64-bit integers, always normalized with
/// a positive denominator.
struct Rat {
  int64_t num = 0;
  int64_t den = 1;

  constexpr Rat() = default;
  Rat(int64_t n) : num(n), den(1) {}  // NOLINT: implicit by design
  Rat(int64_t n, int64_t d) : num(n), den(d) {
    if (den == 0) throw Error("rational with zero denominator");
    if (den < 0) {
      num = checked_sub(0, num);
      den = checked_sub(0, den);
    }
    normalize();
  }

  void normalize() {
    const int64_t g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_integer() const { return den == 1; }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend Rat operator+(const Rat& x, const Rat& y) {
    return Rat(checked_add(checked_mul(x.num, y.den), checked_mul(y.num, x.den)),
               checked_mul(x.den, y.den));
  }
  friend Rat operator-(const Rat& x, const Rat& y) {
    return Rat(checked_sub(checked_mul(x.num, y.den), checked_mul(y.num, x.den)),
               checked_mul(x.den, y.den));
  }
  friend Rat operator*(const Rat& x, const Rat& y) {
    return Rat(checked_mul(x.num, y.num), checked_mul(x.den, y.den));
  }
  friend Rat operator/(const Rat& x, const Rat& y) {
    if (y.num == 0) throw Error("rational division by zero");
    return Rat(checked_mul(x.num, y.den), checked_mul(x.den, y.num));
  }
  Rat& operator+=(const Rat& y) { return *this = *this + y; }
  Rat& operator-=(const Rat& y) { return *this = *this - y; }
  Rat& operator*=(const Rat& y) { return *this = *this * y; }
  Rat& operator/=(const Rat& y) { return *this = *this / y; }

  // Comparisons cross-multiply in 128 bits, so they never overflow.
  friend bool operator==(const Rat& x, const Rat& y) {
    return static_cast<__int128>(x.num) * y.den == static_cast<__int128>(y.num) * x.den;
  }
  friend bool operator!=(const Rat& x, const Rat& y) { return !(x == y); }
  friend bool operator<(const Rat& x, const Rat& y) {
    return static_cast<__int128>(x.num) * y.den < static_cast<__int128>(y.num) * x.den;
  }
  friend bool operator>(const Rat& x, const Rat& y) { return y < x; }
  friend bool operator<=(const Rat& x, const Rat& y) { return !(y < x); }
  friend bool operator>=(const Rat& x, const Rat& y) { return !(x < y); }
};

/// Exact power with nonnegative exponent.
inline Rat rat_pow(const Rat& x, int64_t e) {
  Rat r(1);
  for (int64_t i = 0; i < e; ++i) r *= x;
  return r;
}

/// "p/q" or "p"; used for all numeric CLI flags so caps stay exact.
Rat parse_rational(std::string_view text);

/// Canonical text form: "p/q", or just "p" when integral.
std::string to_string(const Rat& r);

}  // namespace drg

#endif  // DRG_RATIONAL_HPP
