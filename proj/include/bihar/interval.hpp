// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "bihar/rational.hpp"

#include <algorithm>
#include <compare>
#include <string>

namespace bihar {

/// Closed interval with exact rational endpoints. Every operation rounds
/// outward, so the true value of any expression evaluated on intervals lies
/// inside the result.
class Interval {
public:
  Interval() = default;
  explicit Interval(const Rational& x) : lo_(x), hi_(x) {}
  Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_) throw AlgebraError("interval with hi < lo");
  }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational mid() const { return (lo_ + hi_) / 2; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }

  friend Interval operator+(const Interval& a, const Interval& b) {
    return {a.lo_ + b.lo_, a.hi_ + b.hi_};
  }
  friend Interval operator-(const Interval& a, const Interval& b) {
    return {a.lo_ - b.hi_, a.hi_ - b.lo_};
  }
  friend Interval operator-(const Interval& a) { return {-a.hi_, -a.lo_}; }
  friend Interval operator*(const Interval& a, const Interval& b) {
    Rational c[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
    return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
  }
  friend Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw AlgebraError("interval division by an interval containing 0");
    return a * Interval(1 / b.hi_, 1 / b.lo_);
  }

  /// Rounds endpoints outward to multiples of 10^-digits; keeps rational sizes bounded.
  Interval rounded(unsigned digits) const {
    BigInt scale = pow10(digits);
    return {Rational(floor(lo_ * scale), scale), Rational(ceil(hi_ * scale), scale)};
  }

private:
  Rational lo_{0};
  Rational hi_{0};
};

/// Certified enclosure of sqrt(x) with endpoints on the 10^-digits grid.
inline Interval isqrt_interval(const Rational& x, unsigned digits) {
  if (x.sign() < 0) throw AlgebraError("sqrt of negative rational");
  BigInt scale = pow10(digits);
  Rational y = x * scale * scale;
  // floor(sqrt(floor(y))) == floor(sqrt(y)) for y >= 0.
  BigInt lo = isqrt(floor(y));
  BigInt c = ceil(y);
  BigInt hi = isqrt(c);
  if (hi * hi != c) hi += 1;
  return {Rational(lo, scale), Rational(hi, scale)};
}

inline Interval sqrt(const Interval& x, unsigned digits) {
  if (x.lo().sign() < 0) throw AlgebraError("sqrt of an interval reaching below 0");
  Interval l = isqrt_interval(x.lo(), digits);
  Interval h = isqrt_interval(x.hi(), digits);
  return {l.lo(), h.hi()};
}

/// Three-way sign of an interval; unordered when it straddles zero.
inline std::partial_ordering sign_of(const Interval& x) {
  if (x.lo().sign() > 0) return std::partial_ordering::greater;
  if (x.hi().sign() < 0) return std::partial_ordering::less;
  if (x.lo().sign() == 0 && x.hi().sign() == 0) return std::partial_ordering::equivalent;
  return std::partial_ordering::unordered;
}

/// Decimal string with exactly `digits` fractional digits, rounding the
/// rational half away from zero.
inline std::string to_decimal_string(const Rational& x, unsigned digits) {
  BigInt scale = pow10(digits);
  Rational scaled = x * scale;
  bool negative = scaled.sign() < 0;
  if (negative) scaled = -scaled;
  BigInt r = floor(scaled + Rational(1, 2));
  std::string s = r.str();
  if (digits > 0) {
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  if (negative && r != 0) s.insert(0, "-");
  return s;
}

}  // namespace bihar
