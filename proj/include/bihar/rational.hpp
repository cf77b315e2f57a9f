// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bihar {

using BigInt = boost::multiprecision::cpp_int;
/// Exact rational; always normalized (den > 0, gcd(|num|, den) = 1).
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

class AlgebraError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline int sign(const Rational& r) { return r.sign(); }

inline Rational make_rational(std::int64_t n, std::int64_t d = 1) {
  if (d == 0) throw AlgebraError("zero denominator");
  // boost rejects a negative denominator outright
  if (d < 0) return Rational(-BigInt(n), -BigInt(d));
  return Rational(BigInt(n), BigInt(d));
}

inline BigInt pow10(unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= 10;
  return r;
}

/// Parses "p", "p/q", or a plain decimal such as "-0.25" or "1e-3" exactly.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t first = 0;
  while (first < s.size() && std::isspace(static_cast<unsigned char>(s[first]))) ++first;
  s = s.substr(first);
  if (s.empty()) throw AlgebraError("empty rational literal");

  auto parse_int = [](const std::string& t) -> BigInt {
    if (t.empty() || t == "-" || t == "+") throw AlgebraError("malformed integer '" + t + "'");
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    for (std::size_t j = i; j < t.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(t[j])))
        throw AlgebraError("malformed integer '" + t + "'");
    // strip leading zeros: the BigInt string constructor reads "0…" as octal
    std::size_t k = t.find_first_not_of('0', i);
    std::string body = k == std::string::npos ? "0" : t.substr(k);
    BigInt v(body);
    return t[0] == '-' ? BigInt(-v) : v;
  };

  if (auto slash = s.find('/'); slash != std::string::npos) {
    BigInt n = parse_int(s.substr(0, slash));
    BigInt d = parse_int(s.substr(slash + 1));
    if (d == 0) throw AlgebraError("zero denominator in '" + s + "'");
    if (d < 0) return Rational(BigInt(-n), BigInt(-d));
    return Rational(n, d);
  }

  std::string mantissa = s;
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    mantissa = s.substr(0, e);
    try {
      exponent = std::stol(s.substr(e + 1));
    } catch (const std::exception&) {
      throw AlgebraError("malformed exponent in '" + s + "'");
    }
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
    negative = mantissa[0] == '-';
    mantissa = mantissa.substr(1);
  }
  std::string digits;
  long frac = 0;
  bool seen_dot = false;
  for (char c : mantissa) {
    if (c == '.') {
      if (seen_dot) throw AlgebraError("malformed decimal '" + s + "'");
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_dot) ++frac;
    } else {
      throw AlgebraError("malformed number '" + s + "'");
    }
  }
  if (digits.empty()) throw AlgebraError("malformed number '" + s + "'");
  std::size_t nz = digits.find_first_not_of('0');
  BigInt n(nz == std::string::npos ? std::string("0") : digits.substr(nz));
  if (negative) n = -n;
  long shift = exponent - frac;
  if (shift >= 0) return Rational(n * pow10(static_cast<unsigned>(shift)));
  return Rational(n, pow10(static_cast<unsigned>(-shift)));
}

/// "num/den" form, denominator always printed.
inline std::string to_fraction_string(const Rational& r) {
  return num(r).str() + "/" + den(r).str();
}

/// Short form: "num" when integral, else "num/den".
inline std::string to_string(const Rational& r) {
  if (den(r) == 1) return num(r).str();
  return to_fraction_string(r);
}

/// Exact conversion of a finite double (a dyadic rational).
inline Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw AlgebraError("non-finite double");
  int exp = 0;
  double m = std::frexp(x, &exp);
  // m in [0.5, 1): scale to a 53-bit integer.
  auto mi = static_cast<std::int64_t>(std::ldexp(std::fabs(m), 53));
  exp -= 53;
  BigInt n(mi);
  Rational r = exp >= 0 ? Rational(BigInt(n << exp)) : Rational(n, BigInt(BigInt(1) << (-exp)));
  return m < 0 ? Rational(-r) : r;
}

inline BigInt isqrt(const BigInt& n) {
  if (n < 0) throw AlgebraError("isqrt of negative integer");
  return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const BigInt& n, BigInt* root = nullptr) {
  if (n < 0) return false;
  BigInt r = isqrt(n);
  if (root) *root = r;
  return r * r == n;
}

/// floor(r) for rationals.
inline BigInt floor(const Rational& r) {
  BigInt q = num(r) / den(r);  // truncates toward zero
  if (num(r) < 0 && q * den(r) != num(r)) q -= 1;
  return q;
}

inline BigInt ceil(const Rational& r) { return -floor(-r); }

}  // namespace bihar
