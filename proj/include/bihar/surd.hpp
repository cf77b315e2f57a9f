// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "bihar/interval.hpp"
#include "bihar/rational.hpp"

#include <json.hpp>

#include <cmath>
#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace bihar {

namespace detail {

// Splits n > 0 as f^2 * k with k squarefree. Trial division stops once
// i^3 exceeds the cofactor: what is left then has at most two prime factors,
// so it is squarefree unless it is a perfect square.
inline void split_square_factor(BigInt n, BigInt& f, BigInt& k) {
  f = 1;
  k = 1;
  constexpr long kMaxTrials = 20'000'000;
  long trials = 0;
  for (BigInt i = 2; i * i * i <= n; i += (i == 2 ? 1 : 2)) {
    if (++trials > kMaxTrials) throw AlgebraError("radicand too large to canonicalize");
    unsigned e = 0;
    while (n % i == 0) {
      n /= i;
      ++e;
    }
    for (unsigned j = 0; j < e / 2; ++j) f *= i;
    if (e % 2) k *= i;
  }
  BigInt r;
  if (n > 1) {
    if (is_perfect_square(n, &r))
      f *= r;
    else
      k *= n;
  }
}

}  // namespace detail

/// Exact real p + q·√d over the rationals, kept canonical: d is a squarefree
/// integer ≥ 2, or q = d = 0 for rational values.
class Surd {
public:
  Surd() = default;
  Surd(const Rational& p) : p_(p) {}  // NOLINT: implicit widening from Q
  Surd(int p) : p_(p) {}              // NOLINT
  Surd(const Rational& p, const Rational& q, const Rational& d) { assign(p, q, d); }

  static Surd sqrt_of(const Rational& r) { return Surd(0, 1, r); }

  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }
  const Rational& d() const { return d_; }
  bool is_rational() const { return q_.sign() == 0; }

  /// Radicand compatibility: both lie in Q(√d) for a common d.
  bool same_field(const Surd& o) const { return is_rational() || o.is_rational() || d_ == o.d_; }

  int sign() const {
    int sp = p_.sign();
    int sq = q_.sign();
    if (sq == 0) return sp;
    if (sp == 0 || sp == sq) return sq;
    // p and q√d have opposite signs: compare p² with q²d.
    Rational diff = p_ * p_ - q_ * q_ * d_;
    if (diff.sign() == 0) return 0;  // impossible for squarefree d, kept for safety
    return diff.sign() > 0 ? sp : sq;
  }

  Surd conjugate() const {
    Surd r = *this;
    r.q_ = -r.q_;
    return r;
  }

  /// Norm p² − q²d, the product with the conjugate.
  Rational norm() const { return p_ * p_ - q_ * q_ * d_; }

  friend Surd operator-(const Surd& a) {
    Surd r = a;
    r.p_ = -r.p_;
    r.q_ = -r.q_;
    return r;
  }
  friend Surd operator+(const Surd& a, const Surd& b) {
    const Rational& d = a.is_rational() ? b.d_ : a.d_;
    require_same_field(a, b);
    return Surd(a.p_ + b.p_, a.q_ + b.q_, (a.q_ + b.q_).sign() == 0 ? Rational(0) : d);
  }
  friend Surd operator-(const Surd& a, const Surd& b) { return a + (-b); }
  friend Surd operator*(const Surd& a, const Surd& b) {
    require_same_field(a, b);
    const Rational& d = a.is_rational() ? b.d_ : a.d_;
    Rational p = a.p_ * b.p_ + a.q_ * b.q_ * d;
    Rational q = a.p_ * b.q_ + a.q_ * b.p_;
    return Surd(p, q, q.sign() == 0 ? Rational(0) : d);
  }
  friend Surd operator/(const Surd& a, const Surd& b) {
    require_same_field(a, b);
    Rational n = b.norm();
    if (n.sign() == 0) throw AlgebraError("division by zero surd");
    Surd r = a * b.conjugate();
    return Surd(r.p_ / n, r.q_ / n, r.d_);
  }
  Surd& operator+=(const Surd& o) { return *this = *this + o; }
  Surd& operator-=(const Surd& o) { return *this = *this - o; }
  Surd& operator*=(const Surd& o) { return *this = *this * o; }
  Surd& operator/=(const Surd& o) { return *this = *this / o; }

  /// Canonical forms make structural equality coincide with value equality,
  /// since √d₁, √d₂ are Q-independent for distinct squarefree d₁, d₂.
  friend bool operator==(const Surd& a, const Surd& b) {
    return a.p_ == b.p_ && a.q_ == b.q_ && a.d_ == b.d_;
  }

  /// Certified enclosure of the value on a 10^-digits grid.
  Interval enclose(unsigned digits) const {
    if (is_rational()) return Interval(p_);
    Rational aq = q_.sign() < 0 ? Rational(-q_) : q_;
    auto guard = static_cast<unsigned>(floor(aq).str().size()) + 2;
    Interval s = isqrt_interval(d_, digits + guard);
    return (Interval(p_) + Interval(q_) * s).rounded(digits + 1);
  }

  double to_double() const {
    return p_.convert_to<double>() + q_.convert_to<double>() * std::sqrt(d_.convert_to<double>());
  }

private:
  static void require_same_field(const Surd& a, const Surd& b) {
    if (!a.same_field(b))
      throw AlgebraError("surd arithmetic across radicands " + to_string(a.d_) + " and " +
                         to_string(b.d_));
  }

  void assign(const Rational& p, const Rational& q, const Rational& d) {
    if (d.sign() < 0) throw AlgebraError("negative radicand");
    p_ = p;
    q_ = 0;
    d_ = 0;
    if (q.sign() == 0 || d.sign() == 0) return;
    // √(r/s) = √(r·s)/s, then pull the square part out of r·s.
    BigInt prod = num(d) * den(d);
    BigInt f, k;
    detail::split_square_factor(prod, f, k);
    Rational coeff = q * Rational(f, den(d));
    if (k == 1) {
      p_ += coeff;
      return;
    }
    q_ = coeff;
    d_ = Rational(k);
  }

  Rational p_{0};
  Rational q_{0};
  Rational d_{0};
};

inline std::string to_string(const Surd& s) {
  if (s.is_rational()) return to_string(s.p());
  std::string out;
  if (s.p().sign() != 0) out = to_string(s.p()) + (s.q().sign() > 0 ? " + " : " - ");
  else if (s.q().sign() < 0) out = "-";
  Rational aq = s.q().sign() < 0 ? Rational(-s.q()) : s.q();
  if (aq != 1) out += to_string(aq) + "*";
  out += "sqrt(" + to_string(s.d()) + ")";
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Surd& s) { return os << to_string(s); }

/// Ordering of two surds. Same field: exact. Different radicands: certified
/// interval evaluation of the difference at width 10^-40; unordered when the
/// enclosure straddles zero.
inline std::partial_ordering compare(const Surd& a, const Surd& b) {
  if (a.same_field(b)) {
    int s = (a - b).sign();
    return s < 0 ? std::partial_ordering::less
                 : (s > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }
  return sign_of(a.enclose(41) - b.enclose(41));
}

/// Decimal rendering with |result − value| < 10^-precision.
inline std::string surd_to_float(const Surd& s, unsigned precision) {
  if (s.is_rational()) return to_decimal_string(s.p(), precision);
  return to_decimal_string(s.enclose(precision + 8).mid(), precision);
}

/// Parses "r", "sqrt(d)", "r*sqrt(d)", "p+q*sqrt(d)" and "p-q*sqrt(d)" with
/// rational r, p, q, d; spaces are ignored. Accepts everything to_string emits.
inline Surd parse_surd(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  auto open = s.find("sqrt(");
  if (open == std::string::npos) return Surd(parse_rational(s));
  if (s.back() != ')') throw AlgebraError("malformed surd '" + s + "'");
  Rational d = parse_rational(s.substr(open + 5, s.size() - open - 6));
  std::string head = s.substr(0, open);  // "", "-", "q*", "p+q*", "p-", …
  if (!head.empty() && head.back() == '*') head.pop_back();
  // split head into p and signed q at the last top-level sign that is not an exponent sign
  std::size_t cut = std::string::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if ((head[i] == '+' || head[i] == '-') && head[i - 1] != 'e' && head[i - 1] != 'E') {
      cut = i;
      break;
    }
  }
  Rational p(0);
  std::string qtext = head;
  if (cut != std::string::npos) {
    p = parse_rational(head.substr(0, cut));
    qtext = head.substr(cut);
  }
  Rational q(1);
  if (qtext == "-") q = -1;
  else if (qtext == "+" || qtext.empty()) q = 1;
  else q = parse_rational(qtext[0] == '+' ? qtext.substr(1) : qtext);
  return Surd(p, q, d);
}

inline nlohmann::ordered_json to_json(const Surd& s, unsigned approx_digits = 30) {
  nlohmann::ordered_json j;
  j["p"] = to_fraction_string(s.p());
  j["q"] = to_fraction_string(s.q());
  j["d"] = to_fraction_string(s.d());
  j["approx"] = surd_to_float(s, approx_digits);
  return j;
}

inline Surd surd_from_json(const nlohmann::ordered_json& j) {
  return Surd(parse_rational(j.at("p").get<std::string>()),
              parse_rational(j.at("q").get<std::string>()),
              parse_rational(j.at("d").get<std::string>()));
}

}  // namespace bihar
