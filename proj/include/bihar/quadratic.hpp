// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "bihar/surd.hpp"

#include <vector>

namespace bihar {

enum class RootKind { none, single, pair };

/// Real roots of a rational quadratic. pair: two roots, ascending;
/// single: the double root (discriminant 0); none: discriminant < 0.
struct RootSet {
  RootKind kind = RootKind::none;
  std::vector<Surd> roots;
  Rational discriminant{0};
};

inline const char* to_string(RootKind k) {
  switch (k) {
    case RootKind::none: return "none";
    case RootKind::single: return "double";
    case RootKind::pair: return "pair";
  }
  return "?";
}

/// Solves A z² + B z + C = 0 exactly; roots live in Q(√(B² − 4AC)).
inline RootSet solve_quadratic_exact(const Rational& a, const Rational& b, const Rational& c) {
  if (a.sign() == 0) throw AlgebraError("degenerate quadratic: leading coefficient is 0");
  RootSet out;
  out.discriminant = b * b - 4 * a * c;
  if (out.discriminant.sign() < 0) return out;
  Rational inv = 1 / (2 * a);
  if (out.discriminant.sign() == 0) {
    out.kind = RootKind::single;
    out.roots.emplace_back(-b * inv);
    return out;
  }
  out.kind = RootKind::pair;
  Surd s = Surd::sqrt_of(out.discriminant);
  Surd r1 = (Surd(-b) - s) * Surd(inv);
  Surd r2 = (Surd(-b) + s) * Surd(inv);
  if (compare(r1, r2) == std::partial_ordering::greater) std::swap(r1, r2);
  out.roots = {r1, r2};
  return out;
}

/// Exact evaluation A z² + B z + C at a surd point.
inline Surd evaluate_quadratic(const Rational& a, const Rational& b, const Rational& c, const Surd& z) {
  return Surd(a) * z * z + Surd(b) * z + Surd(c);
}

}  // namespace bihar
