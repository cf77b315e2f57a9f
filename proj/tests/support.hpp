// SPDX-License-Identifier: Apache-2.0
#pragma once

// Shared fixtures for the unit tests: the catalog specs exercised everywhere
// and a small seeded generator for property tests.

#include "bihar/catalog.hpp"
#include "bihar/geometry.hpp"

#include <random>
#include <string>
#include <vector>

namespace testing_support {

using namespace bihar;

inline Surd q(long n, long d = 1) { return Surd(Rational(n) / Rational(d)); }

/// Every catalog family at the parameter values the checks use.
inline std::vector<ImmersionSpec> catalog_specs() {
  return {
      hypersphere(4, q(1, 3)),
      hypersphere(5, q(1, 2)),
      hypersphere(5, q(6, 7)),
      hypersphere(7, q(6, 7)),
      clifford(1, 3, q(1, 2)),
      clifford(2, 3, q(1, 3)),
      clifford(2, 2, q(1, 3)),
      equatorial_in_hypersphere(2, 4, q(2, 3)),
      product_in_torus(1, 2, 1, 2, q(1, 3)),
  };
}

/// Deterministic generator for hand-rolled property tests.
class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  Rational rational(long max_num, long max_den) {
    return Rational(integer(-max_num, max_num)) / Rational(integer(1, max_den));
  }
  std::mt19937_64& engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

/// A latitude circle at polar angle θ with cos θ = c, sin θ = s (c² + s² = 1).
inline ImmersionSpec latitude_circle(const Rational& c, const Rational& s) {
  Expr t = Expr::coord(0);
  std::vector<Expr> chart = {Expr(s) * cos(t), Expr(s) * sin(t), Expr(c)};
  return custom_spec("latitude", 1, 2, chart, {{-3.141592653589793, 3.141592653589793, false, false}}, false);
}

}  // namespace testing_support
