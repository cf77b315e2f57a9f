// SPDX-License-Identifier: Apache-2.0
#pragma once

// Finite-difference oracle for jet validation. Independent of the jet code
// path: it only evaluates expressions pointwise in long double.

#include "bihar/expression.hpp"

#include <cmath>
#include <functional>
#include <limits>

namespace bihar {

struct FdResult {
  long double value = 0;
  /// Set when the step is small enough for rounding to dominate.
  bool cancellation_warning = false;
};

namespace detail {

inline long double binomial(int n, int k) {
  long double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Tensor product of central difference stencils Σ_j (−1)^j C(k,j) f(x + (k/2 − j)h) / h^k,
// each O(h²) accurate.
inline long double central_tensor(const std::function<long double(const std::vector<long double>&)>& f,
                                  const std::vector<long double>& x, const MultiIndex& alpha,
                                  long double h) {
  std::vector<long double> p = x;
  long double total = 0;
  std::function<void(std::size_t, long double)> rec = [&](std::size_t v, long double weight) {
    if (v == alpha.size()) {
      total += weight * f(p);
      return;
    }
    int k = alpha[v];
    if (k == 0) {
      rec(v + 1, weight);
      return;
    }
    long double save = p[v];
    for (int j = 0; j <= k; ++j) {
      p[v] = save + (static_cast<long double>(k) / 2 - j) * h;
      long double w = ((j % 2) ? -1.0L : 1.0L) * binomial(k, j) / std::pow(h, static_cast<long double>(k));
      rec(v + 1, weight * w);
    }
    p[v] = save;
  };
  rec(0, 1.0L);
  return total;
}

}  // namespace detail

/// Central finite differences with one Richardson level: error O(step⁴).
inline FdResult fd_derivative(const std::function<long double(const std::vector<long double>&)>& f,
                              const std::vector<double>& point, const MultiIndex& alpha, double step) {
  if (step <= 0) throw DomainError("finite-difference step must be positive");
  int order = 0;
  for (int a : alpha) order += a;
  if (order > 4) throw OrderError("finite-difference oracle supports total order ≤ 4");
  std::vector<long double> x(point.begin(), point.end());
  long double h = step;
  long double coarse = detail::central_tensor(f, x, alpha, h);
  long double fine = detail::central_tensor(f, x, alpha, h / 2);
  FdResult r;
  r.value = (4 * fine - coarse) / 3;
  if (order > 0) {
    long double scale = std::fabs(f(x)) + 1;
    long double rounding = std::numeric_limits<long double>::epsilon() * scale *
                           std::pow(2.0L, 2 * order) / std::pow(h / 2, static_cast<long double>(order));
    r.cancellation_warning = rounding > 1e-7L;
  }
  return r;
}

inline FdResult fd_derivative(const Expr& e, const std::vector<double>& point, const MultiIndex& alpha,
                              double step) {
  auto f = [&e](const std::vector<long double>& p) { return evaluate<long double>(e, p); };
  return fd_derivative(f, point, alpha, step);
}

}  // namespace bihar
