// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace bihar {

struct GaussRule {
  std::vector<long double> nodes;
  std::vector<long double> weights;
};

/// n-point Gauss–Legendre rule on [lo, hi]; nodes by Newton iteration on P_n.
inline GaussRule gauss_legendre(int n, long double lo, long double hi) {
  if (n < 1) throw std::invalid_argument("quadrature needs at least one node");
  GaussRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  const long double pi = 3.141592653589793238462643383279502884L;
  long double half = (hi - lo) / 2, mid = (hi + lo) / 2;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    long double x = std::cos(pi * (i + 0.75L) / (n + 0.5L));
    long double dp = 0;
    for (int it = 0; it < 100; ++it) {
      long double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1;
      dp = n * (x * p1 - p0) / (x * x - 1);
      long double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-19L) break;
    }
    {
      long double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
    }
    long double w = 2 / ((1 - x * x) * dp * dp);
    r.nodes[i] = mid - half * x;
    r.nodes[n - 1 - i] = mid + half * x;
    r.weights[i] = r.weights[n - 1 - i] = w * half;
  }
  return r;
}

/// Visits every node of the tensor-product rule in lexicographic order.
inline void for_each_node(const std::vector<GaussRule>& rules,
                          const std::function<void(const std::vector<long double>&, long double)>& f) {
  std::vector<long double> x(rules.size());
  std::function<void(std::size_t, long double)> rec = [&](std::size_t d, long double w) {
    if (d == rules.size()) {
      f(x, w);
      return;
    }
    for (std::size_t i = 0; i < rules[d].nodes.size(); ++i) {
      x[d] = rules[d].nodes[i];
      rec(d + 1, w * rules[d].weights[i]);
    }
  };
  rec(0, 1.0L);
}

}  // namespace bihar
