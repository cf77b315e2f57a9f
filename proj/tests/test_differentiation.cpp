// SPDX-License-Identifier: Apache-2.0
#include "bihar/expression.hpp"
#include "bihar/finite_difference.hpp"
#include "bihar/scalar.hpp"
#include "oracle_values.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

using namespace bihar;
using testing_support::Gen;
using testing_support::q;

namespace {

MultiIndex two(int a, int b) { return {a, b}; }

std::vector<MultiIndex> all_indices(int vars, int max_order) {
  std::vector<MultiIndex> out;
  MultiIndex a(vars, 0);
  std::function<void(int, int)> rec = [&](int v, int left) {
    if (v == vars) {
      out.push_back(a);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      a[v] = k;
      rec(v + 1, left - k);
    }
    a[v] = 0;
  };
  rec(0, max_order);
  return out;
}

}  // namespace

TEST(Jet, MatchesIndependentPartials) {
  Expr u0 = Expr::coord(0), u1 = Expr::coord(1);
  Expr f = Expr(Rational(3, 4)) * cos(u0) * cos(u1);
  Jet<double> j = jet_at<double>(f, {0.3, 0.7}, 4);
  for (const auto& p : oracle::kCosCos) EXPECT_NEAR(j.partial(two(p.a1, p.a2)), p.value, 1e-14);
}

TEST(Jet, OrderSixMatchesIndependentPartials) {
  Expr u0 = Expr::coord(0), u1 = Expr::coord(1);
  Expr g = sqrt(Expr(Rational(6, 7))) * sin(u0) * cos(u1);
  Jet<double> j = jet_at<double>(g, {1.1, 0.4}, 6);
  for (const auto& p : oracle::kSphereOrder6) EXPECT_NEAR(j.partial(two(p.a1, p.a2)), p.value, 1e-13);
  Jet<Extended> je = jet_at<Extended>(g, {Extended(1.1), Extended(0.4)}, 6);
  for (const auto& p : oracle::kSphereOrder6) EXPECT_NEAR(to_double(je.partial(two(p.a1, p.a2))), p.value, 1e-15);
}

TEST(Jet, CoefficientConventionIsTaylor) {
  // u0² u1 at the origin: coefficient 1, derivative 2.
  Expr e = pow(Expr::coord(0), 2) * Expr::coord(1);
  Jet<double> j = jet_at<double>(e, {0.0, 0.0}, 3);
  EXPECT_DOUBLE_EQ(j.coeff(two(2, 1)), 1.0);
  EXPECT_DOUBLE_EQ(j.partial(two(2, 1)), 2.0);
  EXPECT_DOUBLE_EQ(j.partial(two(1, 2)), 0.0);
}

TEST(Jet, TruncationEqualsDirectLowerOrder) {
  auto spec = hypersphere(5, q(6, 7));
  std::vector<double> u = {0.9, 1.3, 2.0, 0.4};
  auto hi = jet_at<double>(spec.chart, u, 6);
  for (int lower = 0; lower < 6; ++lower) {
    auto direct = jet_at<double>(spec.chart, u, lower);
    for (std::size_t c = 0; c < hi.size(); ++c) {
      Jet<double> t = hi[c].truncated(lower);
      ASSERT_EQ(t.order(), direct[c].order());
      for (const auto& a : all_indices(4, lower)) EXPECT_EQ(t.coeff(a), direct[c].coeff(a));
    }
  }
}

TEST(Jet, ErrorsOnBadOrderAndDomain) {
  Expr u = Expr::coord(0);
  EXPECT_THROW(jet_at<double>(u, {0.1}, 7), OrderError);
  EXPECT_THROW(jet_at<double>(sqrt(u), {-1.0}, 2), DomainError);
  EXPECT_THROW(jet_at<double>(Expr(1) / u, {0.0}, 2), DomainError);
  EXPECT_THROW(jet_at<double>(Expr::coord(2), {0.1, 0.2}, 2), DomainError);
  Jet<double> j = jet_at<double>(sin(u), {0.1}, 2);
  EXPECT_THROW(j.partial({3}), OrderError);
}

TEST(FiniteDifference, Examples) {
  Expr u = Expr::coord(0);
  FdResult s = fd_derivative(sin(u), {0.0}, {1}, 1e-3);
  EXPECT_NEAR(static_cast<double>(s.value), 1.0, 1e-9);
  FdResult c = fd_derivative(Expr(Rational(5, 3)), {0.4}, {2}, 1e-2);
  EXPECT_NEAR(static_cast<double>(c.value), 0.0, 1e-12);
  EXPECT_THROW(fd_derivative(u, {0.0}, {1}, 0.0), DomainError);
  EXPECT_THROW(fd_derivative(u, {0.0}, {5}, 0.1), OrderError);
  EXPECT_TRUE(fd_derivative(sin(u), {0.3}, {4}, 1e-5).cancellation_warning);
  EXPECT_FALSE(fd_derivative(sin(u), {0.3}, {4}, 2e-2).cancellation_warning);
}

TEST(FiniteDifference, SecondOrderChartComponentMatchesJet) {
  auto spec = hypersphere(5, q(1, 2));
  std::vector<double> u = {0.7, 1.9, 1.2, -0.5};
  auto j = jet_at<double>(spec.chart, u, 2);
  for (std::size_t c = 0; c < spec.chart.size(); ++c)
    for (const auto& a : all_indices(4, 2)) {
      double fd = static_cast<double>(fd_derivative(spec.chart[c], u, a, 1e-3).value);
      EXPECT_NEAR(j[c].partial(a), fd, 1e-6);
    }
}

// 500 random probes over catalog charts, components, points and multi-indices.
TEST(FiniteDifference, JetsAgreeOnRandomCatalogProbes) {
  auto specs = testing_support::catalog_specs();
  Gen g(500);
  std::vector<std::vector<MultiIndex>> indices;
  for (const auto& s : specs) indices.push_back(all_indices(s.m, 4));
  int probes = 0;
  while (probes < 500) {
    std::size_t si = static_cast<std::size_t>(g.integer(0, static_cast<long>(specs.size()) - 1));
    const auto& spec = specs[si];
    auto plan = sample(spec, 1, static_cast<std::uint64_t>(g.integer(0, 1 << 30)));
    const auto& u = plan.points[0];
    std::size_t c = static_cast<std::size_t>(g.integer(0, spec.n));
    const auto& alpha = indices[si][static_cast<std::size_t>(g.integer(0, static_cast<long>(indices[si].size()) - 1))];
    double jet = jet_at<double>(spec.chart[c], u, 4).partial(alpha);
    FdResult fd = fd_derivative(spec.chart[c], u, alpha, 2e-2);
    ASSERT_FALSE(fd.cancellation_warning);
    EXPECT_LE(std::fabs(jet - static_cast<double>(fd.value)), 1e-5 * (1 + std::fabs(jet)))
        << spec.name << " component " << c << " at probe " << probes;
    ++probes;
  }
}

// Order-6 jets against fourth-order differences of a jet-computed second derivative.
TEST(FiniteDifference, OrderSixThroughComposedField) {
  auto spec = clifford(2, 3, q(1, 3));
  auto plan = sample(spec, 6, 3);
  Gen g(6);
  auto inner = all_indices(spec.m, 2);
  auto outer = all_indices(spec.m, 4);
  for (const auto& u : plan.points) {
    for (int rep = 0; rep < 10; ++rep) {
      std::size_t c = static_cast<std::size_t>(g.integer(0, spec.n));
      MultiIndex beta, alpha;
      do beta = inner[static_cast<std::size_t>(g.integer(0, static_cast<long>(inner.size()) - 1))];
      while (std::accumulate(beta.begin(), beta.end(), 0) != 2);
      do alpha = outer[static_cast<std::size_t>(g.integer(0, static_cast<long>(outer.size()) - 1))];
      while (std::accumulate(alpha.begin(), alpha.end(), 0) != 4);
      MultiIndex total(spec.m);
      for (int i = 0; i < spec.m; ++i) total[i] = alpha[i] + beta[i];
      double j6 = jet_at<double>(spec.chart[c], u, 6).partial(total);
      auto field = [&](const std::vector<long double>& p) {
        std::vector<long double> x(p.begin(), p.end());
        return jet_at<long double>(spec.chart[c], x, 2).partial(beta);
      };
      double fd = static_cast<double>(fd_derivative(field, u, alpha, 2e-2).value);
      EXPECT_LE(std::fabs(j6 - fd), 1e-5 * (1 + std::fabs(j6)));
    }
  }
}

TEST(Jet, ExtendedAgreesWithDouble) {
  auto spec = clifford(2, 3, q(1, 3));
  std::vector<double> u = sample(spec, 1, 9).points[0];
  auto jd = jet_at<double>(spec.chart, u, 6);
  auto je = jet_at<Extended>(spec.chart, to_scalars<Extended>(u), 6);
  for (std::size_t c = 0; c < jd.size(); ++c)
    for (const auto& a : all_indices(spec.m, 6)) EXPECT_NEAR(jd[c].partial(a), to_double(je[c].partial(a)), 1e-11);
}
