// SPDX-License-Identifier: Apache-2.0
#include "support.hpp"

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include <cmath>

using namespace bihar;
using testing_support::q;

TEST(Catalog, SamplingIsDeterministic) {
  auto spec = hypersphere(5, q(1, 2));
  auto a = sample(spec, 8, 42);
  auto b = sample(spec, 8, 42);
  ASSERT_EQ(a.points.size(), 8u);
  EXPECT_EQ(a.points, b.points);
  EXPECT_NE(a.points, sample(spec, 8, 43).points);
  EXPECT_THROW(sample(spec, 0, 42), BuildError);
}

TEST(Catalog, SamplesAvoidTheSingularLocus) {
  auto spec = clifford(2, 3, q(1, 3));
  auto plan = sample(spec, 32, 7);
  ASSERT_EQ(plan.points.size(), 32u);
  for (const auto& u : plan.points) {
    EXPECT_GE(singular_distance(spec, u), 1e-2);
    for (std::size_t i = 0; i < u.size(); ++i) {
      EXPECT_GT(u[i], spec.box[i].lo);
      EXPECT_LT(u[i], spec.box[i].hi);
      // direct polar-angle check for σ-chart poles
      if (spec.box[i].lo_singular) {
        EXPECT_GE(std::fabs(std::sin(u[i])), std::sin(1e-2));
      }
    }
  }
}

TEST(Catalog, EmptyFeasibleRegionIsAnError) {
  auto spec = custom_spec("thin", 1, 1, {cos(Expr::coord(0)), sin(Expr::coord(0))}, {{0.0, 0.15, false, false}}, false);
  EXPECT_THROW(sample(spec, 4, 1), BuildError);
}

// |chart| = 1, rank m, metric SPD on every catalog spec at every sample.
TEST(Catalog, ChartsLieOnTheUnitSphereWithSpdMetric) {
  for (const auto& spec : testing_support::catalog_specs()) {
    auto plan = sample(spec, 16, 42);
    for (const auto& u : plan.points) {
      auto f = frame_at<double>(spec, AmbientSpec::unit_sphere(spec.n), u);
      EXPECT_NEAR(norm(f.p), 1.0, 1e-12) << spec.name;
      Eigen::MatrixXd g(spec.m, spec.m);
      for (int i = 0; i < spec.m; ++i)
        for (int j = 0; j < spec.m; ++j) {
          g(i, j) = f.g[i][j];
          EXPECT_DOUBLE_EQ(f.g[i][j], f.g[j][i]);
        }
      Eigen::LLT<Eigen::MatrixXd> llt(g);
      EXPECT_EQ(llt.info(), Eigen::Success) << spec.name;
      Eigen::MatrixXd E(spec.n + 1, spec.m);
      for (int i = 0; i < spec.m; ++i)
        for (int a = 0; a <= spec.n; ++a) E(a, i) = f.E[i][a];
      EXPECT_EQ(Eigen::FullPivLU<Eigen::MatrixXd>(E).rank(), spec.m) << spec.name;
    }
  }
}

TEST(Catalog, RadiiSumToOne) {
  for (const auto& spec : testing_support::catalog_specs()) {
    if (spec.params.count("a2") && spec.params.count("b2")) {
      EXPECT_EQ(spec.param("a2") + spec.param("b2"), Surd(1)) << spec.name;
    }
  }
}

TEST(Catalog, DescriptorsRoundTrip) {
  auto s = build("hypersphere:n=5,a2=6/7");
  EXPECT_EQ(s.name, "hypersphere:n=5,a2=6/7");
  EXPECT_EQ(s.m, 4);
  EXPECT_EQ(s.family, Family::hypersphere);
  EXPECT_EQ(build(s.name).chart.size(), s.chart.size());
  auto c = build("clifford:n1=2,n2=3,a2=1/3");
  EXPECT_EQ(c.m, 5);
  EXPECT_EQ(c.n, 6);
  auto e = build("hypersphere:n=7,a2=exact");
  EXPECT_EQ(e.param("a2"), charm_hypersphere_a2(7));
  EXPECT_EQ(charm_hypersphere_a2(5), q(6, 7));
  EXPECT_EQ(build("hypersphere:n=7,a2=25/36 - 5/396*sqrt(649)").param("a2"), charm_hypersphere_a2(7));
  EXPECT_EQ(build("equatorial:m=2,n=4,a2=2/3").family, Family::equatorial_in_hypersphere);
  EXPECT_EQ(build("product:m1=1,n1=2,m2=1,n2=2,a2=1/3").m, 2);
}

TEST(Catalog, RejectsInvalidParameters) {
  EXPECT_THROW(build("torus:n=3"), BuildError);
  EXPECT_THROW(hypersphere(5, q(0)), BuildError);
  EXPECT_THROW(hypersphere(5, q(3, 2)), BuildError);
  EXPECT_THROW(clifford(1, 3, q(1)), BuildError);
  EXPECT_THROW(hypersphere(1, q(1, 2)), BuildError);
  EXPECT_THROW(equatorial_in_hypersphere(3, 4, q(1, 2)), BuildError);
  EXPECT_THROW(product_in_torus(2, 2, 1, 2, q(1, 2)), BuildError);
  EXPECT_THROW(build("hypersphere:n=6,a2=exact"), BuildError);
  EXPECT_THROW(build("hypersphere:a2=1/2"), BuildError);
}

TEST(Catalog, EquatorialSpecsLieInTheirContainer) {
  auto spec = equatorial_in_hypersphere(2, 4, q(2, 3));
  ASSERT_TRUE(spec.container.has_value());
  for (const auto& u : sample(spec, 16, 1).points) {
    auto p = frame_at<double>(spec, AmbientSpec::unit_sphere(spec.n), u).p;
    double x2 = 0;
    for (int a = 0; a < spec.n; ++a) x2 += p[a] * p[a];
    EXPECT_NEAR(x2, 2.0 / 3.0, 1e-14);
    EXPECT_NEAR(p[spec.n], std::sqrt(1.0 / 3.0), 1e-14);
  }
}
