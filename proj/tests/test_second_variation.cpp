// SPDX-License-Identifier: Apache-2.0
#include "bihar/suites.hpp"
#include "oracle_values.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace bihar;
using testing_support::q;

namespace {

double instability_at(const ImmersionSpec& spec, const std::vector<double>& u, double k) {
  LocalGeometry<double> geo(spec, AmbientSpec::unit_sphere(spec.n), u, 6);
  return instability_value(geo, k);
}

}  // namespace

TEST(SecondVariation, InstabilityExamples) {
  auto torus = clifford(1, 3, q(1, 2));
  for (const auto& u : sample(torus, 4, 42).points)
    EXPECT_NEAR(instability_at(torus, u, 0.0), oracle::kInstabilityTorus13, 1e-8);
  for (int n : {3, 4, 5}) {
    auto s = hypersphere(n, q(1, 2));
    double expect = -4.0 * (n - 1) * (n - 1);
    for (const auto& u : sample(s, 3, 42).points) EXPECT_NEAR(instability_at(s, u, 0.0), expect, 1e-7 * -expect);
  }
  auto s4 = hypersphere(5, q(6, 7));
  for (const auto& u : sample(s4, 3, 42).points)
    EXPECT_NEAR(instability_at(s4, u, 10.0 / 3.0), oracle::kInstabilityS4a67, 1e-8);
}

TEST(SecondVariation, HarmonicSpecsGiveZero) {
  for (auto spec : {hypersphere(4, q(1)), clifford(1, 3, q(1, 4)), product_in_torus(1, 2, 1, 2, q(1, 2))})
    for (const auto& u : sample(spec, 3, 1).points)
      for (double k : {-2.0, 0.0, 1.5}) EXPECT_LE(std::fabs(instability_at(spec, u, k)), 1e-10) << spec.name;
}

// Every certified properly biharmonic record: constant, equal to −4m²|H|⁴, negative integral.
TEST(SecondVariation, CertifiedRecordsAreUnstable) {
  std::vector<ClassificationRecord> recs = {classify_hypersphere(4, q(1, 3)), classify_hypersphere(5, q(6, 7)),
                                            classify_torus(1, 3, q(1, 2)), classify_torus(1, 2, q(1, 2)),
                                            classify_equatorial(1, 3, q(1, 2))};
  for (const auto& t : tori_for_index(1, 3, Rational(-1)).records) recs.push_back(t);
  for (const auto& rec : recs) {
    ASSERT_EQ(rec.verdict, Verdict::properly_biharmonic);
    auto spec = spec_for(rec);
    auto rep = instability_suite<double>(spec, sample(spec, 6, 42), *rec.k, 1e-5, 1e-6, 1, 4);
    EXPECT_TRUE(rep.pass) << rec.descriptor << " spread=" << rep.spread << " max=" << rep.pointwise.max;
    double m = spec.m, h2 = rec.H2->to_double();
    EXPECT_NEAR(rep.mean_value, -4 * m * m * h2 * h2, 1e-6 * 4 * m * m * h2 * h2);
    EXPECT_NEAR(rep.integral, rep.mean_value * rep.volume, 1e-6 * std::fabs(rep.integral));
  }
}

// The k-dependence of I_k is affine.
TEST(SecondVariation, AffineInIndex) {
  for (auto spec : {clifford(1, 3, q(1, 3)), hypersphere(4, q(2, 5)), product_in_torus(1, 2, 1, 2, q(1, 3))}) {
    auto V = recipe_field<double>(Bundle::ambient, 3);
    auto W = recipe_field<double>(Bundle::ambient, 4);
    for (const auto& u : sample(spec, 3, 9).points) {
      LocalGeometry<double> geo(spec, AmbientSpec::unit_sphere(spec.n), u, 6);
      double f0 = ik_pairing(geo, V, W, -1.0), f1 = ik_pairing(geo, V, W, 0.5), f2 = ik_pairing(geo, V, W, 2.0);
      double scale = std::fabs(f0) + std::fabs(f1) + std::fabs(f2) + 1;
      EXPECT_LE(std::fabs((f1 - f0) / 1.5 - (f2 - f1) / 1.5), 1e-9 * scale) << spec.name;
      double h0 = instability_value(geo, -1.0), h1 = instability_value(geo, 0.5), h2 = instability_value(geo, 2.0);
      EXPECT_LE(std::fabs((h1 - h0) - (h2 - h1)), 1e-9 * (std::fabs(h0) + std::fabs(h2) + 1));
    }
  }
}

TEST(SecondVariation, TermsSumToTotal) {
  auto spec = clifford(2, 3, q(1, 3));
  LocalGeometry<double> geo(spec, AmbientSpec::unit_sphere(spec.n), sample(spec, 1, 2).points[0], 6);
  auto V = recipe_field<double>(Bundle::normal, 5)(geo);
  auto terms = ik_terms(geo, V, 0.7);
  Vec<double> sum(spec.n + 1, 0.0);
  for (const auto& t : terms.term) sum = sum + t;
  EXPECT_LE(norm(sum - terms.total()), 1e-12);
  // only the index block depends on k
  auto t2 = ik_terms(geo, V, 1.7);
  for (int i = 0; i < 13; ++i) EXPECT_EQ(terms.term[i], t2.term[i]);
  EXPECT_LE(norm(t2.index_block() - terms.index_block() -
                 (values(geo.laplacian(Projection::pullback, V)) - double(spec.m) * values(V) +
                  values(geo.tangent_part(V)))),
            1e-10);
}

// ∫⟨I_k V, W⟩ = ∫⟨V, I_k W⟩ on the flat torus S¹(a) × S¹(b), whose chart is
// periodic in both coordinates; the trapezoid rule is spectrally accurate.
TEST(SecondVariation, PairingIsSymmetricOnPeriodicTorus) {
  for (auto a2 : {q(1, 2), q(1, 3)}) {
    auto spec = clifford(1, 1, a2);
    auto V = recipe_field<double>(Bundle::ambient, 21);
    auto W = recipe_field<double>(Bundle::ambient, 22);
    const int N = 24;
    const double pi = 3.141592653589793;
    double vw = 0, wv = 0, scale = 0;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        std::vector<double> u = {-pi + 2 * pi * i / N, -pi + 2 * pi * j / N};
        LocalGeometry<double> geo(spec, AmbientSpec::unit_sphere(spec.n), u, 6);
        double a = ik_pairing(geo, V, W, 0.8), b = ik_pairing(geo, W, V, 0.8);
        vw += a;
        wv += b;
        scale += std::fabs(a) + std::fabs(b);
      }
    EXPECT_LE(std::fabs(vw - wv), 1e-9 * scale) << to_string(a2) << " " << vw << " " << wv;
  }
}

TEST(SecondVariation, NeedsOrderSix) {
  auto spec = hypersphere(4, q(1, 2));
  LocalGeometry<double> geo(spec, AmbientSpec::unit_sphere(4), sample(spec, 1, 1).points[0], 5);
  EXPECT_THROW(instability_value(geo, 0.0), OrderError);
  LocalGeometry<double> low(spec, AmbientSpec::unit_sphere(4), sample(spec, 1, 1).points[0], 3);
  EXPECT_THROW(ik_terms(low, low.H(), 0.0), OrderError);
}
