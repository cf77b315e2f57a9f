// SPDX-License-Identifier: Apache-2.0
// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "bihar/finite_difference.hpp"
#include "bihar/suites.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace bihar;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Surd q(long n, long d = 1) { return Surd(Rational(n) / Rational(d)); }

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

constexpr std::size_t kSamples = 32;
constexpr std::uint64_t kSeed = 42;

Outcome exact_dim4() {
  CharmReport r = charm_classify(4, 5);
  bool ok = r.hypersphere && r.hypersphere->a2() == q(6, 7) && r.hypersphere->k && *r.hypersphere->k == q(10, 3);
  return {ok, ok ? "a2 = 6/7, k = 10/3" : "unexpected hypersphere record"};
}

Outcome exact_dim6() {
  CharmReport r = charm_classify(6, 7);
  Surd a2(Rational(275, 396), Rational(-5, 396), 649);
  Surd h2(Rational(25, 30), Rational(1, 30), 649);
  bool ok = r.hypersphere && r.hypersphere->a2() == a2 && r.hypersphere->H2 && *r.hypersphere->H2 == h2 &&
            r.nested && r.nested->holds && r.nested->width < Rational(1) / pow10(30);
  return {ok, "a2 = " + (r.hypersphere ? to_string(r.hypersphere->a2()) : std::string("?")) +
                  ", |H|^2 = " + (r.hypersphere && r.hypersphere->H2 ? to_string(*r.hypersphere->H2) : "?") +
                  ", nested-form certificate " + (r.nested && r.nested->holds ? "holds" : "fails")};
}

Outcome torus_trichotomy() {
  Surd bound(4, -2, 3);
  std::size_t below = tori_for_index(1, 3, Rational(-1)).records.size();
  std::size_t below2 = tori_for_index(1, 3, Rational(1, 2)).records.size();
  auto at = tori_for_index(1, 3, bound);
  std::size_t above = tori_for_index(1, 3, Rational(3, 4)).records.size();
  auto zero = tori_for_index(1, 3, Rational(0));
  bool ok = below == 2 && below2 == 2 && at.records.size() == 1 && at.k_vs_bound == std::partial_ordering::equivalent &&
            above == 0 && zero.records.size() == 1 && zero.records[0].a2() == q(1, 2) && zero.harmonic_filtered == 1;
  std::ostringstream d;
  d << "counts below/at/above = " << below << "/" << at.records.size() << "/" << above << ", k = 0: "
    << zero.records.size() << " torus (a2 = " << (zero.records.empty() ? "?" : to_string(zero.records[0].a2()))
    << ")";
  return {ok, d.str()};
}

std::vector<ImmersionSpec> eigen_specs() {
  return {hypersphere(4, q(1, 3)), hypersphere(5, q(1, 2)), hypersphere(7, q(6, 7)), clifford(1, 3, q(1, 2)),
          clifford(2, 3, q(1, 3))};
}

Outcome eigen_identities() {
  double worst = 0;
  bool ok = true;
  for (const auto& spec : eigen_specs()) {
    Surd lam = laplacian_eigenvalue(classify(spec));
    auto rep = eigenvalue_suite<double>(spec, AmbientSpec::unit_sphere(spec.n), sample(spec, kSamples, kSeed), lam,
                                        kEigenTolerance);
    ok = ok && rep.pass;
    worst = std::max(worst, rep.max);
  }
  return {ok, "max relative |dH - lambda H| = " + sci(worst)};
}

std::vector<ClassificationRecord> criterion_records() {
  std::vector<ClassificationRecord> recs;
  for (auto k : {Surd(-1), Surd(4, -2, 3), Surd(0)})
    for (const auto& r : tori_for_index(1, 3, k).records) recs.push_back(r);
  for (const auto& spec : eigen_specs()) recs.push_back(classify(spec));
  return recs;
}

Outcome residual_certification() {
  double worst_on = 0, worst_off = INFINITY;
  bool ok = true;
  for (const auto& rec : criterion_records()) {
    if (!rec.k) return {false, rec.descriptor + " has no index"};
    auto spec = spec_for(rec);
    AmbientSpec amb = AmbientSpec::unit_sphere(spec.n);
    auto plan = sample(spec, kSamples, kSeed);
    auto on = biharmonic_suite<double>(spec, amb, plan, *rec.k);
    ok = ok && on.pass;
    worst_on = std::max(worst_on, on.max);
    double h = std::sqrt(rec.H2->to_double());
    for (auto shift : {q(1, 2), q(-1, 2)}) {
      auto off = biharmonic_suite<double>(spec, amb, plan, *rec.k + shift, 0.0);
      for (double v : off.norms) {
        worst_off = std::min(worst_off, v / h);
        ok = ok && v >= 1e-3 * h;
      }
    }
  }
  return {ok, "max residual at k = " + sci(worst_on) + ", min residual/|H| at k +- 1/2 = " + sci(worst_off)};
}

Outcome decomposition() {
  std::vector<ImmersionSpec> specs = eigen_specs();
  for (const auto& r : criterion_records())
    if (r.family == Family::clifford) specs.push_back(spec_for(r));
  specs.push_back(equatorial_in_hypersphere(2, 4, q(2, 3)));
  specs.push_back(product_in_torus(1, 2, 1, 2, q(1, 3)));
  specs.push_back(product_in_torus(1, 2, 1, 2, q(1, 2)));
  double worst = 0;
  bool ok = true;
  for (const auto& spec : specs)
    for (int i = 0; i < 5; ++i) {
      Surd k = Surd(Rational(-3) + Rational(3, 2) * i);
      auto rep = decomposition_suite<double>(spec, AmbientSpec::unit_sphere(spec.n), sample(spec, kSamples, kSeed), k);
      ok = ok && rep.pass;
      worst = std::max(worst, rep.max);
    }
  return {ok, std::to_string(specs.size()) + " specs x 5 k, max |full - (normal + tangent)| = " + sci(worst)};
}

Outcome equatorial_scenario() {
  auto spec = equatorial_in_hypersphere(2, 4, q(2, 3));
  auto rec = classify(spec);
  auto plan = sample(spec, kSamples, kSeed);
  AmbientSpec amb = AmbientSpec::unit_sphere(4);
  auto on = biharmonic_suite<double>(spec, amb, plan, Surd(1));
  double hsub = 0;
  for (const auto& u : plan.points)
    hsub = std::max(hsub, norm(extrinsic_at<double>(spec, AmbientSpec::hypersphere(4, q(2, 3)), u).H));
  bool ok = rec.k && *rec.k == Surd(1) && on.pass && hsub <= 1e-10;
  return {ok, "residual at k = 1: " + sci(on.max) + ", |H| in S^3(a): " + sci(hsub)};
}

Outcome torus_scenario() {
  auto proper = product_in_torus(1, 2, 1, 2, q(1, 3));
  Surd k = (Surd(1) - q(2)) + (Surd(1) - q(1, 2));
  auto on = biharmonic_suite<double>(proper, AmbientSpec::unit_sphere(5), sample(proper, kSamples, kSeed), k);
  auto harmonic = product_in_torus(1, 2, 1, 2, q(1, 2));
  double h = 0;
  for (const auto& u : sample(harmonic, kSamples, kSeed).points)
    h = std::max(h, norm(extrinsic_at<double>(harmonic, AmbientSpec::unit_sphere(5), u).H));
  bool ok = on.pass && h <= 1e-10 && classify(harmonic).verdict == Verdict::harmonic;
  return {ok, "residual at k = " + to_string(k) + ": " + sci(on.max) + ", |H| at a2 = 1/2: " + sci(h)};
}

Outcome instability() {
  struct Case {
    ImmersionSpec spec;
    Surd k;
    double expect;
  };
  std::vector<Case> cases = {{hypersphere(5, q(6, 7)), q(10, 3), -16.0 / 9.0}, {clifford(1, 3, q(1, 2)), q(0), -4.0}};
  bool ok = true;
  std::ostringstream d;
  for (const auto& c : cases) {
    auto rep = instability_suite<double>(c.spec, sample(c.spec, kSamples, kSeed), c.k, 1e-5, 1e-6, 1, 6);
    ok = ok && rep.pass && std::fabs(rep.mean_value - c.expect) <= 1e-5 * std::fabs(c.expect);
    d << c.spec.name << ": " << rep.mean_value << " (spread " << sci(rep.spread) << ", integral " << rep.integral
      << ")  ";
  }
  return {ok, d.str()};
}

Outcome dim6_equation() {
  auto exact = hypersphere(7, charm_hypersphere_a2(7));
  auto on = charm6_suite<Extended>(exact, sample(exact, kSamples, kSeed), kCharm6Tolerance);
  auto half = hypersphere(7, q(1, 2));
  auto off = charm6_suite<double>(half, sample(half, kSamples, kSeed), 0.0);
  double dev = 0;
  for (double v : off.norms) dev = std::max(dev, std::fabs(v - 24.96));  // |H| = 1
  bool ok = on.pass && dev <= 1e-4;
  return {ok, "residual at exact a2 (extended precision): " + sci(on.max) + ", |residual - 24.96| at a2 = 1/2: " +
                  sci(dev)};
}

Outcome psi_constancy_check() {
  auto spec = hypersphere(6, q(1, 3));
  auto rep = psi_constancy<double>(spec, sample(spec, kSamples, kSeed));
  bool ok = rep.spread <= 1e-10 && rep.distance_defect <= 1e-10;
  return {ok, "spread " + sci(rep.spread) + ", | |p - Psi|^2 - 1/(1+|H|^2) | = " + sci(rep.distance_defect)};
}

Outcome jets_vs_fd() {
  std::vector<ImmersionSpec> specs = eigen_specs();
  specs.push_back(equatorial_in_hypersphere(2, 4, q(2, 3)));
  specs.push_back(product_in_torus(1, 2, 1, 2, q(1, 3)));
  std::mt19937_64 rng(kSeed);
  double worst = 0;
  int warnings = 0;
  for (int probe = 0; probe < 500; ++probe) {
    const auto& spec = specs[rng() % specs.size()];
    auto u = sample(spec, 1, rng()).points[0];
    std::size_t c = rng() % spec.chart.size();
    MultiIndex alpha(spec.m, 0);
    int order = static_cast<int>(rng() % 5);
    for (int i = 0; i < order; ++i) ++alpha[rng() % spec.m];
    double jet = jet_at<double>(spec.chart[c], u, 4).partial(alpha);
    FdResult fd = fd_derivative(spec.chart[c], u, alpha, 2e-2);
    warnings += fd.cancellation_warning;
    worst = std::max(worst, std::fabs(jet - static_cast<double>(fd.value)) / (1 + std::fabs(jet)));
  }
  return {worst <= 1e-5 && warnings == 0, "500 probes, max |jet - fd|/(1+|jet|) = " + sci(worst)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria = {
      {"exact dim-4 conformal-harmonic radius", exact_dim4},
      {"exact dim-6 conformal-harmonic radius", exact_dim6},
      {"torus trichotomy for (1,3)", torus_trichotomy},
      {"eigenvalue identities", eigen_identities},
      {"residual certification", residual_certification},
      {"normal/tangent decomposition", decomposition},
      {"equatorial sphere in a hypersphere", equatorial_scenario},
      {"product in a torus", torus_scenario},
      {"instability identity", instability},
      {"dim-6 equation", dim6_equation},
      {"Psi constancy", psi_constancy_check},
      {"jets vs finite differences", jets_vs_fd},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
