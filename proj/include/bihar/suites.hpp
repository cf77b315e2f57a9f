// SPDX-License-Identifier: Apache-2.0
#pragma once

// Residual suites over a sample plan, one ResidualReport each.

#include "bihar/classifier.hpp"
#include "bihar/identities.hpp"
#include "bihar/operators.hpp"
#include "bihar/parallel.hpp"
#include "bihar/report.hpp"
#include "bihar/scalar.hpp"
#include "bihar/second_variation.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace bihar {

inline constexpr double kResidualTolerance = 1e-8;
inline constexpr double kEigenTolerance = 1e-9;  // relative to |λH|
inline constexpr double kCharm6Tolerance = 1e-6;

/// λ with ΔH = λH for the homogeneous families.
inline Surd laplacian_eigenvalue(const ClassificationRecord& r) {
  const Surd& a2 = r.a2();
  Surd ratio = (Surd(1) - a2) / a2;  // b²/a²
  auto p = [&](const char* key) { return r.params.at(key); };
  switch (r.family) {
    case Family::hypersphere: return (p("n") - Surd(1)) * ratio;
    case Family::equatorial_in_hypersphere: return p("msub") * ratio;
    case Family::clifford: return ratio * p("n1") + p("n2") / ratio;
    case Family::product_in_torus: return ratio * p("m1") + p("m2") / ratio;
    case Family::custom: break;
  }
  throw ClassificationError("no closed-form eigenvalue for this family");
}

template <class T>
using PointFn = std::function<double(const LocalGeometry<T>&)>;

/// Evaluates f on a LocalGeometry at every sample point.
template <class T>
std::vector<double> sweep(const ImmersionSpec& spec, const AmbientSpec& ambient, const SamplePlan& plan, int order,
                          const PointFn<T>& f, unsigned threads) {
  return parallel_map(plan.points.size(), threads, [&](std::size_t i) {
    LocalGeometry<T> geo(spec, ambient, to_scalars<T>(plan.points[i]), order);
    return f(geo);
  });
}

/// |(Δ − m + k)H| at every sample.
template <class T>
ResidualReport biharmonic_suite(const ImmersionSpec& spec, const AmbientSpec& ambient, const SamplePlan& plan,
                                const Surd& k, double tol = kResidualTolerance, unsigned threads = 1, int order = 4) {
  T kk = surd_to_scalar<T>(k);
  auto norms = sweep<T>(spec, ambient, plan, order, [&](const LocalGeometry<T>& geo) {
    return to_double(norm(residual_biharmonic(geo, kk).full));
  }, threads);
  return make_report("biharmonic", spec.name, ambient.label, to_string(k), std::move(norms), tol);
}

/// |full − (normal + tangent)| for the independent split.
template <class T>
ResidualReport decomposition_suite(const ImmersionSpec& spec, const AmbientSpec& ambient, const SamplePlan& plan,
                                   const Surd& k, double tol = kResidualTolerance, unsigned threads = 1,
                                   int order = 4) {
  T kk = surd_to_scalar<T>(k);
  std::vector<double> nn(plan.points.size()), tn(plan.points.size());
  auto rows = parallel_map(plan.points.size(), threads, [&](std::size_t i) {
    LocalGeometry<T> geo(spec, ambient, to_scalars<T>(plan.points[i]), order);
    auto r = residual_biharmonic(geo, kk);
    return std::array<double, 3>{to_double(norm(r.full - r.normal - r.tangent)), to_double(norm(r.normal)),
                                 to_double(norm(r.tangent))};
  });
  std::vector<double> norms;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    norms.push_back(rows[i][0]);
    nn[i] = rows[i][1];
    tn[i] = rows[i][2];
  }
  ResidualReport rep = make_report("decomposition", spec.name, ambient.label, to_string(k), std::move(norms), tol);
  rep.normal_norms = std::move(nn);
  rep.tangent_norms = std::move(tn);
  return rep;
}

/// |ΔH − λH| / |λH|, or |ΔH| where λH vanishes.
template <class T>
ResidualReport eigenvalue_suite(const ImmersionSpec& spec, const AmbientSpec& ambient, const SamplePlan& plan,
                                const Surd& lambda, double tol = kEigenTolerance, unsigned threads = 1) {
  T lam = surd_to_scalar<T>(lambda);
  auto norms = sweep<T>(spec, ambient, plan, 4, [&](const LocalGeometry<T>& geo) {
    Vec<T> h = values(geo.H());
    Vec<T> lh = lam * h;
    double d = to_double(norm(values(geo.laplacian(Projection::pullback, geo.H())) - lh));
    double s = to_double(norm(lh));
    return s > 0 ? d / s : d;
  }, threads);
  return make_report("eigenvalue", spec.name, ambient.label, "", std::move(norms), tol);
}

template <class T>
ResidualReport charm4_suite(const ImmersionSpec& spec, const SamplePlan& plan, Charm4Mode mode,
                            double tol = kResidualTolerance, unsigned threads = 1) {
  AmbientSpec amb = AmbientSpec::unit_sphere(spec.n);
  auto norms = sweep<T>(spec, amb, plan, 4, [&](const LocalGeometry<T>& geo) {
    return to_double(norm(residual_charm4(geo, mode)));
  }, threads);
  return make_report(mode == Charm4Mode::reduced ? "charm4_reduced" : "charm4_full", spec.name, amb.label,
                     to_string(charm4_index(spec.n)), std::move(norms), tol);
}

template <class T>
ResidualReport charm6_suite(const ImmersionSpec& spec, const SamplePlan& plan, double tol = kCharm6Tolerance,
                            unsigned threads = 1) {
  AmbientSpec amb = AmbientSpec::unit_sphere(spec.n);
  auto norms = sweep<T>(spec, amb, plan, 6, [&](const LocalGeometry<T>& geo) {
    return to_double(norm(residual_charm6(geo)));
  }, threads);
  return make_report("charm6", spec.name, amb.label, "", std::move(norms), tol);
}

struct InstabilityReport {
  ResidualReport pointwise;  // relative deviation from −4m²|H|⁴
  double expected = 0;
  double mean_value = 0;
  double spread = 0;  // (max − min)/|mean|
  double integral = 0;
  double volume = 0;
  bool pass = false;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j = pointwise.to_json();
    j["expected"] = expected;
    j["mean_value"] = mean_value;
    j["spread"] = spread;
    j["integral"] = integral;
    j["volume"] = volume;
    j["pass"] = pass;
    return j;
  }
};

/// ⟨I_k(H), H⟩ against −4m²|H|⁴ pointwise; the integral uses
/// `nodes_per_dim` Gauss nodes per chart coordinate.
template <class T>
InstabilityReport instability_suite(const ImmersionSpec& spec, const SamplePlan& plan, const Surd& k,
                                    double rel_tol = 1e-5, double spread_tol = 1e-6, unsigned threads = 1,
                                    int nodes_per_dim = 3) {
  AmbientSpec amb = AmbientSpec::unit_sphere(spec.n);
  T kk = surd_to_scalar<T>(k);
  const double m = spec.m;
  auto rows = parallel_map(plan.points.size(), threads, [&](std::size_t i) {
    LocalGeometry<T> geo(spec, amb, to_scalars<T>(plan.points[i]), 6);
    double v = to_double(instability_value(geo, kk));
    double h2 = to_double(dot(values(geo.H()), values(geo.H())));
    return std::array<double, 2>{v, -4 * m * m * h2 * h2};
  });
  InstabilityReport rep;
  std::vector<double> dev;
  double lo = INFINITY, hi = -INFINITY;
  for (const auto& r : rows) {
    dev.push_back(std::fabs(r[0] - r[1]) / std::max(std::fabs(r[1]), 1e-300));
    rep.mean_value += r[0];
    rep.expected += r[1];
    lo = std::min(lo, r[0]);
    hi = std::max(hi, r[0]);
  }
  rep.mean_value /= static_cast<double>(rows.size());
  rep.expected /= static_cast<double>(rows.size());
  rep.spread = (hi - lo) / std::max(std::fabs(rep.mean_value), 1e-300);
  rep.pointwise = make_report("instability", spec.name, amb.label, to_string(k), std::move(dev), rel_tol);
  std::function<T(const Vec<T>&)> f = [&](const Vec<T>& u) {
    LocalGeometry<T> geo(spec, amb, u, 6);
    return instability_value(geo, kk);
  };
  rep.integral = to_double(integrate<T>(spec, f, nodes_per_dim));
  rep.volume = to_double(integrate<T>(spec, [](const Vec<T>&) { return T(1); }, nodes_per_dim));
  rep.pass = rep.pointwise.pass && rep.spread <= spread_tol && rep.integral < 0;
  return rep;
}

}  // namespace bihar
