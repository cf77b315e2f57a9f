// SPDX-License-Identifier: Apache-2.0
#pragma once

// Explicit submanifolds of the unit sphere S^n ⊂ R^{n+1} as analytic charts.

#include "bihar/expression.hpp"
#include "bihar/surd.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace bihar {

class BuildError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Family { hypersphere, clifford, equatorial_in_hypersphere, product_in_torus, custom };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::hypersphere: return "hypersphere";
    case Family::clifford: return "clifford";
    case Family::equatorial_in_hypersphere: return "equatorial_in_hypersphere";
    case Family::product_in_torus: return "product_in_torus";
    case Family::custom: return "custom";
  }
  return "?";
}

/// Open interval of one chart coordinate. A singular end is a pole of the
/// spherical chart; a regular end is only a seam of the parametrization.
struct CoordinateRange {
  double lo = 0;
  double hi = 0;
  bool lo_singular = false;
  bool hi_singular = false;
};

/// The sub-sphere {x : |x − center| = a} (center (0,…,0,b)) that contains an image.
struct ContainingSphere {
  Surd a2;
  std::vector<Expr> unit_chart;  // chart of the image inside S^{n-1}(1) ⊂ R^n
};

/// One factor of M₁ × M₂ ⊂ S^{n₁}(a) × S^{n₂}(b).
struct ProductFactor {
  int m = 0;
  int n = 0;  // factor sphere dimension
  int coord_offset = 0;
  int component_offset = 0;  // first ambient component of the factor
  Surd radius2;
  std::vector<Expr> unit_chart;  // n+1 components on the unit n-sphere, coordinates from u_0
  std::vector<CoordinateRange> box;
};

struct ImmersionSpec {
  std::string name;  // canonical descriptor, e.g. "hypersphere:n=5,a2=6/7"
  Family family = Family::custom;
  int m = 0;
  int n = 0;
  std::map<std::string, Surd> params;
  std::vector<Expr> chart;  // n+1 components in m coordinates
  std::vector<CoordinateRange> box;
  std::optional<ContainingSphere> container;
  std::vector<ProductFactor> factors;

  int ambient_components() const { return n + 1; }
  const Surd& param(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) throw BuildError("spec " + name + " has no parameter " + key);
    return it->second;
  }
};

namespace detail {

inline Expr surd_expr(const Surd& s) {
  Expr r(s.p());
  if (!s.is_rational()) r = r + Expr(s.q()) * sqrt(Expr(s.d()));
  return r;
}

/// √s, exact when s is the square of a rational.
inline Expr sqrt_surd_expr(const Surd& s) {
  if (s.is_rational() && s.p().sign() >= 0) {
    BigInt rn, rd;
    if (is_perfect_square(num(s.p()), &rn) && is_perfect_square(den(s.p()), &rd))
      return Expr(Rational(rn, rd));
  }
  return sqrt(surd_expr(s));
}

}  // namespace detail

/// Standard spherical chart σ_d of the unit d-sphere in coordinates
/// u_offset … u_{offset+d−1}:
/// x₀ = cos u₀, x₁ = sin u₀ cos u₁, …, x_{d−1} = sin u₀⋯sin u_{d−2} cos u_{d−1},
/// x_d = sin u₀⋯sin u_{d−1}.
inline std::vector<Expr> sphere_chart(int d, int offset = 0) {
  if (d < 1) throw BuildError("sphere dimension must be ≥ 1");
  std::vector<Expr> x;
  Expr prod(1);
  for (int i = 0; i < d; ++i) {
    Expr u = Expr::coord(offset + i);
    x.push_back(prod * cos(u));
    prod = prod * sin(u);
  }
  x.push_back(prod);
  return x;
}

inline std::vector<CoordinateRange> sphere_box(int d) {
  const double pi = 3.141592653589793;
  std::vector<CoordinateRange> box;
  for (int i = 0; i + 1 < d; ++i) box.push_back({0, pi, true, true});
  box.push_back({-pi, pi, false, false});
  return box;
}

inline std::vector<Expr> scaled(const std::vector<Expr>& v, const Expr& s) {
  std::vector<Expr> r;
  r.reserve(v.size());
  for (const auto& e : v) r.push_back(s * e);
  return r;
}

namespace detail {

inline void check_a2(const Surd& a2, bool allow_one) {
  if (a2.sign() <= 0) throw BuildError("a² must be positive");
  int c = (a2 - Surd(1)).sign();
  if (c > 0 || (c == 0 && !allow_one)) throw BuildError(allow_one ? "a² must be ≤ 1" : "a² must be < 1");
}

inline void set_radii(ImmersionSpec& s, const Surd& a2) {
  s.params["a2"] = a2;
  s.params["b2"] = Surd(1) - a2;
}

inline std::string fmt(const Surd& s) {
  std::string t = to_string(s);
  std::string out;
  for (char c : t)
    if (c != ' ') out += c;
  return out;
}

}  // namespace detail

/// (a·σ_{n−1}(u), b): the slice of S^n at height b = √(1−a²).
inline ImmersionSpec hypersphere(int n, const Surd& a2) {
  if (n < 2) throw BuildError("hypersphere needs n ≥ 2");
  detail::check_a2(a2, true);
  ImmersionSpec s;
  s.family = Family::hypersphere;
  s.m = n - 1;
  s.n = n;
  s.name = "hypersphere:n=" + std::to_string(n) + ",a2=" + detail::fmt(a2);
  detail::set_radii(s, a2);
  s.params["n"] = Surd(n);
  Expr a = detail::sqrt_surd_expr(a2);
  Expr b = detail::sqrt_surd_expr(Surd(1) - a2);
  s.chart = scaled(sphere_chart(n - 1), a);
  s.chart.push_back(b);
  s.box = sphere_box(n - 1);
  return s;
}

/// (a·σ_{n₁}(u), b·σ_{n₂}(v)) ⊂ S^{n₁+n₂+1}.
inline ImmersionSpec clifford(int n1, int n2, const Surd& a2) {
  if (n1 < 1 || n2 < 1) throw BuildError("clifford needs n₁, n₂ ≥ 1");
  detail::check_a2(a2, false);
  ImmersionSpec s;
  s.family = Family::clifford;
  s.m = n1 + n2;
  s.n = n1 + n2 + 1;
  s.name = "clifford:n1=" + std::to_string(n1) + ",n2=" + std::to_string(n2) + ",a2=" + detail::fmt(a2);
  detail::set_radii(s, a2);
  s.params["n1"] = Surd(n1);
  s.params["n2"] = Surd(n2);
  Expr a = detail::sqrt_surd_expr(a2);
  Expr b = detail::sqrt_surd_expr(Surd(1) - a2);
  s.chart = scaled(sphere_chart(n1, 0), a);
  for (const auto& e : scaled(sphere_chart(n2, n1), b)) s.chart.push_back(e);
  s.box = sphere_box(n1);
  for (const auto& r : sphere_box(n2)) s.box.push_back(r);
  s.factors = {ProductFactor{n1, n1, 0, 0, a2, sphere_chart(n1), sphere_box(n1)},
               ProductFactor{n2, n2, n1, n1 + 1, Surd(1) - a2, sphere_chart(n2), sphere_box(n2)}};
  return s;
}

/// A submanifold of the hypersphere S^{n−1}(a) ⊂ S^n, given by a chart
/// `unit_chart` of its image in the unit sphere S^{n−1}(1) ⊂ R^n: (a·unit_chart, b).
inline ImmersionSpec in_hypersphere(std::string name, int m, int n, std::vector<Expr> unit_chart,
                                    std::vector<CoordinateRange> box, const Surd& a2) {
  if (static_cast<int>(unit_chart.size()) != n) throw BuildError("in_hypersphere: unit chart needs n components");
  if (static_cast<int>(box.size()) != m) throw BuildError("in_hypersphere: box needs m ranges");
  detail::check_a2(a2, true);
  ImmersionSpec s;
  s.family = Family::custom;
  s.m = m;
  s.n = n;
  s.name = std::move(name);
  detail::set_radii(s, a2);
  s.params["n"] = Surd(n);
  Expr a = detail::sqrt_surd_expr(a2);
  Expr b = detail::sqrt_surd_expr(Surd(1) - a2);
  s.chart = scaled(unit_chart, a);
  s.chart.push_back(b);
  s.box = std::move(box);
  s.container = ContainingSphere{a2, std::move(unit_chart)};
  return s;
}

/// (a·σ_{msub}(u), 0, …, 0, b): a great msub-sphere of the hypersphere S^{n−1}(a).
inline ImmersionSpec equatorial_in_hypersphere(int msub, int n, const Surd& a2) {
  if (msub < 1 || msub >= n - 1) throw BuildError("equatorial_in_hypersphere needs 1 ≤ msub < n−1");
  std::vector<Expr> unit = sphere_chart(msub);
  while (static_cast<int>(unit.size()) < n) unit.push_back(Expr(0));
  ImmersionSpec s = in_hypersphere(
      "equatorial:m=" + std::to_string(msub) + ",n=" + std::to_string(n) + ",a2=" + detail::fmt(a2), msub, n,
      unit, sphere_box(msub), a2);
  s.family = Family::equatorial_in_hypersphere;
  s.params["msub"] = Surd(msub);
  return s;
}

/// M₁ × M₂ ⊂ S^{n₁}(a) × S^{n₂}(b) ⊂ S^{n₁+n₂+1}. Each factor chart lies in
/// the unit sphere of its own R^{n_i+1} and uses coordinates from u_0.
inline ImmersionSpec product_of(std::string name, const ProductFactor& f1, const ProductFactor& f2,
                                const Surd& a2) {
  for (const auto* f : {&f1, &f2}) {
    if (static_cast<int>(f->unit_chart.size()) != f->n + 1) throw BuildError("product_of: factor chart size");
    if (static_cast<int>(f->box.size()) != f->m) throw BuildError("product_of: factor box size");
  }
  detail::check_a2(a2, false);
  ImmersionSpec s;
  s.family = Family::custom;
  s.m = f1.m + f2.m;
  s.n = f1.n + f2.n + 1;
  s.name = std::move(name);
  detail::set_radii(s, a2);
  s.params["m1"] = Surd(f1.m);
  s.params["n1"] = Surd(f1.n);
  s.params["m2"] = Surd(f2.m);
  s.params["n2"] = Surd(f2.n);
  Expr a = detail::sqrt_surd_expr(a2);
  Expr b = detail::sqrt_surd_expr(Surd(1) - a2);
  s.chart = scaled(f1.unit_chart, a);
  for (const auto& e : scaled(shift_coords(f2.unit_chart, f1.m), b)) s.chart.push_back(e);
  s.box = f1.box;
  for (const auto& r : f2.box) s.box.push_back(r);
  ProductFactor g1 = f1, g2 = f2;
  g1.coord_offset = 0;
  g1.component_offset = 0;
  g1.radius2 = a2;
  g2.coord_offset = f1.m;
  g2.component_offset = f1.n + 1;
  g2.radius2 = Surd(1) - a2;
  s.factors = {g1, g2};
  return s;
}

/// A great m-sphere of the unit n-sphere, as a product factor.
inline ProductFactor great_sphere_factor(int m, int n) {
  if (m < 1 || m > n) throw BuildError("great sphere factor needs 1 ≤ m ≤ n");
  std::vector<Expr> c = sphere_chart(m);
  while (static_cast<int>(c.size()) < n + 1) c.push_back(Expr(0));
  return ProductFactor{m, n, 0, 0, Surd(1), c, sphere_box(m)};
}

/// (a·σ_{m₁}(u), 0…, b·σ_{m₂}(v), 0…): product of great spheres of the torus factors.
inline ImmersionSpec product_in_torus(int m1, int n1, int m2, int n2, const Surd& a2) {
  if (m1 < 1 || m1 >= n1 || m2 < 1 || m2 >= n2)
    throw BuildError("product_in_torus needs 0 < m₁ < n₁ and 0 < m₂ < n₂");
  ImmersionSpec s = product_of("product:m1=" + std::to_string(m1) + ",n1=" + std::to_string(n1) +
                                   ",m2=" + std::to_string(m2) + ",n2=" + std::to_string(n2) + ",a2=" +
                                   detail::fmt(a2),
                               great_sphere_factor(m1, n1), great_sphere_factor(m2, n2), a2);
  s.family = Family::product_in_torus;
  return s;
}

/// A submanifold given by an arbitrary chart into R^{n+1}; `normalize`
/// divides by the euclidean norm so the image lies in the unit sphere.
inline ImmersionSpec custom_spec(std::string name, int m, int n, std::vector<Expr> chart,
                                 std::vector<CoordinateRange> box, bool normalize) {
  if (static_cast<int>(chart.size()) != n + 1) throw BuildError("custom chart needs n+1 components");
  if (static_cast<int>(box.size()) != m) throw BuildError("custom chart box needs m ranges");
  ImmersionSpec s;
  s.name = std::move(name);
  s.m = m;
  s.n = n;
  if (normalize) {
    Expr norm2(0);
    for (const auto& e : chart) norm2 = norm2 + e * e;
    Expr inv = Expr(1) / sqrt(norm2);
    chart = scaled(chart, inv);
  }
  s.chart = std::move(chart);
  s.box = std::move(box);
  return s;
}

/// Realizes a submanifold given by a chart into S^n(1) ⊂ R^{n+1} inside the
/// equator S^n ⊂ S^{n+1} by appending a zero component.
inline ImmersionSpec in_equator(const ImmersionSpec& base) {
  ImmersionSpec s = base;
  s.family = Family::custom;
  s.name = base.name + "@equator";
  s.n = base.n + 1;
  s.chart.push_back(Expr(0));
  s.container.reset();
  s.factors.clear();
  return s;
}

/// A product factor as a submanifold of its own sphere S^n(r) ⊂ R^{n+1}.
inline ImmersionSpec factor_spec(const ProductFactor& f) {
  return custom_spec("factor", f.m, f.n, scaled(f.unit_chart, detail::sqrt_surd_expr(f.radius2)), f.box, false);
}

// ---------------------------------------------------------------------------
// Descriptors

struct Descriptor {
  std::string family;
  std::map<std::string, std::string> values;
};

inline Descriptor parse_descriptor(const std::string& text) {
  Descriptor d;
  auto colon = text.find(':');
  d.family = text.substr(0, colon);
  if (colon == std::string::npos) return d;
  std::stringstream ss(text.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw BuildError("malformed descriptor entry '" + item + "'");
    d.values[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return d;
}

/// Squared radius of the hypersphere S^{n−1}(a) ⊂ S^n for which the dimension-4
/// (n = 5) or dimension-6 (n = 7) conformal-harmonic equation holds.
inline Surd charm_hypersphere_a2(int n) {
  if (n == 5) return Surd(Rational(6, 7));
  if (n == 7) return Surd(Rational(275, 396), Rational(-5, 396), 649);
  throw BuildError("a2=exact is defined only for n = 5 or n = 7");
}

namespace detail {

inline int int_value(const Descriptor& d, const std::string& key) {
  auto it = d.values.find(key);
  if (it == d.values.end()) throw BuildError("descriptor '" + d.family + "' needs " + key);
  try {
    std::size_t pos = 0;
    int v = std::stoi(it->second, &pos);
    if (pos != it->second.size()) throw BuildError("bad integer");
    return v;
  } catch (const std::exception&) {
    throw BuildError("descriptor field " + key + " must be an integer, got '" + it->second + "'");
  }
}

inline Surd a2_value(const Descriptor& d, int n_for_exact) {
  auto it = d.values.find("a2");
  if (it == d.values.end()) throw BuildError("descriptor '" + d.family + "' needs a2");
  if (it->second == "exact") return charm_hypersphere_a2(n_for_exact);
  try {
    return parse_surd(it->second);
  } catch (const AlgebraError& e) {
    throw BuildError(std::string("bad a2: ") + e.what());
  }
}

}  // namespace detail

inline ImmersionSpec build(const Descriptor& d) {
  if (d.family == "hypersphere") {
    int n = detail::int_value(d, "n");
    return hypersphere(n, detail::a2_value(d, n));
  }
  if (d.family == "clifford" || d.family == "torus")
    return clifford(detail::int_value(d, "n1"), detail::int_value(d, "n2"), detail::a2_value(d, -1));
  if (d.family == "equatorial" || d.family == "equatorial_in_hypersphere")
    return equatorial_in_hypersphere(detail::int_value(d, "m"), detail::int_value(d, "n"),
                                     detail::a2_value(d, -1));
  if (d.family == "product" || d.family == "product_in_torus")
    return product_in_torus(detail::int_value(d, "m1"), detail::int_value(d, "n1"), detail::int_value(d, "m2"),
                            detail::int_value(d, "n2"), detail::a2_value(d, -1));
  throw BuildError("unknown family '" + d.family + "'");
}

inline ImmersionSpec build(const std::string& descriptor) { return build(parse_descriptor(descriptor)); }

// ---------------------------------------------------------------------------
// Sampling

struct SamplePlan {
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::vector<std::vector<double>> points;
};

inline constexpr double kSampleMargin = 0.1;

/// Distance from the image of u to the set where the chart degenerates,
/// measured in the unit factor sphere. Along a run of consecutive polar
/// coordinates u_s … u_i the chart collapses where sin u_s ⋯ sin u_i = 0, and
/// the great-circle distance to that subsphere is arcsin of the product.
inline double singular_distance(const ImmersionSpec& spec, const std::vector<double>& u) {
  double d = INFINITY;
  double run = 1;
  for (std::size_t i = 0; i < spec.box.size(); ++i) {
    const auto& r = spec.box[i];
    if (!r.lo_singular && !r.hi_singular) {
      run = 1;
      continue;
    }
    run *= std::sin(u[i]);
    d = std::min(d, std::asin(std::min(1.0, std::fabs(run))));
  }
  return d;
}

namespace detail {

inline double radical_inverse(std::uint64_t i, std::uint64_t base) {
  double f = 1.0 / static_cast<double>(base);
  double r = 0;
  double w = f;
  while (i > 0) {
    r += w * static_cast<double>(i % base);
    i /= base;
    w *= f;
  }
  return r;
}

inline constexpr std::uint64_t kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace detail

/// Rejection limit for the stream of candidates in sample().
inline constexpr std::size_t kMaxCandidatesPerPoint = 1000;

/// Shifted Halton points in the chart box, kept kSampleMargin away from every
/// end of every coordinate interval and from the degenerate set of the chart.
inline SamplePlan sample(const ImmersionSpec& spec, std::size_t count, std::uint64_t seed) {
  if (count == 0) throw BuildError("sample count must be ≥ 1");
  std::size_t dims = spec.box.size();
  if (dims > std::size(detail::kPrimes)) throw BuildError("too many chart coordinates");
  for (const auto& r : spec.box)
    if (r.hi - r.lo <= 2 * kSampleMargin) throw BuildError("empty feasible sampling region");
  std::mt19937_64 rng(seed);
  std::vector<double> shift(dims);
  for (auto& s : shift) s = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  SamplePlan plan;
  plan.count = count;
  plan.seed = seed;
  for (std::size_t i = 1; plan.points.size() < count; ++i) {
    if (i > count * kMaxCandidatesPerPoint) throw BuildError("empty feasible sampling region");
    std::vector<double> u(dims);
    for (std::size_t k = 0; k < dims; ++k) {
      double t = detail::radical_inverse(i, detail::kPrimes[k]) + shift[k];
      t -= std::floor(t);
      const auto& r = spec.box[k];
      u[k] = r.lo + kSampleMargin + t * (r.hi - r.lo - 2 * kSampleMargin);
    }
    if (singular_distance(spec, u) < kSampleMargin) continue;
    plan.points.push_back(std::move(u));
  }
  return plan;
}

}  // namespace bihar
