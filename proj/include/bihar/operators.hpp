// SPDX-License-Identifier: Apache-2.0
#pragma once

// Differential operators along an isometric inclusion and the residuals of
// the index-k biharmonic and conformal-harmonic equations.
//
// Conventions: δω = −tr_g ∇ω, so δTφ = −mH, and Δ = δd is the positive
// rough Laplacian ΔV = −g^{ij}(∇_i∇_j V − Γ^k_ij ∇_k V).

#include "bihar/geometry.hpp"
#include "bihar/quadrature.hpp"

#include <functional>
#include <random>
#include <string>

namespace bihar {

enum class Bundle { ambient, normal, tangent };

/// A vector field along the immersion, materialized as jets around a base point.
template <class T>
struct FieldProcedure {
  Bundle bundle = Bundle::ambient;
  std::string name;
  std::function<JetVec<T>(const LocalGeometry<T>&)> jets;

  JetVec<T> operator()(const LocalGeometry<T>& geo) const { return jets(geo); }
};

template <class T>
FieldProcedure<T> mean_curvature_field() {
  return {Bundle::normal, "H", [](const LocalGeometry<T>& geo) { return geo.H(); }};
}

template <class T>
FieldProcedure<T> position_field() {
  return {Bundle::ambient, "position", [](const LocalGeometry<T>& geo) { return geo.X(); }};
}

/// Deterministic low-degree trigonometric combination of the chart
/// coordinates, one per ambient component: Σ_i α cos(u_i) + β sin(u_i) + γ cos(u_i + u_j) + c.
inline std::vector<Expr> trig_recipe(int m, int components, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto coef = [&rng] {
    // multiples of 1/8 in [−1, 1] keep the recipe exactly representable
    return Rational(static_cast<long>(rng() % 17) - 8, 8);
  };
  std::vector<Expr> out;
  for (int a = 0; a < components; ++a) {
    Expr e = Expr(coef());
    for (int i = 0; i < m; ++i) {
      Expr u = Expr::coord(i);
      e = e + Expr(coef()) * cos(u) + Expr(coef()) * sin(u);
      int j = (i + 1) % m;
      if (j != i) e = e + Expr(coef()) * cos(u + Expr::coord(j));
    }
    out.push_back(e);
  }
  return out;
}

/// Recipe field projected into the requested bundle.
template <class T>
FieldProcedure<T> recipe_field(Bundle bundle, std::uint64_t seed) {
  FieldProcedure<T> f;
  f.bundle = bundle;
  f.name = "recipe#" + std::to_string(seed);
  f.jets = [bundle, seed](const LocalGeometry<T>& geo) {
    JetVec<T> raw = jet_at<T>(trig_recipe(geo.m(), geo.dim(), seed), geo.base(), geo.order());
    switch (bundle) {
      case Bundle::ambient: return geo.ambient_part(raw);
      case Bundle::normal: return geo.normal_part(raw);
      case Bundle::tangent: return geo.tangent_part(raw);
    }
    return raw;
  };
  return f;
}

template <class T>
Vec<T> rough_laplacian(const LocalGeometry<T>& geo, const FieldProcedure<T>& V, Projection variant) {
  if (variant == Projection::normal && V.bundle != Bundle::normal)
    throw PreconditionError("normal Laplacian needs a normal-valued field");
  if (variant == Projection::tangent && V.bundle != Bundle::tangent)
    throw PreconditionError("tangent Laplacian needs a tangent-valued field");
  return values(geo.laplacian(variant, V(geo)));
}

/// δTφ = −mH.
template <class T>
JetVec<T> delta_Tphi(const LocalGeometry<T>& geo) {
  return scaled(geo.H(), T(-geo.m()));
}

/// −tr_g ∇Tφ computed from the frame alone: −g^{ij}(∇_i E_j − Γ^k_ij E_k),
/// independent of the second fundamental form code path.
template <class T>
JetVec<T> delta_Tphi_direct(const LocalGeometry<T>& geo) {
  int m = geo.m();
  JetVec<T> r(geo.dim(), geo.constant(T(0)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      JetVec<T> h = geo.covariant(Projection::pullback, geo.E(j), i);
      for (int k = 0; k < m; ++k) axpy(h, -geo.Gamma(k, i, j), geo.E(k));
      axpy(r, -geo.ginv(i, j), h);
    }
  return r;
}

/// Se(X) = m X − Σ ⟨X, Ẽ_i⟩Ẽ_i for the unit-sphere curvature operator.
template <class T>
Vec<T> se_apply(const LocalGeometry<T>& geo, const Vec<T>& X) {
  Vec<T> tangent = geo.frame_vector(geo.frame_components(X));
  return T(geo.m()) * X - tangent;
}

/// tr B(·, A_X(·)) = Σ g^{ij} B(E_i, A_X E_j) at the base point.
template <class T>
Vec<T> trace_B_A(const LocalGeometry<T>& geo, const Vec<T>& X) {
  int m = geo.m();
  Vec<T> r(geo.dim(), T(0));
  for (int j = 0; j < m; ++j) {
    Vec<T> ej(m, T(0));
    ej[j] = T(1);
    Vec<T> a = geo.shape_components(X, ej);
    for (int i = 0; i < m; ++i) {
      Vec<T> ei(m, T(0));
      ei[i] = T(1);
      r = r + geo.ginv(i, j).value() * geo.B_value(ei, a);
    }
  }
  return r;
}

/// tr A_{∇ᴺ_(·) X}(·) = Σ g^{ij} A_{∇ᴺ_i X}(E_j), as an ambient vector.
template <class T>
Vec<T> trace_A_nablaN(const LocalGeometry<T>& geo, const JetVec<T>& X) {
  int m = geo.m();
  Vec<T> c(m, T(0));
  for (int i = 0; i < m; ++i) {
    Vec<T> nx = values(geo.covariant(Projection::normal, X, i));
    for (int j = 0; j < m; ++j) {
      Vec<T> ej(m, T(0));
      ej[j] = T(1);
      Vec<T> a = geo.shape_components(nx, ej);
      for (int l = 0; l < m; ++l) c[l] += geo.ginv(i, j).value() * a[l];
    }
  }
  return geo.frame_vector(c);
}

/// g-raised gradient Σ g^{ij} ∂_j f E_i.
template <class T>
Vec<T> gradient(const LocalGeometry<T>& geo, const Jet<T>& f) {
  int m = geo.m();
  Vec<T> c(m, T(0));
  for (int j = 0; j < m; ++j) {
    T d = f.derivative(j).value();
    for (int i = 0; i < m; ++i) c[i] += geo.ginv(i, j).value() * d;
  }
  return geo.frame_vector(c);
}

template <class T>
struct BiharmonicResidual {
  Vec<T> full;     // (Δ − m + k)H
  Vec<T> normal;   // ΔᴺH − (m − k)H + tr B(·, A_H ·)
  Vec<T> tangent;  // (m/2) grad|H|² + 2 tr A_{∇ᴺH}
};

/// Needs chart jets of order ≥ 4.
template <class T>
BiharmonicResidual<T> residual_biharmonic(const LocalGeometry<T>& geo, const T& k) {
  const JetVec<T>& H = geo.H();
  if (order_of(H) < 2) throw OrderError("biharmonic residual needs chart jets of order ≥ 4");
  T shift = T(geo.m()) - k;
  Vec<T> h = values(H);
  BiharmonicResidual<T> r;
  r.full = values(geo.laplacian(Projection::pullback, H)) - shift * h;
  r.normal = values(geo.laplacian(Projection::normal, H)) - shift * h + trace_B_A(geo, h);
  r.tangent = (T(geo.m()) / T(2)) * gradient(geo, dot(H, H)) + T(2) * trace_A_nablaN(geo, H);
  return r;
}

/// Δ(δTφ) − Se(δTφ) + k δTφ with δTφ from the frame-only path.
template <class T>
Vec<T> residual_tension_form(const LocalGeometry<T>& geo, const T& k) {
  JetVec<T> tau = delta_Tphi_direct(geo);
  Vec<T> t = values(tau);
  return values(geo.laplacian(Projection::pullback, tau)) - se_apply(geo, t) + k * t;
}

enum class Charm4Mode { reduced, full };

/// k = n(n−1)/6 for the dimension-4 conformal-harmonic reduction.
inline Rational charm4_index(int n) { return Rational(n * (n - 1), 6); }

/// reduced: (Δ − 4 + n(n−1)/6)H.
/// full: ΔδTφ + δ((2/3 scal − 2 ric)Tφ) − Se(δTφ) with the induced ric, scal.
template <class T>
Vec<T> residual_charm4(const LocalGeometry<T>& geo, Charm4Mode mode) {
  if (geo.m() != 4) throw PreconditionError("dimension-4 equation needs m = 4");
  if (mode == Charm4Mode::reduced) return residual_biharmonic(geo, to_scalar<T>(charm4_index(geo.spec().n))).full;
  if (geo.order() < 4) throw OrderError("full dimension-4 residual needs chart jets of order ≥ 4");
  const int m = 4;
  JetVec<T> tau = delta_Tphi(geo);
  Vec<T> t = values(tau);
  // S^l_j = (2/3) scal δ^l_j − 2 g^{lk} ric_kj, and ω_j = Tφ(S E_j) = Σ_l S^l_j E_l.
  std::vector<JetVec<T>> omega(m);
  for (int j = 0; j < m; ++j) {
    std::vector<Jet<T>> c(m, geo.constant(T(0)));
    for (int l = 0; l < m; ++l) {
      if (l == j) c[l] += geo.scalar_curvature() * (T(2) / T(3));
      for (int k = 0; k < m; ++k) c[l] -= geo.ginv(l, k) * geo.ricci(k, j) * T(2);
    }
    omega[j] = geo.tangent_field(c);
  }
  JetVec<T> div(geo.dim(), geo.constant(T(0)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      JetVec<T> h = geo.covariant(Projection::pullback, omega[j], i);
      for (int k = 0; k < m; ++k) axpy(h, -geo.Gamma(k, i, j), omega[k]);
      axpy(div, -geo.ginv(i, j), h);
    }
  return values(geo.laplacian(Projection::pullback, tau)) + values(div) - se_apply(geo, t);
}

/// Pseudo-umbilical dimension-6 equation:
/// Δ²H + (1/3)(n²−n−36)ΔH − 72|H|²H + (2/75)(n²−n−45)(n²−n−30)H − 6 grad|H|².
template <class T>
Vec<T> residual_charm6(const LocalGeometry<T>& geo, double pu_tolerance = 1e-6) {
  if (geo.m() != 6) throw PreconditionError("dimension-6 equation needs m = 6");
  if (geo.order() < 6) throw OrderError("dimension-6 residual needs chart jets of order 6");
  double pu = geo.extrinsic().pu_defect;
  if (pu > pu_tolerance)
    throw PreconditionError("dimension-6 equation needs a pseudo-umbilical submanifold (defect " +
                            std::to_string(pu) + ")");
  long nn = static_cast<long>(geo.spec().n) * (geo.spec().n - 1);
  T c1 = to_scalar<T>(Rational(nn - 36, 3));
  T c3 = to_scalar<T>(Rational(2 * (nn - 45) * (nn - 30), 75));
  const JetVec<T>& H = geo.H();
  JetVec<T> LH = geo.laplacian(Projection::pullback, H);
  Vec<T> L2H = values(geo.laplacian(Projection::pullback, LH));
  Vec<T> h = values(H);
  Jet<T> h2 = dot(H, H);
  return L2H + c1 * values(LH) - (T(72) * h2.value()) * h + c3 * h - T(6) * gradient(geo, h2);
}

/// √det g at u from first-order chart jets.
template <class T>
T volume_density(const ImmersionSpec& spec, const Vec<T>& u) {
  JetVec<T> X = jet_at<T>(spec.chart, u, 1);
  int m = spec.m;
  std::vector<Vec<T>> E(m);
  for (int i = 0; i < m; ++i) E[i] = values(derivative(X, i));
  Mat<T> G(m, Vec<T>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) G[i][j] = dot(E[i], E[j]);
  using std::sqrt;
  return sqrt(determinant(G));
}

/// ∫_M f dvol by tensor Gauss–Legendre over the chart box.
template <class T>
T integrate(const ImmersionSpec& spec, const std::function<T(const Vec<T>&)>& f, int nodes_per_dim) {
  std::vector<GaussRule> rules;
  for (const auto& r : spec.box) rules.push_back(gauss_legendre(nodes_per_dim, r.lo, r.hi));
  T total(0);
  for_each_node(rules, [&](const std::vector<long double>& x, long double w) {
    Vec<T> u;
    for (long double xi : x) u.push_back(T(static_cast<double>(xi)));
    T v = f(u);
    using std::isfinite;
    if (!isfinite(to_double(v))) throw DomainError("non-finite integrand value at a quadrature node");
    total += T(static_cast<double>(w)) * v * volume_density(spec, u);
  });
  return total;
}

}  // namespace bihar
