// SPDX-License-Identifier: Apache-2.0
#pragma once

// Extrinsic and intrinsic geometry of a chart around one base point. Every
// field is a vector of jets of its ambient R^{n+1} components; bundle
// connections are "differentiate componentwise, then project".

#include "bihar/catalog.hpp"
#include "bihar/expression.hpp"
#include "bihar/jet.hpp"
#include "bihar/scalar.hpp"

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace bihar {

class SingularityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Ambient space of the immersion: R^{n+1}, or a round sphere
/// {x : |x − center| = radius, x_j = center_j for j in fixed_axes}.
struct AmbientSpec {
  enum class Kind { euclidean, sphere };
  Kind kind = Kind::sphere;
  std::vector<Expr> center;  // empty means the origin
  Expr radius{1};
  std::vector<int> fixed_axes;
  std::string label = "S^n";

  static AmbientSpec euclidean(int n) {
    AmbientSpec a;
    a.kind = Kind::euclidean;
    a.label = "R^" + std::to_string(n + 1);
    return a;
  }
  static AmbientSpec unit_sphere(int n) {
    AmbientSpec a;
    a.label = "S^" + std::to_string(n);
    return a;
  }
  /// The great sphere S^{n−1} = S^n ∩ {x_n = 0}.
  static AmbientSpec equator(int n) {
    AmbientSpec a;
    a.fixed_axes = {n};
    a.label = "S^" + std::to_string(n - 1) + "(1)";
    return a;
  }
  /// The hypersphere S^{n−1}(a) = {(x, b) : |x| = a} of S^n.
  static AmbientSpec hypersphere(int n, const Surd& a2) {
    AmbientSpec a;
    a.center.assign(n + 1, Expr(0));
    a.center[n] = detail::sqrt_surd_expr(Surd(1) - a2);
    a.radius = detail::sqrt_surd_expr(a2);
    a.fixed_axes = {n};
    a.label = "S^" + std::to_string(n - 1) + "(a),a2=" + detail::fmt(a2);
    return a;
  }
  /// Full-dimensional sphere |x − center| = radius in R^{n+1}.
  static AmbientSpec sphere(std::vector<Expr> center, Expr radius, std::string label) {
    AmbientSpec a;
    a.center = std::move(center);
    a.radius = std::move(radius);
    a.label = std::move(label);
    return a;
  }
};

enum class Projection { pullback, tangent, normal };

inline const char* to_string(Projection p) {
  switch (p) {
    case Projection::pullback: return "pullback";
    case Projection::tangent: return "tangent";
    case Projection::normal: return "normal";
  }
  return "?";
}

template <class T>
using Vec = std::vector<T>;
template <class T>
using Mat = std::vector<std::vector<T>>;

template <class T>
T dot(const Vec<T>& a, const Vec<T>& b) {
  T r(0);
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

template <class T>
T norm(const Vec<T>& a) {
  using std::sqrt;
  return sqrt(dot(a, a));
}

template <class T>
Vec<T> operator+(Vec<T> a, const Vec<T>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class T>
Vec<T> operator-(Vec<T> a, const Vec<T>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <class T>
Vec<T> operator*(const T& s, Vec<T> a) {
  for (auto& x : a) x *= s;
  return a;
}

/// Determinant by partial-pivot elimination.
template <class T>
T determinant(Mat<T> a) {
  using std::fabs;
  int n = static_cast<int>(a.size());
  T det(1);
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (fabs(a[r][c]) > fabs(a[piv][c])) piv = r;
    if (a[piv][c] == T(0)) return T(0);
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < n; ++r) {
      T f = a[r][c] / a[c][c];
      for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

/// Values at the base point of the first-order frame.
template <class T>
struct FrameData {
  Vec<T> p;
  std::vector<Vec<T>> E;
  Mat<T> g, ginv;
  std::vector<Mat<T>> Gamma;  // Gamma[k][i][j] = Γ^k_ij
  Mat<T> P_amb, P_T, P_N;     // (n+1)×(n+1) projector matrices
};

template <class T>
struct ExtrinsicData {
  Mat<Vec<T>> B;  // B[i][j]
  Vec<T> H;
  Mat<T> A_H;  // A_H[l][j] = (A_H)^l_j in the E-frame
  std::vector<Vec<T>> nablaN_H;
  Vec<T> dH2;  // ∂_i |H|²
  double pu_defect = 0;
  std::optional<Vec<T>> eta;
};

template <class T>
struct CurvatureData {
  std::vector<std::vector<Mat<T>>> R;  // R[l][i][j][k] = R^l_{ijk}
  Mat<T> ric;
  T scal{0};
  double einstein_defect = 0;
};

template <class T>
class LocalGeometry {
public:
  using J = Jet<T>;
  using JV = JetVec<T>;

  LocalGeometry(const ImmersionSpec& spec, const AmbientSpec& ambient, const Vec<T>& u, int order)
      : spec_(spec), ambient_(ambient), u_(u), order_(order), m_(spec.m), dim_(spec.n + 1),
        table_(&MonomialTable::get(spec.m)) {
    if (static_cast<int>(u.size()) != m_) throw DomainError("base point has wrong dimension");
    if (order < 2 || order > kMaxJetOrder) throw OrderError("chart jet order must lie in 2..6");
    if (static_cast<int>(spec.chart.size()) != dim_) throw DomainError("chart has wrong component count");
    X_ = jet_at<T>(spec.chart, u, order);
    E_.resize(m_);
    for (int i = 0; i < m_; ++i) E_[i] = derivative(X_, i);
    build_metric();
    build_ambient();
    build_dual();
  }

  const ImmersionSpec& spec() const { return spec_; }
  const AmbientSpec& ambient() const { return ambient_; }
  int m() const { return m_; }
  int dim() const { return dim_; }
  int order() const { return order_; }
  const Vec<T>& base() const { return u_; }
  const MonomialTable& table() const { return *table_; }

  const JV& X() const { return X_; }
  const JV& E(int i) const { return E_[i]; }
  const J& g(int i, int j) const { return g_[i][j]; }
  const J& ginv(int i, int j) const { return ginv_[i][j]; }
  const J& Gamma(int k, int i, int j) const { return Gamma_[k][i][j]; }
  /// Dual frame F^i = g^{ij} E_j, so P_T V = Σ_i ⟨F^i, V⟩ E_i.
  const JV& dual(int i) const { return F_[i]; }

  J constant(const T& v) const { return J::constant(*table_, v); }
  JV constant_vector(const Vec<T>& v) const {
    JV r;
    for (const auto& x : v) r.push_back(constant(x));
    return r;
  }

  /// Ambient vector Σ_i c^i E_i of a tangent field with jet components c^i.
  JV tangent_field(const std::vector<J>& c) const {
    JV r(dim_, constant(T(0)));
    for (int i = 0; i < m_; ++i) axpy(r, c[i], E_[i]);
    return r;
  }
  /// Components c^i = ⟨F^i, V⟩ of the tangent part of V.
  std::vector<J> tangent_coefficients(const JV& V) const {
    std::vector<J> c;
    for (int i = 0; i < m_; ++i) c.push_back(dot(F_[i], V));
    return c;
  }

  JV ambient_part(const JV& V) const {
    if (ambient_.kind == AmbientSpec::Kind::euclidean) return V;
    JV r = V;
    for (int a : ambient_.fixed_axes) r[a] = constant(T(0));
    axpy(r, -dot(nu_, r), nu_);
    return r;
  }
  JV tangent_part(const JV& V) const { return tangent_field(tangent_coefficients(V)); }
  JV normal_part(const JV& V) const { return ambient_part(V) - tangent_part(V); }

  JV project(Projection p, const JV& V) const {
    switch (p) {
      case Projection::pullback: return ambient_part(V);
      case Projection::tangent: return tangent_part(V);
      case Projection::normal: return normal_part(V);
    }
    return V;
  }

  /// ∇_i V for the chosen connection: project(∂_i V).
  JV covariant(Projection p, const JV& V, int i) const { return project(p, derivative(V, i)); }

  /// Directional derivative Σ_i w^i ∂_i F.
  JV directional(const std::vector<J>& w, const JV& F) const {
    JV r(F.size(), constant(T(0)));
    for (int i = 0; i < m_; ++i) axpy(r, w[i], derivative(F, i));
    return r;
  }

  /// Positive rough Laplacian ΔV = −g^{ij}(∇_i∇_j V − Γ^k_ij ∇_k V).
  JV laplacian(Projection p, const JV& V) const {
    int q = order_of(V);
    if (q < 2) throw OrderError("rough Laplacian needs a field known to order ≥ 2");
    std::vector<JV> D(m_);
    for (int k = 0; k < m_; ++k) D[k] = covariant(p, V, k);
    JV r(dim_, constant(T(0)));
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < m_; ++j) {
        JV hess = covariant(p, D[j], i);
        for (int k = 0; k < m_; ++k) axpy(hess, -Gamma_[k][i][j], D[k]);
        axpy(r, -ginv_[i][j], hess);
      }
    }
    return r;
  }

  /// Positive Laplace–Beltrami operator on functions.
  J scalar_laplacian(const J& f) const {
    if (f.order() < 2) throw OrderError("scalar Laplacian needs order ≥ 2");
    std::vector<J> d(m_);
    for (int k = 0; k < m_; ++k) d[k] = f.derivative(k);
    J r = constant(T(0));
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j) {
        J h = d[j].derivative(i);
        for (int k = 0; k < m_; ++k) h -= Gamma_[k][i][j] * d[k];
        r -= ginv_[i][j] * h;
      }
    return r;
  }

  /// Second fundamental form B_ij = P_N(∂_i E_j), order N−2.
  const JV& B(int i, int j) const {
    ensure_extrinsic();
    return B_[i][j];
  }
  /// Mean curvature H = (1/m) g^{ij} B_ij, order N−2.
  const JV& H() const {
    ensure_extrinsic();
    return H_;
  }

  /// Value B(V, W) at the base point for E-frame components v, w.
  Vec<T> B_value(const Vec<T>& v, const Vec<T>& w) const {
    ensure_extrinsic();
    Vec<T> r(dim_, T(0));
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j) {
        T c = v[i] * w[j];
        if (c == T(0)) continue;
        for (int a = 0; a < dim_; ++a) r[a] += c * B_[i][j][a].value();
      }
    return r;
  }

  /// Shape operator A_X(V) = Σ g^{lk} ⟨B(E_k, V), X⟩ E_l at the base point, as E-frame components.
  Vec<T> shape_components(const Vec<T>& X, const Vec<T>& v) const {
    ensure_extrinsic();
    Vec<T> bk(m_, T(0));
    for (int k = 0; k < m_; ++k)
      for (int j = 0; j < m_; ++j) bk[k] += v[j] * dot_value(B_[k][j], X);
    Vec<T> r(m_, T(0));
    for (int l = 0; l < m_; ++l)
      for (int k = 0; k < m_; ++k) r[l] += ginv_[l][k].value() * bk[k];
    return r;
  }
  /// Ambient vector at the base point from E-frame components.
  Vec<T> frame_vector(const Vec<T>& c) const {
    Vec<T> r(dim_, T(0));
    for (int i = 0; i < m_; ++i)
      for (int a = 0; a < dim_; ++a) r[a] += c[i] * E_[i][a].value();
    return r;
  }
  /// E-frame components of the tangent part of an ambient vector at the base point.
  Vec<T> frame_components(const Vec<T>& V) const {
    Vec<T> c(m_, T(0));
    for (int i = 0; i < m_; ++i)
      for (int a = 0; a < dim_; ++a) c[i] += F_[i][a].value() * V[a];
    return c;
  }

  FrameData<T> frame() const {
    FrameData<T> f;
    f.p = values(X_);
    for (int i = 0; i < m_; ++i) f.E.push_back(values(E_[i]));
    f.g = value_matrix(g_);
    f.ginv = value_matrix(ginv_);
    f.Gamma.resize(m_);
    for (int k = 0; k < m_; ++k) f.Gamma[k] = value_matrix(Gamma_[k]);
    f.P_amb = projector_matrix(Projection::pullback);
    f.P_T = projector_matrix(Projection::tangent);
    f.P_N = projector_matrix(Projection::normal);
    return f;
  }

  ExtrinsicData<T> extrinsic() const {
    ensure_extrinsic();
    ExtrinsicData<T> x;
    x.B.assign(m_, std::vector<Vec<T>>(m_));
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j) x.B[i][j] = values(B_[i][j]);
    x.H = values(H_);
    x.A_H.assign(m_, Vec<T>(m_, T(0)));
    Mat<T> S(m_, Vec<T>(m_, T(0)));
    for (int k = 0; k < m_; ++k)
      for (int j = 0; j < m_; ++j) S[k][j] = dot(x.B[k][j], x.H);
    for (int l = 0; l < m_; ++l)
      for (int j = 0; j < m_; ++j)
        for (int k = 0; k < m_; ++k) x.A_H[l][j] += ginv_[l][k].value() * S[k][j];
    J h2 = dot(H_, H_);
    for (int i = 0; i < m_; ++i) {
      x.nablaN_H.push_back(values(covariant(Projection::normal, H_, i)));
      x.dH2.push_back(h2.derivative(i).value());
    }
    // Operator norm of A_H − |H|² Id in a g-orthonormal frame: the
    // generalized eigenvalues of (S, g) shifted by |H|².
    Eigen::MatrixXd Sm(m_, m_), Gm(m_, m_);
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j) {
        Sm(i, j) = to_double(S[i][j]);
        Gm(i, j) = to_double(g_[i][j].value());
      }
    Sm = 0.5 * (Sm + Sm.transpose()).eval();
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(Sm, Gm);
    double h2v = to_double(h2.value());
    for (int i = 0; i < m_; ++i) x.pu_defect = std::max(x.pu_defect, std::fabs(es.eigenvalues()(i) - h2v));
    if (ambient_dimension() - m_ == 1) x.eta = unit_normal(x.H);
    return x;
  }

  /// Dimension of the ambient space itself.
  int ambient_dimension() const {
    if (ambient_.kind == AmbientSpec::Kind::euclidean) return dim_;
    return dim_ - 1 - static_cast<int>(ambient_.fixed_axes.size());
  }

  // Intrinsic curvature of the induced metric, order N−3.
  const J& riemann(int l, int i, int j, int k) const {
    ensure_curvature();
    return R_[l][i][j][k];
  }
  const J& ricci(int j, int k) const {
    ensure_curvature();
    return ric_[j][k];
  }
  const J& scalar_curvature() const {
    ensure_curvature();
    return scal_;
  }

  CurvatureData<T> curvature() const {
    ensure_curvature();
    CurvatureData<T> c;
    c.R.assign(m_, std::vector<Mat<T>>(m_, Mat<T>(m_, Vec<T>(m_, T(0)))));
    for (int l = 0; l < m_; ++l)
      for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j)
          for (int k = 0; k < m_; ++k) c.R[l][i][j][k] = R_[l][i][j][k].value();
    c.ric = value_matrix(ric_);
    c.scal = scal_.value();
    T s = c.scal / T(m_);
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j) {
        using std::fabs;
        double d = to_double(c.ric[i][j] - s * g_[i][j].value());
        c.einstein_defect = std::max(c.einstein_defect, std::fabs(d));
      }
    return c;
  }

  T dot_value(const JV& a, const Vec<T>& b) const {
    T r(0);
    for (int i = 0; i < dim_; ++i) r += a[i].value() * b[i];
    return r;
  }

private:
  void build_metric() {
    g_.assign(m_, std::vector<J>(m_));
    for (int i = 0; i < m_; ++i)
      for (int j = i; j < m_; ++j) {
        g_[i][j] = dot(E_[i], E_[j]);
        if (j != i) g_[j][i] = g_[i][j];
      }
    check_conditioning();
    invert_metric();
    // Γ^k_ij = ½ g^{kl} (∂_i g_jl + ∂_j g_il − ∂_l g_ij)
    std::vector<Mat<J>> dg(m_, Mat<J>(m_, std::vector<J>(m_)));
    for (int l = 0; l < m_; ++l)
      for (int i = 0; i < m_; ++i)
        for (int j = i; j < m_; ++j) {
          dg[l][i][j] = g_[i][j].derivative(l);
          dg[l][j][i] = dg[l][i][j];
        }
    Gamma_.assign(m_, Mat<J>(m_, std::vector<J>(m_)));
    for (int i = 0; i < m_; ++i)
      for (int j = i; j < m_; ++j) {
        std::vector<J> lower(m_);
        for (int l = 0; l < m_; ++l) lower[l] = (dg[i][j][l] + dg[j][i][l] - dg[l][i][j]) * T(0.5);
        for (int k = 0; k < m_; ++k) {
          J s = ginv_[k][0] * lower[0];
          for (int l = 1; l < m_; ++l) s += ginv_[k][l] * lower[l];
          Gamma_[k][i][j] = s;
          if (j != i) Gamma_[k][j][i] = s;
        }
      }
  }

  void check_conditioning() const {
    Eigen::MatrixXd G(m_, m_);
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j) G(i, j) = to_double(g_[i][j].value());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G, Eigen::EigenvaluesOnly);
    double lo = es.eigenvalues().minCoeff();
    double hi = es.eigenvalues().maxCoeff();
    if (!(lo > 0) || hi / lo > 1e10)
      throw SingularityError("degenerate metric at the base point (condition number " +
                             std::to_string(lo > 0 ? hi / lo : INFINITY) + ")");
  }

  // Gauss–Jordan elimination over jets; pivots are bounded away from zero by
  // the conditioning check.
  void invert_metric() {
    Mat<J> a = g_;
    ginv_.assign(m_, std::vector<J>(m_, constant(T(0))));
    for (int i = 0; i < m_; ++i) ginv_[i][i] = constant(T(1));
    for (int c = 0; c < m_; ++c) {
      int piv = c;
      using std::fabs;
      for (int r = c + 1; r < m_; ++r)
        if (fabs(a[r][c].value()) > fabs(a[piv][c].value())) piv = r;
      std::swap(a[c], a[piv]);
      std::swap(ginv_[c], ginv_[piv]);
      J inv = reciprocal(a[c][c]);
      for (int k = 0; k < m_; ++k) {
        a[c][k] = a[c][k] * inv;
        ginv_[c][k] = ginv_[c][k] * inv;
      }
      for (int r = 0; r < m_; ++r) {
        if (r == c) continue;
        J f = a[r][c];
        for (int k = 0; k < m_; ++k) {
          a[r][k] -= f * a[c][k];
          ginv_[r][k] -= f * ginv_[c][k];
        }
      }
    }
    for (int i = 0; i < m_; ++i)
      for (int j = i + 1; j < m_; ++j) {
        J s = (ginv_[i][j] + ginv_[j][i]) * T(0.5);
        ginv_[i][j] = s;
        ginv_[j][i] = s;
      }
  }

  void build_ambient() {
    if (ambient_.kind == AmbientSpec::Kind::euclidean) return;
    Vec<T> c(dim_, T(0));
    if (!ambient_.center.empty()) {
      if (static_cast<int>(ambient_.center.size()) != dim_) throw DomainError("ambient center has wrong size");
      c = evaluate<T>(ambient_.center, Vec<T>{});
    }
    T r = evaluate<T>(ambient_.radius, Vec<T>{});
    if (!(r > T(0))) throw DomainError("ambient sphere radius must be positive");
    T inv = T(1) / r;
    nu_.resize(dim_);
    for (int a = 0; a < dim_; ++a) nu_[a] = (X_[a] + (-c[a])) * inv;
    for (int a : ambient_.fixed_axes) nu_[a] = constant(T(0));
  }

  void build_dual() {
    F_.assign(m_, JV(dim_, constant(T(0))));
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j) axpy(F_[i], ginv_[i][j], E_[j]);
  }

  void ensure_extrinsic() const {
    if (!B_.empty()) return;
    B_.assign(m_, std::vector<JV>(m_));
    for (int i = 0; i < m_; ++i)
      for (int j = i; j < m_; ++j) {
        B_[i][j] = normal_part(derivative(E_[j], i));
        if (j != i) B_[j][i] = B_[i][j];
      }
    H_.assign(dim_, constant(T(0)));
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j) axpy(H_, ginv_[i][j], B_[i][j]);
    for (auto& h : H_) h *= T(1) / T(m_);
  }

  void ensure_curvature() const {
    if (!R_.empty()) return;
    if (order_ < 3) throw OrderError("curvature needs chart jets of order ≥ 3");
    R_.assign(m_, std::vector<Mat<J>>(m_, Mat<J>(m_, std::vector<J>(m_, constant(T(0))))));
    for (int l = 0; l < m_; ++l)
      for (int i = 0; i < m_; ++i)
        for (int j = i + 1; j < m_; ++j)
          for (int k = 0; k < m_; ++k) {
            J r = Gamma_[l][j][k].derivative(i) - Gamma_[l][i][k].derivative(j);
            for (int p = 0; p < m_; ++p) r += Gamma_[l][i][p] * Gamma_[p][j][k] - Gamma_[l][j][p] * Gamma_[p][i][k];
            R_[l][i][j][k] = r;
            R_[l][j][i][k] = -r;
          }
    ric_.assign(m_, std::vector<J>(m_, constant(T(0))));
    for (int j = 0; j < m_; ++j)
      for (int k = 0; k < m_; ++k)
        for (int i = 0; i < m_; ++i) ric_[j][k] += R_[i][i][j][k];
    scal_ = constant(T(0));
    for (int j = 0; j < m_; ++j)
      for (int k = 0; k < m_; ++k) scal_ += ginv_[j][k] * ric_[j][k];
  }

  Mat<T> value_matrix(const Mat<J>& a) const {
    Mat<T> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (const auto& x : a[i]) r[i].push_back(x.value());
    return r;
  }

  Mat<T> projector_matrix(Projection p) const {
    Mat<T> M(dim_, Vec<T>(dim_, T(0)));
    for (int b = 0; b < dim_; ++b) {
      Vec<T> e(dim_, T(0));
      e[b] = T(1);
      Vec<T> col = values(project(p, constant_vector(e)));
      for (int a = 0; a < dim_; ++a) M[a][b] = col[a];
    }
    return M;
  }

  // Normalized normal projection of the coordinate axis with the largest
  // normal component, oriented so that ⟨η, H⟩ ≥ 0.
  Vec<T> unit_normal(const Vec<T>& H) const {
    Mat<T> PN = projector_matrix(Projection::normal);
    int best = 0;
    for (int b = 1; b < dim_; ++b)
      if (PN[b][b] > PN[best][best]) best = b;
    Vec<T> v(dim_);
    for (int a = 0; a < dim_; ++a) v[a] = PN[a][best];
    v = (T(1) / norm(v)) * v;
    if (dot(v, H) < T(0)) v = T(-1) * v;
    return v;
  }

  const ImmersionSpec& spec_;
  AmbientSpec ambient_;
  Vec<T> u_;
  int order_;
  int m_;
  int dim_;
  const MonomialTable* table_;
  JV X_;
  std::vector<JV> E_;
  Mat<J> g_, ginv_;
  std::vector<Mat<J>> Gamma_;
  JV nu_;
  std::vector<JV> F_;
  mutable std::vector<std::vector<JV>> B_;
  mutable JV H_;
  mutable std::vector<std::vector<Mat<J>>> R_;
  mutable Mat<J> ric_;
  mutable J scal_;
};

/// Frame data at u (order-3 chart jets: enough for Christoffel symbols' values).
template <class T = double>
FrameData<T> frame_at(const ImmersionSpec& spec, const AmbientSpec& ambient, const Vec<T>& u) {
  return LocalGeometry<T>(spec, ambient, u, 3).frame();
}

template <class T = double>
ExtrinsicData<T> extrinsic_at(const ImmersionSpec& spec, const AmbientSpec& ambient, const Vec<T>& u) {
  return LocalGeometry<T>(spec, ambient, u, 3).extrinsic();
}

/// Induced curvature. Intrinsic, so the unit sphere ambient is used.
template <class T = double>
CurvatureData<T> induced_curvature_at(const ImmersionSpec& spec, const Vec<T>& u) {
  return LocalGeometry<T>(spec, AmbientSpec::unit_sphere(spec.n), u, 3).curvature();
}

template <class T>
Vec<T> to_scalars(const std::vector<double>& u) {
  Vec<T> r;
  for (double x : u) r.push_back(T(x));
  return r;
}

}  // namespace bihar
