// SPDX-License-Identifier: Apache-2.0
#pragma once

// Second variation of the index-k bienergy along an isometric inclusion,
// evaluated pointwise. Δφ stands for the tension field δTφ = −mH, ⟨,⟩ is the
// ambient inner product and traces run over a g-orthonormal frame, written
// below with g^{ij} in the coordinate frame E_i.

#include "bihar/operators.hpp"

#include <array>

namespace bihar {

template <class T>
struct IkTerms {
  static constexpr int kCount = 14;
  std::array<Vec<T>, kCount> term;

  const Vec<T>& bilaplacian() const { return term[0]; }                 // Δ²V
  const Vec<T>& laplacian_of_trace() const { return term[1]; }          // Δ(tr⟨V,Tφ⟩Tφ − |Tφ|²V)
  const Vec<T>& d_tension_dot_frame() const { return term[2]; }         // −2⟨dΔφ, Tφ⟩V
  const Vec<T>& tension_squared() const { return term[3]; }             // |Δφ|²V
  const Vec<T>& v_dot_d_tension() const { return term[4]; }             // 2 tr⟨V, dΔφ⟩Tφ
  const Vec<T>& tension_dot_dv() const { return term[5]; }              // 2 tr⟨Δφ, dV⟩Tφ
  const Vec<T>& tension_projection() const { return term[6]; }          // −⟨Δφ, V⟩Δφ
  const Vec<T>& tangent_laplacian() const { return term[7]; }           // tr⟨ΔV, Tφ⟩Tφ
  const Vec<T>& double_trace() const { return term[8]; }                // tr⟨Tφ, tr⟨V,Tφ⟩Tφ⟩Tφ
  const Vec<T>& scaled_trace() const { return term[9]; }                // −2|Tφ|² tr⟨V,Tφ⟩Tφ
  const Vec<T>& dv_dot_frame() const { return term[10]; }               // −2⟨dV, Tφ⟩Δφ
  const Vec<T>& scaled_laplacian() const { return term[11]; }           // −|Tφ|²ΔV
  const Vec<T>& quartic() const { return term[12]; }                    // |Tφ|⁴V
  const Vec<T>& index_block() const { return term[13]; }                // k(ΔV − |Tφ|²V + tr⟨V,Tφ⟩Tφ)

  Vec<T> total() const {
    Vec<T> r = term[0];
    for (int i = 1; i < kCount; ++i) r = r + term[i];
    return r;
  }
};

template <class T>
IkTerms<T> ik_terms(const LocalGeometry<T>& geo, const JetVec<T>& V, const T& k) {
  if (order_of(V) < 4) throw OrderError("I_k needs the variation field to order ≥ 4");
  const int m = geo.m();
  const Projection P = Projection::pullback;
  // |Tφ|² = g^{ij}⟨E_i, E_j⟩, literally.
  T frame2(0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) frame2 += geo.ginv(i, j).value() * geo.dot_value(geo.E(i), values(geo.E(j)));

  JetVec<T> tau = delta_Tphi(geo);
  Vec<T> t = values(tau);
  Vec<T> v = values(V);
  JetVec<T> lapV = geo.laplacian(P, V);
  Vec<T> lv = values(lapV);
  JetVec<T> PTV = geo.tangent_part(V);
  Vec<T> ptv = values(PTV);

  std::vector<Vec<T>> dtau(m), dV(m), Ei(m);
  for (int i = 0; i < m; ++i) {
    dtau[i] = values(geo.covariant(P, tau, i));
    dV[i] = values(geo.covariant(P, V, i));
    Ei[i] = values(geo.E(i));
  }
  // tr ⟨a_·, b_·⟩ over the frame, and Σ g^{ij} ⟨x, a_i⟩ E_j.
  auto trace_pair = [&](const std::vector<Vec<T>>& a, const std::vector<Vec<T>>& b) {
    T s(0);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) s += geo.ginv(i, j).value() * dot(a[i], b[j]);
    return s;
  };
  auto trace_frame = [&](const Vec<T>& x, const std::vector<Vec<T>>& a) {
    Vec<T> r(geo.dim(), T(0));
    for (int i = 0; i < m; ++i) {
      T c = dot(x, a[i]);
      for (int j = 0; j < m; ++j) r = r + (geo.ginv(i, j).value() * c) * Ei[j];
    }
    return r;
  };

  IkTerms<T> I;
  I.term[0] = values(geo.laplacian(P, lapV));
  I.term[1] = values(geo.laplacian(P, PTV - scaled(V, frame2)));
  I.term[2] = (T(-2) * trace_pair(dtau, Ei)) * v;
  I.term[3] = dot(t, t) * v;
  I.term[4] = T(2) * trace_frame(v, dtau);
  I.term[5] = T(2) * trace_frame(t, dV);
  I.term[6] = (-dot(t, v)) * t;
  I.term[7] = trace_frame(lv, Ei);
  I.term[8] = trace_frame(ptv, Ei);
  I.term[9] = (T(-2) * frame2) * ptv;
  I.term[10] = (T(-2) * trace_pair(dV, Ei)) * t;
  I.term[11] = (-frame2) * lv;
  I.term[12] = (frame2 * frame2) * v;
  I.term[13] = k * (lv - frame2 * v + ptv);
  return I;
}

/// ⟨I_k(V), W⟩ at the base point.
template <class T>
T ik_pairing(const LocalGeometry<T>& geo, const FieldProcedure<T>& V, const FieldProcedure<T>& W, const T& k) {
  return dot(ik_terms(geo, V(geo), k).total(), values(W(geo)));
}

/// ⟨I_k(H), H⟩ at the base point; needs chart jets of order 6.
template <class T>
T instability_value(const LocalGeometry<T>& geo, const T& k) {
  if (geo.order() < 6) throw OrderError("instability value needs chart jets of order 6");
  return dot(ik_terms(geo, geo.H(), k).total(), values(geo.H()));
}

}  // namespace bihar
