// SPDX-License-Identifier: Apache-2.0
#pragma once

// Exact classification of hyperspheres, generalized Clifford tori and their
// equatorial / product submanifolds by biharmonic index, plus the
// conformal-harmonic cases in dimensions 4 and 6.

#include "bihar/catalog.hpp"
#include "bihar/interval.hpp"
#include "bihar/quadratic.hpp"
#include "bihar/surd.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace bihar {

enum class Verdict { harmonic, properly_biharmonic, none };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::harmonic: return "harmonic";
    case Verdict::properly_biharmonic: return "properly_biharmonic";
    case Verdict::none: return "none";
  }
  return "?";
}

struct ClassificationRecord {
  Family family = Family::hypersphere;
  std::string descriptor;
  std::map<std::string, Surd> params;  // n, n1, n2, m1, m2, msub, a2, b2 as applicable
  Verdict verdict = Verdict::none;
  std::optional<Surd> k;
  std::optional<Surd> H2;
  std::optional<Surd> z;                // a²/b² for torus families
  std::vector<Surd> z_roots;            // all real roots of the index quadratic
  std::optional<Surd> discriminant;
  std::optional<Surd> bound;            // n₁ + n₂ − 2√(n₁n₂)
  std::optional<Surd> enclosing_radius2;  // 1/(1+|H|²), pseudo-umbilical families only
  std::optional<Surd> enclosing_center2;  // |H|²/(1+|H|²)
  std::string note;

  const Surd& a2() const { return params.at("a2"); }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["family"] = to_string(family);
    j["descriptor"] = descriptor;
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (const auto& [key, v] : params) p[key] = bihar::to_json(v);
    j["params"] = p;
    j["verdict"] = to_string(verdict);
    auto opt = [&](const char* key, const std::optional<Surd>& v) {
      j[key] = v ? bihar::to_json(*v) : nlohmann::ordered_json();
    };
    opt("k", k);
    opt("H2", H2);
    opt("z", z);
    nlohmann::ordered_json roots = nlohmann::ordered_json::array();
    for (const auto& r : z_roots) roots.push_back(bihar::to_json(r));
    j["z_roots"] = roots;
    opt("discriminant", discriminant);
    opt("bound", bound);
    if (enclosing_radius2) {
      j["enclosing_sphere"] = {{"radius2", bihar::to_json(*enclosing_radius2)},
                               {"center_norm2", bihar::to_json(*enclosing_center2)}};
    } else {
      j["enclosing_sphere"] = nullptr;
    }
    if (!note.empty()) j["note"] = note;
    return j;
  }
};

class ClassificationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require_unit_interval(const Surd& a2, bool allow_one) {
  try {
    check_a2(a2, allow_one);
  } catch (const BuildError& e) {
    throw ClassificationError(e.what());
  }
}

inline bool is_zero(const Surd& s) { return s.sign() == 0; }

inline void set_pseudo_umbilical_sphere(ClassificationRecord& r) {
  r.enclosing_radius2 = Surd(1) / (Surd(1) + *r.H2);
  r.enclosing_center2 = *r.H2 / (Surd(1) + *r.H2);
}

/// k = m(2a² − 1)/a² and |H|² = b²/a² for the pseudo-umbilical families.
inline void fill_sphere_like(ClassificationRecord& r, int m, const Surd& a2) {
  Surd b2 = Surd(1) - a2;
  r.params["a2"] = a2;
  r.params["b2"] = b2;
  r.H2 = b2 / a2;
  if (is_zero(b2)) {
    r.verdict = Verdict::harmonic;
    return;
  }
  r.verdict = Verdict::properly_biharmonic;
  r.k = Surd(m) * (Surd(2) * a2 - Surd(1)) / a2;
  set_pseudo_umbilical_sphere(r);
}

/// k = (1 − b²/a²)p + (1 − a²/b²)q, harmonic iff b²p = a²q, for a product of
/// great p- and q-spheres of the factors S^{n₁}(a), S^{n₂}(b).
inline void fill_torus_like(ClassificationRecord& r, int p, int q, const Surd& a2) {
  Surd b2 = Surd(1) - a2;
  r.params["a2"] = a2;
  r.params["b2"] = b2;
  r.z = a2 / b2;
  // |H|² = ((b/a)p − (a/b)q)²/(p+q)² = (p²b²/a² − 2pq + q²a²/b²)/(p+q)².
  Surd P(p), Q(q);
  r.H2 = (P * P * b2 / a2 - Surd(2) * P * Q + Q * Q * a2 / b2) / Surd((p + q) * (p + q));
  if (is_zero(b2 * P - a2 * Q)) {
    r.verdict = Verdict::harmonic;
    return;
  }
  r.verdict = Verdict::properly_biharmonic;
  r.k = (Surd(1) - b2 / a2) * P + (Surd(1) - a2 / b2) * Q;
}

}  // namespace detail

/// S^{n−1}(a) ⊂ S^n.
inline ClassificationRecord classify_hypersphere(int n, const Surd& a2) {
  if (n < 2) throw ClassificationError("hypersphere needs n ≥ 2");
  detail::require_unit_interval(a2, true);
  ClassificationRecord r;
  r.family = Family::hypersphere;
  bool exact = !a2.is_rational() && (n == 5 || n == 7) && a2 == charm_hypersphere_a2(n);
  r.descriptor = "hypersphere:n=" + std::to_string(n) + ",a2=" + (exact ? std::string("exact") : detail::fmt(a2));
  r.params["n"] = Surd(n);
  detail::fill_sphere_like(r, n - 1, a2);
  return r;
}

/// Inverts k = (n−1)(2a²−1)/a²: a² = (n−1)/(2(n−1) − k), proper for k < n−1.
inline std::optional<ClassificationRecord> hypersphere_for_index(int n, const Rational& k) {
  if (n < 2) throw ClassificationError("hypersphere needs n ≥ 2");
  Rational m(n - 1);
  if (k >= m) return std::nullopt;
  return classify_hypersphere(n, Surd(m / (2 * m - k)));
}

/// A great msub-sphere of S^{n−1}(a) ⊂ S^n: harmonic in S(a), hence of index
/// msub(1 − b²/a²) in S^n unless a = 1.
inline ClassificationRecord classify_equatorial(int msub, int n, const Surd& a2) {
  if (msub < 1 || msub >= n - 1) throw ClassificationError("equatorial needs 1 ≤ msub < n−1");
  detail::require_unit_interval(a2, true);
  ClassificationRecord r;
  r.family = Family::equatorial_in_hypersphere;
  r.descriptor = "equatorial:m=" + std::to_string(msub) + ",n=" + std::to_string(n) + ",a2=" + detail::fmt(a2);
  r.params["msub"] = Surd(msub);
  r.params["n"] = Surd(n);
  detail::fill_sphere_like(r, msub, a2);
  return r;
}

/// T(a,b) = S^{n₁}(a) × S^{n₂}(b) ⊂ S^{n₁+n₂+1}.
inline ClassificationRecord classify_torus(int n1, int n2, const Surd& a2) {
  if (n1 < 1 || n2 < 1) throw ClassificationError("torus needs n₁, n₂ ≥ 1");
  detail::require_unit_interval(a2, false);
  ClassificationRecord r;
  r.family = Family::clifford;
  r.descriptor = "clifford:n1=" + std::to_string(n1) + ",n2=" + std::to_string(n2) + ",a2=" + detail::fmt(a2);
  r.params["n1"] = Surd(n1);
  r.params["n2"] = Surd(n2);
  detail::fill_torus_like(r, n1, n2, a2);
  r.bound = Surd(n1 + n2) - Surd(2) * Surd::sqrt_of(Rational(n1 * n2));
  return r;
}

/// Great m₁- and m₂-spheres of the torus factors, M₁ × M₂ ⊂ T(a,b).
inline ClassificationRecord classify_product(int m1, int n1, int m2, int n2, const Surd& a2) {
  if (m1 < 1 || m1 >= n1 || m2 < 1 || m2 >= n2)
    throw ClassificationError("product needs 0 < m₁ < n₁ and 0 < m₂ < n₂");
  detail::require_unit_interval(a2, false);
  ClassificationRecord r;
  r.family = Family::product_in_torus;
  r.descriptor = "product:m1=" + std::to_string(m1) + ",n1=" + std::to_string(n1) + ",m2=" + std::to_string(m2) +
                 ",n2=" + std::to_string(n2) + ",a2=" + detail::fmt(a2);
  r.params["m1"] = Surd(m1);
  r.params["n1"] = Surd(n1);
  r.params["m2"] = Surd(m2);
  r.params["n2"] = Surd(n2);
  detail::fill_torus_like(r, m1, m2, a2);
  return r;
}

/// Classifies a catalog spec by family.
inline ClassificationRecord classify(const ImmersionSpec& spec) {
  auto geti = [&](const char* key) { return static_cast<int>(spec.param(key).p().convert_to<long>()); };
  switch (spec.family) {
    case Family::hypersphere: return classify_hypersphere(spec.n, spec.param("a2"));
    case Family::clifford: return classify_torus(geti("n1"), geti("n2"), spec.param("a2"));
    case Family::equatorial_in_hypersphere: return classify_equatorial(geti("msub"), spec.n, spec.param("a2"));
    case Family::product_in_torus:
      return classify_product(geti("m1"), geti("n1"), geti("m2"), geti("n2"), spec.param("a2"));
    case Family::custom: break;
  }
  throw ClassificationError("spec " + spec.name + " is not a classified family");
}

/// The catalog spec a record describes.
inline ImmersionSpec spec_for(const ClassificationRecord& r) {
  auto geti = [&](const char* key) { return static_cast<int>(r.params.at(key).p().convert_to<long>()); };
  switch (r.family) {
    case Family::hypersphere: return hypersphere(geti("n"), r.a2());
    case Family::clifford: return clifford(geti("n1"), geti("n2"), r.a2());
    case Family::equatorial_in_hypersphere: return equatorial_in_hypersphere(geti("msub"), geti("n"), r.a2());
    case Family::product_in_torus: return product_in_torus(geti("m1"), geti("n1"), geti("m2"), geti("n2"), r.a2());
    case Family::custom: break;
  }
  throw ClassificationError("record has no catalog family");
}

// ---------------------------------------------------------------------------
// Tori of a prescribed index

struct ToriForIndex {
  std::vector<ClassificationRecord> records;
  Surd bound;                       // n₁ + n₂ − 2√(n₁n₂)
  std::partial_ordering k_vs_bound = std::partial_ordering::unordered;
  Surd discriminant;                // (n₁+n₂−k)² − 4n₁n₂
  std::vector<Surd> z_roots;        // real roots before filtering
  int harmonic_filtered = 0;
  bool swap_identity_checked = false;  // z₊/(1+z₊) = n₁/(n₁+n₂z₋)
};

namespace detail {

/// Sign of k − (s − 2√p) decided by squaring: k < bound ⇔ s − k > 0 and (s − k)² > 4p.
inline std::partial_ordering compare_to_bound(const Surd& k, int s, int p) {
  Surd t = Surd(s) - k;
  if (t.sign() <= 0) return std::partial_ordering::greater;
  int c = (t * t - Surd(4 * p)).sign();
  if (c > 0) return std::partial_ordering::less;
  if (c < 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

}  // namespace detail

/// Solves n₂z² − (n₁+n₂−k)z + n₁ = 0 for z = a²/b² and keeps the positive,
/// non-harmonic roots. Irrational k is supported when the discriminant is 0
/// or negative; otherwise the roots would need a nested radical.
inline ToriForIndex tori_for_index(int n1, int n2, const Surd& k) {
  if (n1 < 1 || n2 < 1) throw ClassificationError("torus needs n₁, n₂ ≥ 1");
  ToriForIndex out;
  out.bound = Surd(n1 + n2) - Surd(2) * Surd::sqrt_of(Rational(n1 * n2));
  Surd s = Surd(n1 + n2) - k;
  out.discriminant = s * s - Surd(4 * n1 * n2);
  out.k_vs_bound = detail::compare_to_bound(k, n1 + n2, n1 * n2);

  int dsign = out.discriminant.sign();
  RootKind kind = RootKind::none;
  if (dsign == 0) {
    kind = RootKind::single;
    out.z_roots = {s / Surd(2 * n2)};
  } else if (dsign > 0) {
    if (!k.is_rational())
      throw ClassificationError("irrational index with positive discriminant: roots leave Q(√d)");
    RootSet rs = solve_quadratic_exact(Rational(n2), -s.p(), Rational(n1));
    kind = rs.kind;
    out.z_roots = rs.roots;
  }
  if (kind == RootKind::pair) {
    // z₊z₋ = n₁/n₂ turns the larger root's a² into n₁/(n₁ + n₂z₋).
    const Surd& zm = out.z_roots[0];
    const Surd& zp = out.z_roots[1];
    if (!(zp / (Surd(1) + zp) == Surd(n1) / (Surd(n1) + Surd(n2) * zm)))
      throw AlgebraError("root swap identity failed");
    out.swap_identity_checked = true;
  }
  Surd harmonic_z(Rational(n1, n2));
  for (const auto& z : out.z_roots) {
    if (z.sign() <= 0) continue;
    if (z == harmonic_z) {
      ++out.harmonic_filtered;
      continue;
    }
    ClassificationRecord r = classify_torus(n1, n2, z / (Surd(1) + z));
    r.z_roots = out.z_roots;
    r.discriminant = out.discriminant;
    r.bound = out.bound;
    out.records.push_back(std::move(r));
  }
  return out;
}

inline ToriForIndex tori_for_index(int n1, int n2, const Rational& k) { return tori_for_index(n1, n2, Surd(k)); }

// ---------------------------------------------------------------------------
// Compact gate

enum class GateKind { harmonic_only, parallel_forced, inconclusive };

struct GateVerdict {
  GateKind kind = GateKind::inconclusive;
  std::optional<Rational> forced_H2;  // (m − k)/m
  std::string text;
};

/// Compact inclusions: index above m forces harmonicity; pseudo-umbilical ones
/// with m(1 − inf|H|²) ≤ k < m are proper iff ∇ᴺH = 0 with |H|² = (m−k)/m.
inline GateVerdict compact_gate(int m, const Rational& k, const Rational& inf_H2, bool pseudo_umbilical) {
  if (m < 1) throw ClassificationError("compact gate needs m ≥ 1");
  GateVerdict g;
  Rational M(m);
  if (M < k) {
    g.kind = GateKind::harmonic_only;
    g.text = "harmonic only";
    return g;
  }
  if (pseudo_umbilical && M * (1 - inf_H2) <= k && k < M) {
    g.kind = GateKind::parallel_forced;
    g.forced_H2 = (M - k) / M;
    g.text = "proper iff nablaN H = 0 and |H|^2 = " + to_string(*g.forced_H2) + " is constant";
    return g;
  }
  g.text = "gate inconclusive";
  return g;
}

// ---------------------------------------------------------------------------
// Conformal-harmonic hyperspheres and tori

struct TorusCertificate {
  int n1 = 0;
  int n2 = 0;
  std::string statement;
  bool holds = false;
};

struct NestedFormCertificate {
  std::string lo, hi;  // enclosure of rationalized − nested
  Rational width{0};
  bool holds = false;  // |difference| < 10^-30
};

struct CharmReport {
  int m = 0;
  int n = 0;
  std::optional<Rational> index;              // m = 4: n(n−1)/6
  std::optional<ClassificationRecord> hypersphere;
  std::optional<ClassificationRecord> full_mode_hypersphere;  // m = 4, curvature of the induced metric
  std::vector<TorusCertificate> tori;
  bool tori_none = true;
  std::optional<NestedFormCertificate> nested;
  std::string summary;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["m"] = m;
    j["n"] = n;
    j["index"] = index ? nlohmann::ordered_json(to_fraction_string(*index)) : nlohmann::ordered_json();
    j["hypersphere"] = hypersphere ? hypersphere->to_json() : nlohmann::ordered_json();
    if (full_mode_hypersphere) j["full_mode_hypersphere"] = full_mode_hypersphere->to_json();
    nlohmann::ordered_json t = nlohmann::ordered_json::array();
    for (const auto& c : tori) t.push_back({{"n1", c.n1}, {"n2", c.n2}, {"certificate", c.statement}, {"holds", c.holds}});
    j["torus_certificates"] = t;
    j["tori"] = tori_none ? "none" : "unresolved";
    if (nested)
      j["nested_form_certificate"] = {{"lo", nested->lo}, {"hi", nested->hi}, {"holds", nested->holds}};
    j["summary"] = summary;
    return j;
  }
};

/// Interval check at 40 digits that (275 − 5√649)/396 equals (25 − 5√(59/11))/36.
inline NestedFormCertificate nested_radius_certificate(const Surd& a2) {
  constexpr unsigned kDigits = 40;
  Interval s = isqrt_interval(Rational(59, 11), kDigits + 2);
  Interval nested = (Interval(Rational(25)) - Interval(Rational(5)) * s) * Interval(Rational(1, 36));
  Interval diff = a2.enclose(kDigits) - nested;
  NestedFormCertificate c;
  c.lo = to_decimal_string(diff.lo(), kDigits);
  c.hi = to_decimal_string(diff.hi(), kDigits);
  c.width = diff.width();
  Rational eps(1, pow10(30));
  c.holds = diff.lo() > -eps && diff.hi() < eps;
  return c;
}

/// Positive roots h = |H|² of the dimension-6 equation reduced on parallel
/// pseudo-umbilical submanifolds, where ΔH = 6|H|²H:
/// 36h² + (2c − 144)h + (2/75)(c − 45)(c − 30) = 0 with c = n² − n.
inline std::vector<Surd> charm6_h2_roots(int n) {
  Rational c(n * n - n);
  RootSet rs = solve_quadratic_exact(Rational(36), 2 * c - 144, Rational(2, 75) * (c - 45) * (c - 30));
  std::vector<Surd> pos;
  for (const auto& r : rs.roots)
    if (r.sign() > 0) pos.push_back(r);
  return pos;
}

inline CharmReport charm_classify(int m, int n) {
  if (m != 4 && m != 6) throw ClassificationError("charm classification supports m = 4 or 6");
  if (n <= m) throw ClassificationError("charm classification needs n > m");
  CharmReport rep;
  rep.m = m;
  rep.n = n;
  if (m == 4) {
    Rational k(n * (n - 1), 6);
    rep.index = k;
    // Parallel pseudo-umbilical: (4|H|² − 4 + k) = 0, so |H|² = (4 − k)/4 > 0 needs n ≤ 5.
    GateVerdict g = compact_gate(4, k, Rational(0), true);
    if (g.kind == GateKind::harmonic_only) {
      rep.summary = "no compact proper examples (pseudo-umbilical gate)";
      return rep;
    }
    if (n == 5) {
      auto h = hypersphere_for_index(5, k);
      rep.hypersphere = h;
      // Induced curvature: (2/3)scal − 2Ric = (scal/6)·Id = (2/a²)·Id, and 4(2a²−1)/a² = 2/a² gives a² = 3/4.
      rep.full_mode_hypersphere = classify_hypersphere(5, Surd(Rational(3, 4)));
      rep.full_mode_hypersphere->note = "index from the induced scalar curvature, k = scal/6 = 2/a^2";
    }
    // Tori of dimension 4 live in S^5.
    for (int n1 = 1; n1 < 4; ++n1) {
      int n2 = 4 - n1;
      TorusCertificate c{n1, n2, "", false};
      c.holds = detail::compare_to_bound(Surd(k), 4, n1 * n2) == std::partial_ordering::greater;
      c.statement = "k = " + to_string(k) + " > " + to_string(Surd(4) - Surd(2) * Surd::sqrt_of(Rational(n1 * n2)));
      rep.tori_none = rep.tori_none && c.holds;
      rep.tori.push_back(c);
    }
    rep.summary = rep.hypersphere ? "hypersphere a2 = " + to_string(rep.hypersphere->a2()) : "none";
    rep.summary += rep.tori_none ? "; tori: none" : "; tori: unresolved";
    return rep;
  }

  std::vector<Surd> roots = charm6_h2_roots(n);
  if (n != 7 || roots.size() != 1) {
    rep.summary = "none (pseudo-umbilical gate)";
    return rep;
  }
  const Surd& h = roots[0];
  Surd a2 = Surd(1) / (Surd(1) + h);
  rep.hypersphere = classify_hypersphere(7, a2);
  rep.nested = nested_radius_certificate(a2);
  // With n₁ + n₂ = 6 the torus equation is (n₁z − n₁ + 1)² + 8(n₁n₂ − 337/100) + (n₂/z − n₂ + 1)²;
  // its constant matches 6n₁n₂ − 24/25 since (n₁−1)² + (n₂−1)² + 2n₁n₂ = 26.
  for (int n1 = 1; n1 < 6; ++n1) {
    int n2 = 6 - n1;
    Rational constant = Rational((n1 - 1) * (n1 - 1) + (n2 - 1) * (n2 - 1)) + 8 * (Rational(n1 * n2) - Rational(337, 100));
    bool expansion = constant == Rational(6 * n1 * n2) - Rational(24, 25);
    bool positive = Rational(n1 * n2) > Rational(337, 100);
    TorusCertificate c{n1, n2, "", expansion && positive};
    c.statement = "n1*n2 = " + std::to_string(n1 * n2) + " > 337/100; sum of squares > 0 for z > 0";
    rep.tori_none = rep.tori_none && c.holds;
    rep.tori.push_back(c);
  }
  rep.summary = "hypersphere |H|^2 = " + to_string(h) + (rep.tori_none ? "; tori: none" : "; tori: unresolved");
  return rep;
}

}  // namespace bihar
