// SPDX-License-Identifier: Apache-2.0
#pragma once

// Truncated multivariate Taylor polynomials ("jets") with forward-mode
// propagation through + − × ÷, sin, cos, sqrt and integer powers.
//
// Coefficient convention (fixed repo-wide): a jet stores Taylor
// coefficients c_α = ∂^α f(u₀) / α!. Use Jet::partial(α) for the
// derivative ∂^α f(u₀) = α! c_α.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace bihar {

inline constexpr int kMaxJetOrder = 6;
inline constexpr int kMaxJetVars = 8;

class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class OrderError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using MultiIndex = std::vector<int>;

/// Monomials of total degree ≤ kMaxJetOrder in a fixed number of variables,
/// graded by degree so that "degree ≤ d" is always a prefix.
class MonomialTable {
public:
  static const MonomialTable& get(int vars) {
    if (vars < 0 || vars > kMaxJetVars) throw OrderError("unsupported number of jet variables");
    static std::array<std::unique_ptr<MonomialTable>, kMaxJetVars + 1> tables;
    static std::array<std::once_flag, kMaxJetVars + 1> flags;
    std::call_once(flags[vars], [vars] { tables[vars].reset(new MonomialTable(vars)); });
    return *tables[vars];
  }

  int vars() const { return vars_; }
  int size() const { return static_cast<int>(degree_.size()); }
  int degree(int i) const { return degree_[i]; }
  /// Number of monomials with degree ≤ d.
  int count_upto(int d) const { return d < 0 ? 0 : count_[std::min(d, kMaxJetOrder)]; }
  const std::vector<std::uint8_t>& exponents(int i) const { return exps_[i]; }
  int product(int i, int j) const { return product_[i][j]; }
  const std::vector<int>& product_row(int i) const { return product_[i]; }
  /// Index of monomial i multiplied by u_v, or -1 past the maximum degree.
  int raise(int v, int i) const { return raise_[v][i]; }

  int index_of(const MultiIndex& alpha) const {
    if (static_cast<int>(alpha.size()) != vars_) throw OrderError("multi-index arity mismatch");
    int idx = 0;
    for (int v = 0; v < vars_; ++v)
      for (int k = 0; k < alpha[v]; ++k) {
        idx = raise_[v][idx];
        if (idx < 0) throw OrderError("multi-index exceeds maximum jet order");
      }
    return idx;
  }

private:
  explicit MonomialTable(int vars) : vars_(vars) {
    std::vector<std::uint8_t> e(vars, 0);
    for (int d = 0; d <= kMaxJetOrder; ++d) {
      enumerate(e, 0, d);
      count_[d] = static_cast<int>(exps_.size());
    }
    for (const auto& m : exps_) {
      int s = 0;
      for (auto x : m) s += x;
      degree_.push_back(s);
    }
    auto find = [this](const std::vector<std::uint8_t>& m) {
      int s = 0;
      for (auto x : m) s += x;
      if (s > kMaxJetOrder) return -1;
      int lo = s == 0 ? 0 : count_[s - 1];
      for (int i = lo; i < count_[s]; ++i)
        if (exps_[i] == m) return i;
      return -1;
    };
    raise_.assign(vars, std::vector<int>(exps_.size(), -1));
    for (int v = 0; v < vars; ++v)
      for (std::size_t i = 0; i < exps_.size(); ++i) {
        auto m = exps_[i];
        ++m[v];
        raise_[v][i] = find(m);
      }
    product_.resize(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      int n = count_[kMaxJetOrder - degree_[i]];
      product_[i].resize(n);
      for (int j = 0; j < n; ++j) {
        auto m = exps_[i];
        for (int v = 0; v < vars; ++v) m[v] += exps_[j][v];
        product_[i][j] = find(m);
      }
    }
  }

  // Lexicographic enumeration of exponent vectors of total degree d.
  void enumerate(std::vector<std::uint8_t>& e, int v, int remaining) {
    if (vars_ == 0) {
      if (remaining == 0) exps_.push_back(e);
      return;
    }
    if (v == vars_ - 1) {
      e[v] = static_cast<std::uint8_t>(remaining);
      exps_.push_back(e);
      e[v] = 0;
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      e[v] = static_cast<std::uint8_t>(k);
      enumerate(e, v + 1, remaining - k);
    }
    e[v] = 0;
  }

  int vars_;
  std::array<int, kMaxJetOrder + 1> count_{};
  std::vector<std::vector<std::uint8_t>> exps_;
  std::vector<int> degree_;
  std::vector<std::vector<int>> raise_;
  std::vector<std::vector<int>> product_;
};

/// Truncated Taylor expansion around a base point. `order` is the highest
/// degree that is valid; coefficients past the stored prefix are zero, which
/// keeps constants and low-degree inputs cheap.
template <class T>
class Jet {
public:
  Jet() = default;

  static Jet constant(const MonomialTable& table, const T& value) {
    Jet j;
    j.table_ = &table;
    j.order_ = kMaxJetOrder;
    j.c_.assign(1, value);
    return j;
  }

  /// The coordinate function u_v expanded at base value `at`.
  static Jet variable(const MonomialTable& table, int v, const T& at, int order) {
    Jet j;
    j.table_ = &table;
    j.order_ = order;
    j.c_.assign(order >= 1 ? 1 + table.vars() : 1, T(0));
    j.c_[0] = at;
    if (order >= 1) j.c_[table.raise(v, 0)] = T(1);
    return j;
  }

  static Jet zero(const MonomialTable& table) { return constant(table, T(0)); }

  const MonomialTable& table() const { return *table_; }
  int vars() const { return table_->vars(); }
  int order() const { return order_; }
  const T& value() const { return c_[0]; }
  /// Stored coefficient count; entries beyond are zero.
  int stored() const { return static_cast<int>(c_.size()); }
  T coeff(int i) const { return i < stored() ? c_[i] : T(0); }
  T coeff(const MultiIndex& alpha) const { return coeff(table_->index_of(alpha)); }

  /// ∂^α f at the base point.
  T partial(const MultiIndex& alpha) const {
    int total = 0;
    T fact(1);
    for (int a : alpha) {
      total += a;
      for (int k = 2; k <= a; ++k) fact *= T(k);
    }
    if (total > order_) throw OrderError("requested derivative beyond jet order");
    return coeff(alpha) * fact;
  }

  Jet truncated(int order) const {
    Jet r = *this;
    r.order_ = std::min(order_, order);
    r.c_.resize(std::min<std::size_t>(r.c_.size(), table_->count_upto(r.order_)));
    return r;
  }

  /// ∂_v, one order lower.
  Jet derivative(int v) const {
    if (order_ < 1) throw OrderError("cannot differentiate an order-0 jet");
    Jet r;
    r.table_ = table_;
    r.order_ = order_ - 1;
    int n = std::min(table_->count_upto(r.order_), stored());
    r.c_.assign(std::max(n, 1), T(0));
    for (int k = 0; k < n; ++k) {
      int up = table_->raise(v, k);
      if (up >= 0 && up < stored())
        r.c_[k] = c_[up] * T(table_->exponents(k)[v] + 1);
    }
    r.trim();
    return r;
  }

  Jet& operator+=(const Jet& o) { return accumulate(o, T(1)); }
  Jet& operator-=(const Jet& o) { return accumulate(o, T(-1)); }
  Jet& operator*=(const T& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }
  Jet& operator+=(const T& s) {
    c_[0] += s;
    return *this;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator-(Jet a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Jet operator*(Jet a, const T& s) { return a *= s; }
  friend Jet operator*(const T& s, Jet a) { return a *= s; }
  friend Jet operator+(Jet a, const T& s) { return a += s; }

  friend Jet operator*(const Jet& a, const Jet& b) {
    const MonomialTable& t = *a.table_;
    Jet r;
    r.table_ = a.table_;
    r.order_ = std::min(a.order_, b.order_);
    int deg_a = t.degree(a.stored() - 1);
    int deg_b = t.degree(b.stored() - 1);
    int top = std::min(r.order_, deg_a + deg_b);
    r.c_.assign(t.count_upto(top), T(0));
    int na = std::min(a.stored(), t.count_upto(top));
    for (int i = 0; i < na; ++i) {
      const T& ai = a.c_[i];
      if (ai == T(0)) continue;
      int nb = std::min(b.stored(), t.count_upto(top - t.degree(i)));
      const auto& row = t.product_row(i);
      for (int j = 0; j < nb; ++j) r.c_[row[j]] += ai * b.c_[j];
    }
    return r;
  }

  Jet& operator*=(const Jet& o) { return *this = *this * o; }

  /// f(a) = Σ_j f⁽ʲ⁾(a₀)/j! (a − a₀)^j given the Taylor coefficients taylor[j] = f⁽ʲ⁾(a₀)/j!.
  Jet compose(const std::vector<T>& taylor) const {
    int n = order_;
    if (stored() == 1) return constant_like(taylor[0]);
    Jet h = *this;
    h.c_[0] = T(0);
    Jet r = constant_like(taylor[n]);
    r.order_ = n;
    for (int j = n - 1; j >= 0; --j) {
      r = r * h;
      r.c_[0] += taylor[j];
    }
    return r;
  }

  /// Number of Taylor terms a univariate composition needs.
  int composition_order() const { return stored() == 1 ? 0 : order_; }

private:
  Jet constant_like(const T& v) const {
    Jet r = constant(*table_, v);
    return r;
  }

  Jet& accumulate(const Jet& o, const T& s) {
    order_ = std::min(order_, o.order_);
    int cap = table_->count_upto(order_);
    int n = std::min(cap, std::max(stored(), o.stored()));
    c_.resize(std::min<std::size_t>(c_.size(), cap));
    if (static_cast<int>(c_.size()) < n) c_.resize(n, T(0));
    int m = std::min(n, o.stored());
    for (int i = 0; i < m; ++i) c_[i] += s * o.c_[i];
    return *this;
  }

  void trim() {
    while (c_.size() > 1 && c_.back() == T(0)) c_.pop_back();
  }

  const MonomialTable* table_ = nullptr;
  int order_ = 0;
  std::vector<T> c_{T(0)};
};

template <class T>
Jet<T> reciprocal(const Jet<T>& a) {
  using std::abs;
  T x = a.value();
  if (x == T(0)) throw DomainError("division by zero at the base point");
  int n = a.composition_order();
  std::vector<T> t(n + 1);
  T inv = T(1) / x;
  T p = inv;
  for (int j = 0; j <= n; ++j) {
    t[j] = (j % 2 == 0 ? p : -p);
    p *= inv;
  }
  return a.compose(t);
}

template <class T>
Jet<T> operator/(const Jet<T>& a, const Jet<T>& b) {
  return a * reciprocal(b);
}

template <class T>
Jet<T> sin(const Jet<T>& a) {
  using std::cos;
  using std::sin;
  int n = a.composition_order();
  T s = sin(a.value());
  T c = cos(a.value());
  std::vector<T> t(n + 1);
  T fact(1);
  for (int j = 0; j <= n; ++j) {
    if (j > 0) fact *= T(j);
    T d = (j % 4 == 0) ? s : (j % 4 == 1) ? c : (j % 4 == 2) ? -s : -c;
    t[j] = d / fact;
  }
  return a.compose(t);
}

template <class T>
Jet<T> cos(const Jet<T>& a) {
  using std::cos;
  using std::sin;
  int n = a.composition_order();
  T s = sin(a.value());
  T c = cos(a.value());
  std::vector<T> t(n + 1);
  T fact(1);
  for (int j = 0; j <= n; ++j) {
    if (j > 0) fact *= T(j);
    T d = (j % 4 == 0) ? c : (j % 4 == 1) ? -s : (j % 4 == 2) ? -c : s;
    t[j] = d / fact;
  }
  return a.compose(t);
}

template <class T>
Jet<T> sqrt(const Jet<T>& a) {
  using std::sqrt;
  T x = a.value();
  int n = a.composition_order();
  if (x < T(0) || (x == T(0) && n > 0)) throw DomainError("sqrt of a non-positive value");
  std::vector<T> t(n + 1);
  // Binomial series of x^{1/2}: t_j = C(1/2, j) x^{1/2 - j}.
  T root = sqrt(x);
  T binom(1);
  T power = root;
  for (int j = 0; j <= n; ++j) {
    t[j] = binom * power;
    binom *= (T(1) / T(2) - T(j)) / T(j + 1);
    power /= x;
  }
  return a.compose(t);
}

template <class T>
Jet<T> pow(const Jet<T>& a, int e) {
  if (e < 0) return reciprocal(pow(a, -e));
  Jet<T> r = Jet<T>::constant(a.table(), T(1));
  Jet<T> base = a;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

/// Ambient-vector-valued jet field.
template <class T>
using JetVec = std::vector<Jet<T>>;

template <class T>
Jet<T> dot(const JetVec<T>& a, const JetVec<T>& b) {
  Jet<T> r = a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

template <class T>
JetVec<T> scaled(const JetVec<T>& v, const Jet<T>& s) {
  JetVec<T> r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(x * s);
  return r;
}

template <class T>
JetVec<T> scaled(const JetVec<T>& v, const T& s) {
  JetVec<T> r = v;
  for (auto& x : r) x *= s;
  return r;
}

template <class T>
void axpy(JetVec<T>& y, const Jet<T>& s, const JetVec<T>& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += s * x[i];
}

template <class T>
JetVec<T> operator+(JetVec<T> a, const JetVec<T>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class T>
JetVec<T> operator-(JetVec<T> a, const JetVec<T>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <class T>
JetVec<T> derivative(const JetVec<T>& v, int dir) {
  JetVec<T> r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(x.derivative(dir));
  return r;
}

template <class T>
int order_of(const JetVec<T>& v) {
  int o = kMaxJetOrder;
  for (const auto& x : v) o = std::min(o, x.order());
  return o;
}

template <class T>
std::vector<T> values(const JetVec<T>& v) {
  std::vector<T> r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(x.value());
  return r;
}

}  // namespace bihar
