// SPDX-License-Identifier: Apache-2.0
#pragma once

// Closed-form scalar expressions over chart coordinates u_0..u_{m-1}.
// Immutable DAGs with shared subtrees; evaluation memoizes per node so a
// chart whose components share sin/cos factors pays for each factor once.

#include "bihar/jet.hpp"
#include "bihar/rational.hpp"
#include "bihar/scalar.hpp"

#include <memory>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace bihar {

enum class ExprOp { coord, constant, add, sub, mul, div, neg, sin, cos, sqrt, pow };

struct ExprNode {
  ExprOp op;
  int index = 0;  // coordinate index, or exponent for pow
  Rational value{0};
  std::shared_ptr<const ExprNode> lhs, rhs;
};

class Expr {
public:
  Expr() : Expr(Rational(0)) {}
  Expr(const Rational& c) : node_(make(ExprOp::constant, 0, c)) {}  // NOLINT
  Expr(int c) : Expr(Rational(c)) {}                                // NOLINT

  static Expr coord(int i) { return Expr(make(ExprOp::coord, i, 0)); }

  const ExprNode& node() const { return *node_; }
  const ExprNode* id() const { return node_.get(); }
  bool is_constant() const { return node_->op == ExprOp::constant; }
  bool is_zero() const { return is_constant() && node_->value.sign() == 0; }
  bool is_one() const { return is_constant() && node_->value == 1; }

  friend Expr operator+(const Expr& a, const Expr& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_constant() && b.is_constant()) return Expr(a.node_->value + b.node_->value);
    return binary(ExprOp::add, a, b);
  }
  friend Expr operator-(const Expr& a, const Expr& b) {
    if (b.is_zero()) return a;
    if (a.is_constant() && b.is_constant()) return Expr(a.node_->value - b.node_->value);
    return binary(ExprOp::sub, a, b);
  }
  friend Expr operator*(const Expr& a, const Expr& b) {
    if (a.is_zero() || b.is_zero()) return Expr(0);
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    if (a.is_constant() && b.is_constant()) return Expr(a.node_->value * b.node_->value);
    return binary(ExprOp::mul, a, b);
  }
  friend Expr operator/(const Expr& a, const Expr& b) {
    if (b.is_zero()) throw DomainError("expression divided by constant 0");
    if (a.is_zero()) return Expr(0);
    if (b.is_one()) return a;
    if (a.is_constant() && b.is_constant()) return Expr(a.node_->value / b.node_->value);
    return binary(ExprOp::div, a, b);
  }
  friend Expr operator-(const Expr& a) {
    if (a.is_constant()) return Expr(-a.node_->value);
    return unary(ExprOp::neg, a);
  }
  friend Expr sin(const Expr& a) { return unary(ExprOp::sin, a); }
  friend Expr cos(const Expr& a) { return unary(ExprOp::cos, a); }
  friend Expr sqrt(const Expr& a) { return unary(ExprOp::sqrt, a); }
  friend Expr pow(const Expr& a, int e) {
    if (e == 0) return Expr(1);
    if (e == 1) return a;
    auto n = std::make_shared<ExprNode>();
    n->op = ExprOp::pow;
    n->index = e;
    n->lhs = a.node_;
    return Expr(std::shared_ptr<const ExprNode>(std::move(n)));
  }

  /// Largest coordinate index referenced, or -1.
  int max_coord() const {
    std::unordered_map<const ExprNode*, int> memo;
    return max_coord(node_.get(), memo);
  }

private:
  explicit Expr(std::shared_ptr<const ExprNode> n) : node_(std::move(n)) {}

  static std::shared_ptr<const ExprNode> make(ExprOp op, int index, const Rational& v) {
    auto n = std::make_shared<ExprNode>();
    n->op = op;
    n->index = index;
    n->value = v;
    return n;
  }
  static Expr binary(ExprOp op, const Expr& a, const Expr& b) {
    auto n = std::make_shared<ExprNode>();
    n->op = op;
    n->lhs = a.node_;
    n->rhs = b.node_;
    return Expr(std::shared_ptr<const ExprNode>(std::move(n)));
  }
  static Expr unary(ExprOp op, const Expr& a) {
    auto n = std::make_shared<ExprNode>();
    n->op = op;
    n->lhs = a.node_;
    return Expr(std::shared_ptr<const ExprNode>(std::move(n)));
  }
  static int max_coord(const ExprNode* n, std::unordered_map<const ExprNode*, int>& memo) {
    if (!n) return -1;
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    int r = n->op == ExprOp::coord ? n->index : -1;
    if (n->op != ExprOp::coord && n->op != ExprOp::constant)
      r = std::max(max_coord(n->lhs.get(), memo), max_coord(n->rhs.get(), memo));
    memo[n] = r;
    return r;
  }

  std::shared_ptr<const ExprNode> node_;
};

inline Expr operator*(const Rational& c, const Expr& e) { return Expr(c) * e; }

namespace detail {

inline Expr shift_coords(const ExprNode* n, int offset, std::unordered_map<const ExprNode*, Expr>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  Expr r;
  auto sub = [&](const std::shared_ptr<const ExprNode>& c) { return shift_coords(c.get(), offset, memo); };
  switch (n->op) {
    case ExprOp::coord: r = Expr::coord(n->index + offset); break;
    case ExprOp::constant: r = Expr(n->value); break;
    case ExprOp::add: r = sub(n->lhs) + sub(n->rhs); break;
    case ExprOp::sub: r = sub(n->lhs) - sub(n->rhs); break;
    case ExprOp::mul: r = sub(n->lhs) * sub(n->rhs); break;
    case ExprOp::div: r = sub(n->lhs) / sub(n->rhs); break;
    case ExprOp::neg: r = -sub(n->lhs); break;
    case ExprOp::sin: r = sin(sub(n->lhs)); break;
    case ExprOp::cos: r = cos(sub(n->lhs)); break;
    case ExprOp::sqrt: r = sqrt(sub(n->lhs)); break;
    case ExprOp::pow: r = pow(sub(n->lhs), n->index); break;
  }
  memo.emplace(n, r);
  return r;
}

}  // namespace detail

/// Renames coordinate u_i to u_{i+offset}, keeping shared subtrees shared.
inline std::vector<Expr> shift_coords(const std::vector<Expr>& exprs, int offset) {
  std::unordered_map<const ExprNode*, Expr> memo;
  std::vector<Expr> out;
  out.reserve(exprs.size());
  for (const auto& e : exprs) out.push_back(detail::shift_coords(e.id(), offset, memo));
  return out;
}

namespace detail {

template <class T>
T scalar_from(const Rational& r) {
  return to_scalar<T>(r);
}

// Generic evaluator: V is a scalar type or Jet<T>.
template <class V, class Leaf, class Const>
class Evaluator {
public:
  Evaluator(Leaf leaf, Const constant) : leaf_(std::move(leaf)), constant_(std::move(constant)) {}

  const V& operator()(const ExprNode* n) {
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    V r = compute(n);
    return memo_.emplace(n, std::move(r)).first->second;
  }

private:
  V compute(const ExprNode* n) {
    using std::cos;
    using std::sin;
    using std::sqrt;
    switch (n->op) {
      case ExprOp::coord: return leaf_(n->index);
      case ExprOp::constant: return constant_(n->value);
      case ExprOp::add: return (*this)(n->lhs.get()) + (*this)(n->rhs.get());
      case ExprOp::sub: return (*this)(n->lhs.get()) - (*this)(n->rhs.get());
      case ExprOp::mul: return (*this)(n->lhs.get()) * (*this)(n->rhs.get());
      case ExprOp::div: {
        const V& b = (*this)(n->rhs.get());
        check_nonzero(b);
        return (*this)(n->lhs.get()) / b;
      }
      case ExprOp::neg: return -(*this)(n->lhs.get());
      case ExprOp::sin: return sin((*this)(n->lhs.get()));
      case ExprOp::cos: return cos((*this)(n->lhs.get()));
      case ExprOp::sqrt: {
        const V& a = (*this)(n->lhs.get());
        check_sqrt(a);
        return sqrt(a);
      }
      case ExprOp::pow: {
        const V& a = (*this)(n->lhs.get());
        int e = n->index;
        if (e < 0) check_nonzero(a);
        return integer_power(a, e);
      }
    }
    throw DomainError("unknown expression node");
  }

  template <class U>
  static void check_nonzero(const U& b) {
    if constexpr (requires { b.value(); }) {
      if (b.value() == 0) throw DomainError("division by zero at the evaluation point");
    } else {
      if (b == U(0)) throw DomainError("division by zero at the evaluation point");
    }
  }
  template <class U>
  static void check_sqrt(const U& a) {
    if constexpr (requires { a.value(); }) {
      if (a.value() < 0) throw DomainError("sqrt of a negative value");
    } else {
      if (a < U(0)) throw DomainError("sqrt of a negative value");
    }
  }
  template <class U>
  static U integer_power(const U& a, int e) {
    if constexpr (requires { a.value(); }) {
      return pow(a, e);
    } else {
      U r(1);
      U b = a;
      int k = e < 0 ? -e : e;
      while (k) {
        if (k & 1) r *= b;
        k >>= 1;
        if (k) b *= b;
      }
      return e < 0 ? U(1) / r : r;
    }
  }

  Leaf leaf_;
  Const constant_;
  std::unordered_map<const ExprNode*, V> memo_;
};

}  // namespace detail

/// Evaluates several expressions at a point in scalar type T.
template <class T>
std::vector<T> evaluate(const std::vector<Expr>& exprs, const std::vector<T>& point) {
  auto leaf = [&point](int i) -> T {
    if (i >= static_cast<int>(point.size())) throw DomainError("coordinate index out of range");
    return point[i];
  };
  auto constant = [](const Rational& r) { return to_scalar<T>(r); };
  detail::Evaluator<T, decltype(leaf), decltype(constant)> ev(leaf, constant);
  std::vector<T> out;
  out.reserve(exprs.size());
  for (const auto& e : exprs) out.push_back(ev(e.id()));
  return out;
}

template <class T>
T evaluate(const Expr& e, const std::vector<T>& point) {
  return evaluate<T>(std::vector<Expr>{e}, point)[0];
}

/// Taylor jets of several expressions around `point`, truncated at `order`.
template <class T>
JetVec<T> jet_at(const std::vector<Expr>& exprs, const std::vector<T>& point, int order) {
  if (order < 0 || order > kMaxJetOrder) throw OrderError("jet order must lie in 0..6");
  const MonomialTable& table = MonomialTable::get(static_cast<int>(point.size()));
  auto leaf = [&](int i) -> Jet<T> {
    if (i >= static_cast<int>(point.size())) throw DomainError("coordinate index out of range");
    return Jet<T>::variable(table, i, point[i], order);
  };
  auto constant = [&table](const Rational& r) { return Jet<T>::constant(table, to_scalar<T>(r)); };
  detail::Evaluator<Jet<T>, decltype(leaf), decltype(constant)> ev(leaf, constant);
  JetVec<T> out;
  out.reserve(exprs.size());
  for (const auto& e : exprs) out.push_back(ev(e.id()).truncated(order));
  return out;
}

template <class T>
Jet<T> jet_at(const Expr& e, const std::vector<T>& point, int order) {
  return jet_at<T>(std::vector<Expr>{e}, point, order)[0];
}

}  // namespace bihar
