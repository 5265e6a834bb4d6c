#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "supergeo/jet.hpp"

namespace supergeo {

/// Closed expression tree over real variables x1..xm; the smooth coefficient
/// fields of superfunctions. Being a closed tree (not an opaque callable)
/// keeps exact derivatives of every order available.
class Expr {
 public:
  enum class Op { Const, Var, Add, Sub, Mul, Div, Neg, Pow, Exp, Log, Sin, Cos, Sqrt };

  Expr() = default;

  static Expr constant(double v);
  static Expr variable(int index);

  bool empty() const { return node_ == nullptr; }
  bool is_constant() const;
  bool is_constant(double v) const;
  double constant_value() const;

  Op op() const;
  int var_index() const;
  int pow_exponent() const;
  const Expr& child(int i) const;

  double eval(std::span<const double> x) const;
  Jet eval(const std::shared_ptr<const JetSpace>& space, std::span<const double> x) const;

  /// Exact partial derivative, with constant folding.
  Expr diff(int var) const;
  /// Simultaneous substitution x_i := args[i].
  Expr substitute(std::span<const Expr> args) const;

  std::string to_string() const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);
  friend Expr pow(const Expr& a, int e);
  friend Expr exp(const Expr& a);
  friend Expr log(const Expr& a);
  friend Expr sin(const Expr& a);
  friend Expr cos(const Expr& a);
  friend Expr sqrt(const Expr& a);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Expr make(Op op, Expr a, Expr b = Expr(), int index = 0);
  std::shared_ptr<const Node> node_;
};

}  // namespace supergeo
