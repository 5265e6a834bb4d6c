#include "supergeo/expr.hpp"

#include <cmath>
#include <sstream>

namespace supergeo {

struct Expr::Node {
  Op op;
  double value = 0.0;  // Const
  int index = 0;       // Var, or the exponent for Pow
  Expr a, b;
};

Expr Expr::constant(double v) {
  auto n = std::make_shared<Node>();
  n->op = Op::Const;
  n->value = v;
  return Expr(std::move(n));
}

Expr Expr::variable(int index) {
  auto n = std::make_shared<Node>();
  n->op = Op::Var;
  n->index = index;
  return Expr(std::move(n));
}

bool Expr::is_constant() const { return node_ && node_->op == Op::Const; }
bool Expr::is_constant(double v) const { return is_constant() && node_->value == v; }
double Expr::constant_value() const { return node_->value; }
Expr::Op Expr::op() const { return node_->op; }
int Expr::var_index() const { return node_->index; }
int Expr::pow_exponent() const { return node_->index; }
const Expr& Expr::child(int i) const { return i == 0 ? node_->a : node_->b; }

Expr Expr::make(Op op, Expr a, Expr b, int index) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->a = std::move(a);
  n->b = std::move(b);
  n->index = index;
  return Expr(std::move(n));
}

namespace {
Expr make(Expr::Op op, Expr a, Expr b = Expr(), int index = 0);
}

Expr operator+(const Expr& a, const Expr& b) {
  if (a.is_constant(0.0)) return b;
  if (b.is_constant(0.0)) return a;
  if (a.is_constant() && b.is_constant()) return Expr::constant(a.constant_value() + b.constant_value());
  return make(Expr::Op::Add, a, b);
}

Expr operator-(const Expr& a, const Expr& b) {
  if (b.is_constant(0.0)) return a;
  if (a.is_constant() && b.is_constant()) return Expr::constant(a.constant_value() - b.constant_value());
  if (a.is_constant(0.0)) return -b;
  return make(Expr::Op::Sub, a, b);
}

Expr operator*(const Expr& a, const Expr& b) {
  if (a.is_constant(0.0) || b.is_constant(0.0)) return Expr::constant(0.0);
  if (a.is_constant(1.0)) return b;
  if (b.is_constant(1.0)) return a;
  if (a.is_constant() && b.is_constant()) return Expr::constant(a.constant_value() * b.constant_value());
  return make(Expr::Op::Mul, a, b);
}

Expr operator/(const Expr& a, const Expr& b) {
  if (b.is_constant(1.0)) return a;
  if (a.is_constant(0.0)) return Expr::constant(0.0);
  if (a.is_constant() && b.is_constant() && b.constant_value() != 0.0)
    return Expr::constant(a.constant_value() / b.constant_value());
  return make(Expr::Op::Div, a, b);
}

Expr operator-(const Expr& a) {
  if (a.is_constant()) return Expr::constant(-a.constant_value());
  return make(Expr::Op::Neg, a);
}

Expr pow(const Expr& a, int e) {
  if (e == 0) return Expr::constant(1.0);
  if (e == 1) return a;
  if (a.is_constant()) return Expr::constant(std::pow(a.constant_value(), e));
  return make(Expr::Op::Pow, a, Expr(), e);
}

Expr exp(const Expr& a) {
  if (a.is_constant()) return Expr::constant(std::exp(a.constant_value()));
  return make(Expr::Op::Exp, a);
}
Expr log(const Expr& a) {
  if (a.is_constant() && a.constant_value() > 0.0) return Expr::constant(std::log(a.constant_value()));
  return make(Expr::Op::Log, a);
}
Expr sin(const Expr& a) {
  if (a.is_constant()) return Expr::constant(std::sin(a.constant_value()));
  return make(Expr::Op::Sin, a);
}
Expr cos(const Expr& a) {
  if (a.is_constant()) return Expr::constant(std::cos(a.constant_value()));
  return make(Expr::Op::Cos, a);
}
Expr sqrt(const Expr& a) {
  if (a.is_constant() && a.constant_value() > 0.0) return Expr::constant(std::sqrt(a.constant_value()));
  return make(Expr::Op::Sqrt, a);
}

namespace {
Expr make(Expr::Op op, Expr a, Expr b, int index) {
  struct Access : Expr {
    static Expr build(Op op, Expr a, Expr b, int index) {
      auto n = std::make_shared<Node>();
      n->op = op;
      n->a = std::move(a);
      n->b = std::move(b);
      n->index = index;
      return Expr(std::move(n));
    }
  };
  return Access::build(op, std::move(a), std::move(b), index);
}
}  // namespace

double Expr::eval(std::span<const double> x) const {
  switch (node_->op) {
    case Op::Const: return node_->value;
    case Op::Var: return x[static_cast<size_t>(node_->index)];
    case Op::Add: return node_->a.eval(x) + node_->b.eval(x);
    case Op::Sub: return node_->a.eval(x) - node_->b.eval(x);
    case Op::Mul: return node_->a.eval(x) * node_->b.eval(x);
    case Op::Div: {
      double d = node_->b.eval(x);
      if (d == 0.0) throw EvalDomainError("division by zero");
      return node_->a.eval(x) / d;
    }
    case Op::Neg: return -node_->a.eval(x);
    case Op::Pow: return std::pow(node_->a.eval(x), node_->index);
    case Op::Exp: return std::exp(node_->a.eval(x));
    case Op::Log: {
      double v = node_->a.eval(x);
      if (v <= 0.0) throw EvalDomainError("log of a nonpositive value");
      return std::log(v);
    }
    case Op::Sin: return std::sin(node_->a.eval(x));
    case Op::Cos: return std::cos(node_->a.eval(x));
    case Op::Sqrt: {
      double v = node_->a.eval(x);
      if (v <= 0.0) throw EvalDomainError("sqrt of a nonpositive value");
      return std::sqrt(v);
    }
  }
  throw std::logic_error("unreachable");
}

Jet Expr::eval(const std::shared_ptr<const JetSpace>& space, std::span<const double> x) const {
  switch (node_->op) {
    case Op::Const: return Jet(space, node_->value);
    case Op::Var: return Jet::variable(space, node_->index, x[static_cast<size_t>(node_->index)]);
    case Op::Add: return node_->a.eval(space, x) + node_->b.eval(space, x);
    case Op::Sub: return node_->a.eval(space, x) - node_->b.eval(space, x);
    case Op::Mul: return node_->a.eval(space, x) * node_->b.eval(space, x);
    case Op::Div: return node_->a.eval(space, x) / node_->b.eval(space, x);
    case Op::Neg: return -node_->a.eval(space, x);
    case Op::Pow: return pow(node_->a.eval(space, x), node_->index);
    case Op::Exp: return exp(node_->a.eval(space, x));
    case Op::Log: return log(node_->a.eval(space, x));
    case Op::Sin: return sin(node_->a.eval(space, x));
    case Op::Cos: return cos(node_->a.eval(space, x));
    case Op::Sqrt: return sqrt(node_->a.eval(space, x));
  }
  throw std::logic_error("unreachable");
}

Expr Expr::diff(int var) const {
  switch (node_->op) {
    case Op::Const: return constant(0.0);
    case Op::Var: return constant(node_->index == var ? 1.0 : 0.0);
    case Op::Add: return node_->a.diff(var) + node_->b.diff(var);
    case Op::Sub: return node_->a.diff(var) - node_->b.diff(var);
    case Op::Mul: return node_->a.diff(var) * node_->b + node_->a * node_->b.diff(var);
    case Op::Div:
      return node_->a.diff(var) / node_->b -
             node_->a * node_->b.diff(var) / (node_->b * node_->b);
    case Op::Neg: return -node_->a.diff(var);
    case Op::Pow:
      return constant(node_->index) * pow(node_->a, node_->index - 1) * node_->a.diff(var);
    case Op::Exp: return exp(node_->a) * node_->a.diff(var);
    case Op::Log: return node_->a.diff(var) / node_->a;
    case Op::Sin: return cos(node_->a) * node_->a.diff(var);
    case Op::Cos: return -(sin(node_->a) * node_->a.diff(var));
    case Op::Sqrt: return node_->a.diff(var) / (constant(2.0) * sqrt(node_->a));
  }
  throw std::logic_error("unreachable");
}

Expr Expr::substitute(std::span<const Expr> args) const {
  switch (node_->op) {
    case Op::Const: return *this;
    case Op::Var: return args[static_cast<size_t>(node_->index)];
    case Op::Add: return node_->a.substitute(args) + node_->b.substitute(args);
    case Op::Sub: return node_->a.substitute(args) - node_->b.substitute(args);
    case Op::Mul: return node_->a.substitute(args) * node_->b.substitute(args);
    case Op::Div: return node_->a.substitute(args) / node_->b.substitute(args);
    case Op::Neg: return -node_->a.substitute(args);
    case Op::Pow: return pow(node_->a.substitute(args), node_->index);
    case Op::Exp: return exp(node_->a.substitute(args));
    case Op::Log: return log(node_->a.substitute(args));
    case Op::Sin: return sin(node_->a.substitute(args));
    case Op::Cos: return cos(node_->a.substitute(args));
    case Op::Sqrt: return sqrt(node_->a.substitute(args));
  }
  throw std::logic_error("unreachable");
}

std::string Expr::to_string() const {
  std::ostringstream os;
  switch (node_->op) {
    case Op::Const: os << node_->value; break;
    case Op::Var: os << "x" << (node_->index + 1); break;
    case Op::Add: os << "(" << node_->a.to_string() << " + " << node_->b.to_string() << ")"; break;
    case Op::Sub: os << "(" << node_->a.to_string() << " - " << node_->b.to_string() << ")"; break;
    case Op::Mul: os << "(" << node_->a.to_string() << "*" << node_->b.to_string() << ")"; break;
    case Op::Div: os << "(" << node_->a.to_string() << "/" << node_->b.to_string() << ")"; break;
    case Op::Neg: os << "(-" << node_->a.to_string() << ")"; break;
    case Op::Pow: os << node_->a.to_string() << "^" << node_->index; break;
    case Op::Exp: os << "exp(" << node_->a.to_string() << ")"; break;
    case Op::Log: os << "log(" << node_->a.to_string() << ")"; break;
    case Op::Sin: os << "sin(" << node_->a.to_string() << ")"; break;
    case Op::Cos: os << "cos(" << node_->a.to_string() << ")"; break;
    case Op::Sqrt: os << "sqrt(" << node_->a.to_string() << ")"; break;
  }
  return os.str();
}

}  // namespace supergeo
