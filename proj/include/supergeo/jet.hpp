#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

namespace supergeo {

struct EvalDomainError : std::runtime_error {
  explicit EvalDomainError(const std::string& what) : std::runtime_error("domain violation: " + what) {}
};

/// Shared layout for truncated multivariate Taylor expansions in nvars
/// variables up to a total order: the multi-index list, position lookup and
/// the precomputed product pairing. Cached per (nvars, order).
class JetSpace {
 public:
  static std::shared_ptr<const JetSpace> get(int nvars, int order);

  int nvars() const { return nvars_; }
  int order() const { return order_; }
  int size() const { return static_cast<int>(indices_.size()); }
  const std::vector<int>& index(int pos) const { return indices_[static_cast<size_t>(pos)]; }
  int degree(int pos) const { return degrees_[static_cast<size_t>(pos)]; }
  /// Position of a multi-index, or -1 when its degree exceeds the order.
  int position(const std::vector<int>& idx) const;
  /// Position of index(pos) + e_var, or -1 past the truncation order.
  int bump(int pos, int var) const { return bump_[static_cast<size_t>(pos) * nvars_ + var]; }

  struct ProductTerm {
    int left, right, out;
  };
  const std::vector<ProductTerm>& product_terms() const { return prod_; }

  /// r! for the multi-index at pos.
  double factorial(int pos) const { return fact_[static_cast<size_t>(pos)]; }

 private:
  JetSpace(int nvars, int order);
  int nvars_, order_;
  std::vector<std::vector<int>> indices_;
  std::vector<int> degrees_;
  std::vector<int> bump_;
  std::vector<double> fact_;
  std::vector<ProductTerm> prod_;
  std::map<std::vector<int>, int> pos_;
};

/// Truncated Taylor expansion of a smooth function around a point: the
/// coefficient at multi-index r is (d_r f)/r!. Arithmetic and the usual
/// elementary functions propagate expansions exactly up to the truncation
/// order.
class Jet {
 public:
  Jet() = default;
  Jet(std::shared_ptr<const JetSpace> space, double constant);
  static Jet variable(const std::shared_ptr<const JetSpace>& space, int var, double value);

  const std::shared_ptr<const JetSpace>& space() const { return space_; }
  double value() const { return c_[0]; }
  const std::vector<double>& coeffs() const { return c_; }
  double coeff(int pos) const { return c_[static_cast<size_t>(pos)]; }
  /// d_r f, the coefficient times r!.
  double partial(const std::vector<int>& idx) const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(double s);
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator-(Jet a);
  friend Jet operator*(Jet a, double s) { return a *= s; }
  friend Jet operator*(double s, Jet a) { return a *= s; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b);

 private:
  std::shared_ptr<const JetSpace> space_;
  std::vector<double> c_;

  friend Jet compose_series(const Jet& u, const std::vector<double>& series);
};

/// phi(u) for phi given by its Taylor coefficients at u's value.
Jet compose_series(const Jet& u, const std::vector<double>& series);

Jet exp(const Jet& u);
Jet log(const Jet& u);
Jet sin(const Jet& u);
Jet cos(const Jet& u);
Jet sqrt(const Jet& u);
Jet pow(const Jet& u, int e);

}  // namespace supergeo
