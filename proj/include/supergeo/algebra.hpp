#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace supergeo {

struct ZeroBodyError : std::runtime_error {
  ZeroBodyError() : std::runtime_error("ZeroBody: element has vanishing body and is not invertible") {}
};
struct SingularBodyError : std::runtime_error {
  explicit SingularBodyError(const std::string& what) : std::runtime_error("SingularBody: " + what) {}
};
struct AlgebraMismatchError : std::runtime_error {
  explicit AlgebraMismatchError(const std::string& what) : std::runtime_error("algebra mismatch: " + what) {}
};

class GradedAlgebra;
using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

/// Finite-dimensional graded-commutative unital algebra with nilpotent
/// maximal ideal, realized on the Grassmann-monomial basis of a set of odd
/// generators. Basis element i is the monomial whose generator set is the
/// bit pattern of i, so index 0 is the unit and products are mask unions
/// with a Koszul sign. Immutable after construction and safe to share
/// across threads.
class GradedAlgebra {
 public:
  struct MulEntry {
    int8_t sign;    // -1, 0, +1; 0 means the product vanishes
    uint16_t index; // basis index of the product when sign != 0
  };

  /// Grassmann algebra on q odd generators (dim 2^q). q = 0 gives the reals.
  static AlgebraPtr grassmann(int q);

  /// Graded tensor product. Flattens to one generator list (left factor's
  /// generators first); the Koszul signs are those of the merged monomial
  /// basis.
  static AlgebraPtr tensor(const AlgebraPtr& a, const AlgebraPtr& b);

  int dim() const { return dim_; }
  int generators() const { return q_; }
  int parity(int i) const { return parity_[static_cast<size_t>(i)]; }
  int filt_level(int i) const { return filt_[static_cast<size_t>(i)]; }
  /// Smallest r with m^r = 0, m the ideal of nilpotents.
  int nilpotency_index() const { return q_ + 1; }
  uint32_t basis_mask(int i) const { return static_cast<uint32_t>(i); }
  const std::string& basis_label(int i) const { return labels_[static_cast<size_t>(i)]; }
  /// Index of the basis monomial with the given generator set.
  int basis_index(uint32_t mask) const { return static_cast<int>(mask); }
  /// Looks up a label of the form "1" or "th3th5"; returns -1 if unknown.
  int index_of_label(const std::string& label) const;

  MulEntry mul_entry(int i, int j) const { return table_[static_cast<size_t>(i) * dim_ + j]; }

  bool same_as(const GradedAlgebra& other) const { return this == &other; }

  /// Dimension cap for algebra construction; reads SUPERGEO_MAX_ALG_DIM once
  /// (default 64). Constructions may pass an explicit override.
  static int default_max_dim();

  static AlgebraPtr grassmann(int q, int max_dim);

 private:
  explicit GradedAlgebra(int q);
  void verify_structure() const;

  int q_ = 0;
  int dim_ = 1;
  std::vector<int8_t> parity_;
  std::vector<int16_t> filt_;
  std::vector<std::string> labels_;
  std::vector<MulEntry> table_;
};

/// Element of a GradedAlgebra: a real coefficient per basis monomial.
/// A value type; all operations are pure.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(AlgebraPtr alg, std::vector<double> coeffs);

  static AlgebraElement zero(const AlgebraPtr& alg);
  static AlgebraElement scalar(const AlgebraPtr& alg, double v);
  static AlgebraElement basis(const AlgebraPtr& alg, int i, double v = 1.0);

  const AlgebraPtr& algebra() const { return alg_; }
  const std::vector<double>& coeffs() const { return c_; }
  double coeff(int i) const { return c_[static_cast<size_t>(i)]; }
  double& coeff(int i) { return c_[static_cast<size_t>(i)]; }

  double body() const { return c_.empty() ? 0.0 : c_[0]; }
  AlgebraElement nilpotent_part() const;

  bool is_zero(double tol = 0.0) const;
  /// Parity when coefficients vanish on all slots of one parity (tolerance
  /// tol); nullopt for genuinely mixed elements. The zero element reports
  /// parity 0.
  std::optional<int> parity(double tol = 0.0) const;
  bool is_even(double tol = 0.0) const { auto p = parity(tol); return p && *p == 0; }
  bool is_odd(double tol = 0.0) const { auto p = parity(tol); return p && *p == 1; }

  double inf_norm() const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(double s);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator-(AlgebraElement a);
  friend AlgebraElement operator*(AlgebraElement a, double s) { return a *= s; }
  friend AlgebraElement operator*(double s, AlgebraElement a) { return a *= s; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

 private:
  AlgebraPtr alg_;
  std::vector<double> c_;
};

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b);
/// Exact inverse via the terminating geometric series on the nilpotent part.
/// Throws ZeroBodyError when body(x) = 0.
AlgebraElement invert(const AlgebraElement& x);
AlgebraElement pow(const AlgebraElement& x, int e);

/// Even unital algebra homomorphism, stored as the image of every basis
/// element. Unitality, parity preservation and multiplicativity are checked
/// at construction.
class AlgebraHom {
 public:
  AlgebraHom(AlgebraPtr source, AlgebraPtr target, std::vector<AlgebraElement> images);

  static AlgebraHom identity(const AlgebraPtr& alg);
  /// Projection onto the reals (target = grassmann(0)).
  static AlgebraHom body_projection(const AlgebraPtr& alg);
  /// The filtration rescaling a_r -> c^r a_r; c = 1 is the identity and
  /// c = 0 the body projection composed with the unit embedding.
  static AlgebraHom rescale(const AlgebraPtr& alg, double c);
  /// Embedding of a tensor factor whose generators start at gen_offset in
  /// the flattened algebra.
  static AlgebraHom embed_factor(const AlgebraPtr& factor, const AlgebraPtr& whole, int gen_offset);

  const AlgebraPtr& source() const { return src_; }
  const AlgebraPtr& target() const { return dst_; }
  const AlgebraElement& image(int i) const { return images_[static_cast<size_t>(i)]; }

  AlgebraElement apply(const AlgebraElement& x) const;
  /// this o inner
  AlgebraHom compose(const AlgebraHom& inner) const;

 private:
  AlgebraPtr src_, dst_;
  std::vector<AlgebraElement> images_;
};

/// Parses the small text form "Grassmann(q)" or "Grassmann(q) x Grassmann(r)".
AlgebraPtr parse_algebra_spec(const std::string& text);

}  // namespace supergeo
