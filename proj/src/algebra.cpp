#include "supergeo/algebra.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace supergeo {

namespace {

int koszul_sign(uint32_t a, uint32_t b) {
  // Crossings when merging two ascending generator lists: for every
  // generator j of b, count the generators of a above j.
  int crossings = 0;
  for (uint32_t m = b; m != 0; m &= m - 1) {
    int j = std::countr_zero(m);
    crossings += std::popcount(a >> (j + 1));
  }
  return (crossings & 1) ? -1 : 1;
}

std::string mask_label(uint32_t mask) {
  if (mask == 0) return "1";
  std::string s;
  for (uint32_t m = mask; m != 0; m &= m - 1) {
    s += "th" + std::to_string(std::countr_zero(m) + 1);
  }
  return s;
}

}  // namespace

int GradedAlgebra::default_max_dim() {
  static const int cap = [] {
    if (const char* env = std::getenv("SUPERGEO_MAX_ALG_DIM")) {
      int v = std::atoi(env);
      if (v > 0) return v;
    }
    return 64;
  }();
  return cap;
}

GradedAlgebra::GradedAlgebra(int q) : q_(q), dim_(1 << q) {
  parity_.resize(static_cast<size_t>(dim_));
  filt_.resize(static_cast<size_t>(dim_));
  labels_.resize(static_cast<size_t>(dim_));
  table_.resize(static_cast<size_t>(dim_) * dim_);
  for (int i = 0; i < dim_; ++i) {
    int deg = std::popcount(static_cast<uint32_t>(i));
    parity_[static_cast<size_t>(i)] = static_cast<int8_t>(deg & 1);
    filt_[static_cast<size_t>(i)] = static_cast<int16_t>(deg);
    labels_[static_cast<size_t>(i)] = mask_label(static_cast<uint32_t>(i));
  }
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      MulEntry e{0, 0};
      uint32_t a = static_cast<uint32_t>(i), b = static_cast<uint32_t>(j);
      if ((a & b) == 0) {
        e.sign = static_cast<int8_t>(koszul_sign(a, b));
        e.index = static_cast<uint16_t>(a | b);
      }
      table_[static_cast<size_t>(i) * dim_ + j] = e;
    }
  }
  verify_structure();
}

void GradedAlgebra::verify_structure() const {
  // Exhaustive checks; dim stays small enough that this is instant.
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      MulEntry ij = mul_entry(i, j);
      MulEntry ji = mul_entry(j, i);
      int s = (parity(i) & parity(j)) ? -1 : 1;
      bool ok = (ij.sign == 0 && ji.sign == 0) ||
                (ij.index == ji.index && ij.sign == s * ji.sign);
      if (!ok) throw std::logic_error("graded commutativity violated in multiplication table");
      if (ij.sign != 0 && filt_level(ij.index) < filt_level(i) + filt_level(j))
        throw std::logic_error("filtration level not superadditive");
    }
  }
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      MulEntry ij = mul_entry(i, j);
      for (int k = 0; k < dim_; ++k) {
        MulEntry jk = mul_entry(j, k);
        int ls = 0, li = 0, rs = 0, ri = 0;
        if (ij.sign != 0) {
          MulEntry l = mul_entry(ij.index, k);
          ls = ij.sign * l.sign;
          li = l.index;
        }
        if (jk.sign != 0) {
          MulEntry r = mul_entry(i, jk.index);
          rs = jk.sign * r.sign;
          ri = r.index;
        }
        if (ls != rs || (ls != 0 && li != ri))
          throw std::logic_error("associativity violated in multiplication table");
      }
    }
  }
}

AlgebraPtr GradedAlgebra::grassmann(int q) { return grassmann(q, default_max_dim()); }

AlgebraPtr GradedAlgebra::grassmann(int q, int max_dim) {
  if (q < 0) throw std::invalid_argument("grassmann: q must be nonnegative");
  if (q > 16 || (1 << q) > max_dim)
    throw std::invalid_argument("grassmann: dimension 2^" + std::to_string(q) +
                                " exceeds the cap " + std::to_string(max_dim) +
                                " (set SUPERGEO_MAX_ALG_DIM to raise it)");
  return AlgebraPtr(new GradedAlgebra(q));
}

AlgebraPtr GradedAlgebra::tensor(const AlgebraPtr& a, const AlgebraPtr& b) {
  return grassmann(a->generators() + b->generators(),
                   std::max(default_max_dim(), a->dim() * b->dim()));
}

int GradedAlgebra::index_of_label(const std::string& label) const {
  for (int i = 0; i < dim_; ++i)
    if (labels_[static_cast<size_t>(i)] == label) return i;
  return -1;
}

AlgebraElement::AlgebraElement(AlgebraPtr alg, std::vector<double> coeffs)
    : alg_(std::move(alg)), c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) != alg_->dim())
    throw std::invalid_argument("AlgebraElement: coefficient count does not match algebra dimension");
}

AlgebraElement AlgebraElement::zero(const AlgebraPtr& alg) {
  return AlgebraElement(alg, std::vector<double>(static_cast<size_t>(alg->dim()), 0.0));
}

AlgebraElement AlgebraElement::scalar(const AlgebraPtr& alg, double v) {
  AlgebraElement x = zero(alg);
  x.c_[0] = v;
  return x;
}

AlgebraElement AlgebraElement::basis(const AlgebraPtr& alg, int i, double v) {
  AlgebraElement x = zero(alg);
  x.c_[static_cast<size_t>(i)] = v;
  return x;
}

AlgebraElement AlgebraElement::nilpotent_part() const {
  AlgebraElement x = *this;
  if (!x.c_.empty()) x.c_[0] = 0.0;
  return x;
}

bool AlgebraElement::is_zero(double tol) const {
  for (double v : c_)
    if (std::abs(v) > tol) return false;
  return true;
}

std::optional<int> AlgebraElement::parity(double tol) const {
  bool has_even = false, has_odd = false;
  for (int i = 0; i < alg_->dim(); ++i) {
    if (std::abs(c_[static_cast<size_t>(i)]) > tol) {
      (alg_->parity(i) ? has_odd : has_even) = true;
    }
  }
  if (has_even && has_odd) return std::nullopt;
  if (has_odd) return 1;
  return 0;
}

double AlgebraElement::inf_norm() const {
  double m = 0.0;
  for (double v : c_) m = std::max(m, std::abs(v));
  return m;
}

namespace {
void check_same(const AlgebraElement& a, const AlgebraElement& b) {
  if (!a.algebra() || !b.algebra() || !a.algebra()->same_as(*b.algebra()))
    throw AlgebraMismatchError("binary operation on elements of different algebras");
}
}  // namespace

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  check_same(*this, o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  check_same(*this, o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}

AlgebraElement operator-(AlgebraElement a) {
  for (double& v : a.c_) v = -v;
  return a;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return mul(a, b); }

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) {
  check_same(a, b);
  const auto& alg = *a.algebra();
  AlgebraElement r = AlgebraElement::zero(a.algebra());
  int n = alg.dim();
  for (int i = 0; i < n; ++i) {
    double ai = a.coeff(i);
    if (ai == 0.0) continue;
    for (int j = 0; j < n; ++j) {
      double bj = b.coeff(j);
      if (bj == 0.0) continue;
      GradedAlgebra::MulEntry e = alg.mul_entry(i, j);
      if (e.sign != 0) r.coeff(e.index) += e.sign * ai * bj;
    }
  }
  return r;
}

AlgebraElement invert(const AlgebraElement& x) {
  double beta = x.body();
  if (beta == 0.0) throw ZeroBodyError();
  const AlgebraPtr& alg = x.algebra();
  AlgebraElement n = x.nilpotent_part() * (1.0 / beta);
  // 1/x = (1/beta) * sum_k (-n)^k, terminating at the nilpotency index.
  AlgebraElement acc = AlgebraElement::scalar(alg, 1.0);
  AlgebraElement term = AlgebraElement::scalar(alg, 1.0);
  int d = alg->nilpotency_index();
  for (int k = 1; k < d; ++k) {
    term = mul(term, n) * -1.0;
    if (term.is_zero()) break;
    acc += term;
  }
  return acc * (1.0 / beta);
}

AlgebraElement pow(const AlgebraElement& x, int e) {
  if (e < 0) return pow(invert(x), -e);
  AlgebraElement r = AlgebraElement::scalar(x.algebra(), 1.0);
  for (int k = 0; k < e; ++k) r = mul(r, x);
  return r;
}

AlgebraHom::AlgebraHom(AlgebraPtr source, AlgebraPtr target, std::vector<AlgebraElement> images)
    : src_(std::move(source)), dst_(std::move(target)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != src_->dim())
    throw std::invalid_argument("AlgebraHom: need one image per source basis element");
  for (const auto& im : images_)
    if (!im.algebra()->same_as(*dst_)) throw AlgebraMismatchError("AlgebraHom image in wrong algebra");
  const double tol = 1e-12;
  if ((images_[0] - AlgebraElement::scalar(dst_, 1.0)).inf_norm() > tol)
    throw std::invalid_argument("AlgebraHom: not unital");
  for (int i = 0; i < src_->dim(); ++i) {
    auto p = images_[static_cast<size_t>(i)].parity(tol);
    if (!p || (*p != src_->parity(i) && !images_[static_cast<size_t>(i)].is_zero(tol)))
      throw std::invalid_argument("AlgebraHom: not parity preserving on basis element " +
                                  src_->basis_label(i));
  }
  for (int i = 0; i < src_->dim(); ++i) {
    for (int j = 0; j < src_->dim(); ++j) {
      GradedAlgebra::MulEntry e = src_->mul_entry(i, j);
      AlgebraElement lhs = e.sign == 0 ? AlgebraElement::zero(dst_)
                                       : images_[e.index] * static_cast<double>(e.sign);
      AlgebraElement rhs = mul(images_[static_cast<size_t>(i)], images_[static_cast<size_t>(j)]);
      if ((lhs - rhs).inf_norm() > tol)
        throw std::invalid_argument("AlgebraHom: not multiplicative on pair (" +
                                    src_->basis_label(i) + ", " + src_->basis_label(j) + ")");
    }
  }
}

AlgebraHom AlgebraHom::identity(const AlgebraPtr& alg) {
  std::vector<AlgebraElement> im;
  im.reserve(static_cast<size_t>(alg->dim()));
  for (int i = 0; i < alg->dim(); ++i) im.push_back(AlgebraElement::basis(alg, i));
  return AlgebraHom(alg, alg, std::move(im));
}

AlgebraHom AlgebraHom::body_projection(const AlgebraPtr& alg) {
  AlgebraPtr reals = GradedAlgebra::grassmann(0);
  std::vector<AlgebraElement> im;
  im.reserve(static_cast<size_t>(alg->dim()));
  for (int i = 0; i < alg->dim(); ++i)
    im.push_back(AlgebraElement::scalar(reals, i == 0 ? 1.0 : 0.0));
  return AlgebraHom(alg, reals, std::move(im));
}

AlgebraHom AlgebraHom::rescale(const AlgebraPtr& alg, double c) {
  std::vector<AlgebraElement> im;
  im.reserve(static_cast<size_t>(alg->dim()));
  for (int i = 0; i < alg->dim(); ++i)
    im.push_back(AlgebraElement::basis(alg, i, std::pow(c, alg->filt_level(i))));
  return AlgebraHom(alg, alg, std::move(im));
}

AlgebraHom AlgebraHom::embed_factor(const AlgebraPtr& factor, const AlgebraPtr& whole, int gen_offset) {
  if (gen_offset + factor->generators() > whole->generators())
    throw std::invalid_argument("embed_factor: factor does not fit at the given offset");
  std::vector<AlgebraElement> im;
  im.reserve(static_cast<size_t>(factor->dim()));
  for (int i = 0; i < factor->dim(); ++i) {
    uint32_t mask = factor->basis_mask(i) << gen_offset;
    im.push_back(AlgebraElement::basis(whole, whole->basis_index(mask)));
  }
  return AlgebraHom(factor, whole, std::move(im));
}

AlgebraElement AlgebraHom::apply(const AlgebraElement& x) const {
  if (!x.algebra()->same_as(*src_)) throw AlgebraMismatchError("hom applied to element of wrong algebra");
  AlgebraElement r = AlgebraElement::zero(dst_);
  for (int i = 0; i < src_->dim(); ++i) {
    double xi = x.coeff(i);
    if (xi != 0.0) r += images_[static_cast<size_t>(i)] * xi;
  }
  return r;
}

AlgebraHom AlgebraHom::compose(const AlgebraHom& inner) const {
  if (!inner.dst_->same_as(*src_)) throw AlgebraMismatchError("hom composition chart mismatch");
  std::vector<AlgebraElement> im;
  im.reserve(static_cast<size_t>(inner.src_->dim()));
  for (int i = 0; i < inner.src_->dim(); ++i) im.push_back(apply(inner.images_[static_cast<size_t>(i)]));
  return AlgebraHom(inner.src_, dst_, std::move(im));
}

AlgebraPtr parse_algebra_spec(const std::string& text) {
  // Accepts "Grassmann(q)" optionally followed by "x Grassmann(r)" factors.
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  int total = 0;
  size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    if (!first) {
      if (s[pos] != 'x' && s[pos] != 'X')
        throw std::invalid_argument("algebra spec: expected 'x' between factors in '" + text + "'");
      ++pos;
    }
    const std::string kw = "Grassmann(";
    if (s.compare(pos, kw.size(), kw) != 0)
      throw std::invalid_argument("algebra spec: expected 'Grassmann(q)' in '" + text + "'");
    pos += kw.size();
    size_t close = s.find(')', pos);
    if (close == std::string::npos) throw std::invalid_argument("algebra spec: missing ')'");
    int q = std::stoi(s.substr(pos, close - pos));
    total += q;
    pos = close + 1;
    first = false;
  }
  if (first) throw std::invalid_argument("algebra spec: empty");
  return GradedAlgebra::grassmann(total);
}

}  // namespace supergeo
