#include "supergeo/jet.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace supergeo {

namespace {

void enumerate(std::vector<std::vector<int>>& out, std::vector<int>& cur, int var, int budget) {
  if (var == static_cast<int>(cur.size())) {
    out.push_back(cur);
    return;
  }
  for (int d = 0; d <= budget; ++d) {
    cur[static_cast<size_t>(var)] = d;
    enumerate(out, cur, var + 1, budget - d);
  }
  cur[static_cast<size_t>(var)] = 0;
}

}  // namespace

JetSpace::JetSpace(int nvars, int order) : nvars_(nvars), order_(order) {
  std::vector<int> cur(static_cast<size_t>(nvars), 0);
  if (nvars == 0) {
    indices_.push_back({});
  } else {
    enumerate(indices_, cur, 0, order);
  }
  // Sort by total degree so position 0 is the constant term and products can
  // stop early.
  std::stable_sort(indices_.begin(), indices_.end(), [](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (int v : a) da += v;
    for (int v : b) db += v;
    return da < db;
  });
  degrees_.reserve(indices_.size());
  fact_.reserve(indices_.size());
  for (size_t p = 0; p < indices_.size(); ++p) {
    const auto& idx = indices_[p];
    int d = 0;
    double f = 1.0;
    for (int v : idx) {
      d += v;
      for (int k = 2; k <= v; ++k) f *= k;
    }
    degrees_.push_back(d);
    fact_.push_back(f);
    pos_[idx] = static_cast<int>(p);
  }
  bump_.assign(indices_.size() * static_cast<size_t>(std::max(nvars, 1)), -1);
  for (size_t p = 0; p < indices_.size(); ++p) {
    for (int v = 0; v < nvars; ++v) {
      std::vector<int> idx = indices_[p];
      idx[static_cast<size_t>(v)] += 1;
      bump_[p * nvars_ + v] = position(idx);
    }
  }
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) {
      if (degrees_[static_cast<size_t>(i)] + degrees_[static_cast<size_t>(j)] > order) continue;
      std::vector<int> sum = indices_[static_cast<size_t>(i)];
      for (int v = 0; v < nvars; ++v) sum[static_cast<size_t>(v)] += indices_[static_cast<size_t>(j)][static_cast<size_t>(v)];
      int out = position(sum);
      if (out >= 0) prod_.push_back({i, j, out});
    }
  }
}

int JetSpace::position(const std::vector<int>& idx) const {
  auto it = pos_.find(idx);
  return it == pos_.end() ? -1 : it->second;
}

std::shared_ptr<const JetSpace> JetSpace::get(int nvars, int order) {
  static std::mutex mtx;
  static std::map<std::pair<int, int>, std::shared_ptr<const JetSpace>> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_pair(nvars, order);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto sp = std::shared_ptr<const JetSpace>(new JetSpace(nvars, order));
  cache[key] = sp;
  return sp;
}

Jet::Jet(std::shared_ptr<const JetSpace> space, double constant)
    : space_(std::move(space)), c_(static_cast<size_t>(space_->size()), 0.0) {
  c_[0] = constant;
}

Jet Jet::variable(const std::shared_ptr<const JetSpace>& space, int var, double value) {
  Jet j(space, value);
  if (space->order() >= 1) {
    std::vector<int> idx(static_cast<size_t>(space->nvars()), 0);
    idx[static_cast<size_t>(var)] = 1;
    j.c_[static_cast<size_t>(space->position(idx))] = 1.0;
  }
  return j;
}

double Jet::partial(const std::vector<int>& idx) const {
  int pos = space_->position(idx);
  if (pos < 0) throw std::out_of_range("Jet::partial: order exceeds truncation");
  return c_[static_cast<size_t>(pos)] * space_->factorial(pos);
}

Jet& Jet::operator+=(const Jet& o) {
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}
Jet& Jet::operator-=(const Jet& o) {
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}
Jet& Jet::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}
Jet operator-(Jet a) {
  for (double& v : a.c_) v = -v;
  return a;
}

Jet operator*(const Jet& a, const Jet& b) {
  Jet r(a.space_, 0.0);
  for (const auto& t : a.space_->product_terms()) {
    double av = a.c_[static_cast<size_t>(t.left)];
    if (av == 0.0) continue;
    r.c_[static_cast<size_t>(t.out)] += av * b.c_[static_cast<size_t>(t.right)];
  }
  return r;
}

Jet compose_series(const Jet& u, const std::vector<double>& series) {
  // phi(u) = sum_k series[k] * (u - u0)^k; the deviation is nilpotent in the
  // truncated ring, so the sum stops at the order.
  Jet dev = u;
  dev.c_[0] = 0.0;
  Jet acc(u.space_, series[0]);
  Jet p(u.space_, 1.0);
  int kmax = std::min<int>(u.space_->order(), static_cast<int>(series.size()) - 1);
  for (int k = 1; k <= kmax; ++k) {
    p = p * dev;
    acc += p * series[static_cast<size_t>(k)];
  }
  return acc;
}

Jet operator/(const Jet& a, const Jet& b) {
  double v = b.value();
  if (v == 0.0) throw EvalDomainError("division by zero");
  int K = b.space()->order();
  std::vector<double> series(static_cast<size_t>(K) + 1);
  double p = 1.0 / v;
  for (int k = 0; k <= K; ++k) {
    series[static_cast<size_t>(k)] = p;
    p *= -1.0 / v;
  }
  return a * compose_series(b, series);
}

Jet exp(const Jet& u) {
  int K = u.space()->order();
  std::vector<double> series(static_cast<size_t>(K) + 1);
  double e = std::exp(u.value());
  double f = 1.0;
  for (int k = 0; k <= K; ++k) {
    series[static_cast<size_t>(k)] = e / f;
    f *= (k + 1);
  }
  return compose_series(u, series);
}

Jet log(const Jet& u) {
  double v = u.value();
  if (v <= 0.0) throw EvalDomainError("log of a nonpositive value");
  int K = u.space()->order();
  std::vector<double> series(static_cast<size_t>(K) + 1);
  series[0] = std::log(v);
  double p = 1.0 / v;
  for (int k = 1; k <= K; ++k) {
    series[static_cast<size_t>(k)] = (k % 2 ? p : -p) / k;
    p /= v;
  }
  return compose_series(u, series);
}

Jet sin(const Jet& u) {
  int K = u.space()->order();
  std::vector<double> series(static_cast<size_t>(K) + 1);
  double s = std::sin(u.value()), c = std::cos(u.value());
  double f = 1.0;
  static const double cycle_s[4] = {1.0, 0.0, -1.0, 0.0};
  static const double cycle_c[4] = {0.0, 1.0, 0.0, -1.0};
  for (int k = 0; k <= K; ++k) {
    series[static_cast<size_t>(k)] = (s * cycle_s[k % 4] + c * cycle_c[k % 4]) / f;
    f *= (k + 1);
  }
  return compose_series(u, series);
}

Jet cos(const Jet& u) {
  int K = u.space()->order();
  std::vector<double> series(static_cast<size_t>(K) + 1);
  double s = std::sin(u.value()), c = std::cos(u.value());
  double f = 1.0;
  static const double cycle_s[4] = {0.0, -1.0, 0.0, 1.0};
  static const double cycle_c[4] = {1.0, 0.0, -1.0, 0.0};
  for (int k = 0; k <= K; ++k) {
    series[static_cast<size_t>(k)] = (s * cycle_s[k % 4] + c * cycle_c[k % 4]) / f;
    f *= (k + 1);
  }
  return compose_series(u, series);
}

Jet sqrt(const Jet& u) {
  double v = u.value();
  if (v <= 0.0) throw EvalDomainError("sqrt of a nonpositive value");
  int K = u.space()->order();
  std::vector<double> series(static_cast<size_t>(K) + 1);
  // Binomial series: sqrt(v) * binom(1/2, k) / v^k.
  double coef = std::sqrt(v);
  for (int k = 0; k <= K; ++k) {
    series[static_cast<size_t>(k)] = coef;
    coef *= (0.5 - k) / ((k + 1) * v);
  }
  return compose_series(u, series);
}

Jet pow(const Jet& u, int e) {
  if (e < 0) return Jet(u.space(), 1.0) / pow(u, -e);
  Jet r(u.space(), 1.0);
  for (int k = 0; k < e; ++k) r = r * u;
  return r;
}

}  // namespace supergeo
