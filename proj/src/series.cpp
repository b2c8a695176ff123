#include "wittkit/series.hpp"

#include <algorithm>

#include "wittkit/errors.hpp"

namespace wk {

TruncSeries::TruncSeries(std::vector<Scalar> coeffs, int order) : coeffs_(std::move(coeffs)), order_(order) {
  if (order < 0) throw DomainError("series order must be nonnegative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncSeries TruncSeries::one(int order) { return TruncSeries({Scalar(1)}, order); }

TruncSeries TruncSeries::from_poly(const Poly& p, int order) { return TruncSeries(p.coeffs(), order); }

TruncSeries TruncSeries::truncate(int order) const {
  if (order > order_) throw DomainError("cannot extend a truncated series beyond its order");
  return TruncSeries(coeffs_, order);
}

TruncSeries TruncSeries::derivative() const {
  if (order_ == 0) throw DomainError("derivative of an order-0 series is unknown");
  std::vector<Scalar> d(static_cast<std::size_t>(order_));
  for (int i = 1; i <= order_; ++i) d[static_cast<std::size_t>(i - 1)] = (*this)[i] * i;
  return TruncSeries(std::move(d), order_ - 1);
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  const int n = std::min(a.order_, b.order_);
  std::vector<Scalar> v(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) v[static_cast<std::size_t>(i)] = a[i] + b[i];
  return TruncSeries(std::move(v), n);
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + Scalar(-1) * b; }

TruncSeries operator*(const Scalar& c, const TruncSeries& a) {
  std::vector<Scalar> v = a.coeffs_;
  for (auto& x : v) x *= c;
  return TruncSeries(std::move(v), a.order_);
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Scalar> v(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) v[static_cast<std::size_t>(i + j)] += a[i] * b[j];
  }
  return TruncSeries(std::move(v), n);
}

TruncSeries series_inv(const TruncSeries& a) {
  if (a[0] == 0) throw DomainError("series_inv: constant term is not invertible");
  const int n = a.order();
  const Scalar inv0 = 1 / a[0];
  std::vector<Scalar> b(static_cast<std::size_t>(n) + 1);
  b[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    Scalar acc = 0;
    for (int i = 1; i <= k; ++i) acc += a[i] * b[static_cast<std::size_t>(k - i)];
    b[static_cast<std::size_t>(k)] = -acc * inv0;
  }
  return TruncSeries(std::move(b), n);
}

TruncSeries series_exp(const TruncSeries& f) {
  if (f[0] != 0) throw DomainError("series_exp: constant term must be zero");
  const int n = f.order();
  std::vector<Scalar> e(static_cast<std::size_t>(n) + 1);
  e[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Scalar acc = 0;
    for (int j = 1; j <= k; ++j) acc += f[j] * j * e[static_cast<std::size_t>(k - j)];
    e[static_cast<std::size_t>(k)] = acc / k;
  }
  return TruncSeries(std::move(e), n);
}

TruncSeries series_log(const TruncSeries& a) {
  if (a[0] != 1) throw DomainError("series_log: constant term must be 1");
  const int n = a.order();
  // (log a)' = a'/a, integrated termwise.
  std::vector<Scalar> l(static_cast<std::size_t>(n) + 1);
  if (n == 0) return TruncSeries(std::move(l), 0);
  const TruncSeries q = series_mul(a.derivative(), series_inv(a.truncate(n - 1)));
  for (int k = 1; k <= n; ++k) l[static_cast<std::size_t>(k)] = q[k - 1] / k;
  return TruncSeries(std::move(l), n);
}

RatFunc::RatFunc(Poly num, Poly den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  const Poly g = gcd(num, den);
  if (g.degree() > 0) {
    num = exact_div(num, g);
    den = exact_div(den, g);
  }
  const Scalar scale = den[0] != 0 ? den[0] : den.leading();
  num_ = (1 / scale) * num;
  den_ = (1 / scale) * den;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.num_.is_zero()) throw DomainError("rational function division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFunc::to_string(char var) const {
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

TruncSeries ratfunc_expand(const RatFunc& rf, int order) {
  if (rf.den()[0] == 0) throw DomainError("ratfunc_expand: denominator vanishes at 0");
  return series_mul(TruncSeries::from_poly(rf.num(), order), series_inv(TruncSeries::from_poly(rf.den(), order)));
}

}  // namespace wk
