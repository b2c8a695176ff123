#pragma once

#include <vector>

#include "wittkit/poly.hpp"
#include "wittkit/scalar.hpp"

namespace wk {

/// Power series c_0 + c_1 t + ... + c_N t^N known only up to t^N.
/// Binary operations truncate to the smaller order.
class TruncSeries {
 public:
  TruncSeries() = default;
  /// coeffs are padded with zeros (or truncated) to order + 1 entries.
  TruncSeries(std::vector<Scalar> coeffs, int order);
  static TruncSeries one(int order);
  static TruncSeries from_poly(const Poly& p, int order);

  int order() const { return order_; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  const Scalar& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  Ring ring() const { return ring_of(coeffs_); }
  TruncSeries truncate(int order) const;

  /// Formal derivative; the result has order N - 1.
  TruncSeries derivative() const;

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const Scalar& c, const TruncSeries& a);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) = default;

 private:
  std::vector<Scalar> coeffs_{Scalar(0)};
  int order_ = 0;
};

/// Cauchy product truncated at min order.
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);

/// Multiplicative inverse. a_0 must be nonzero; when a is integral the
/// result is integral only if a_0 = +-1, which callers check via ring().
TruncSeries series_inv(const TruncSeries& a);

/// exp(f) for f with f_0 = 0, by n e_n = sum_{j=1..n} j f_j e_{n-j}.
TruncSeries series_exp(const TruncSeries& f);

/// log(a) for a_0 = 1.
TruncSeries series_log(const TruncSeries& a);

/// Reduced rational function num/den. If den(0) != 0 the pair is scaled so
/// that den(0) = 1, otherwise den is made monic.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Poly::constant(1)) {}
  RatFunc(Poly num, Poly den);
  static RatFunc from_poly(Poly p) { return RatFunc(std::move(p), Poly::constant(1)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

  std::string to_string(char var = 't') const;

 private:
  Poly num_;
  Poly den_;
};

/// Power-series expansion of num/den up to t^order. Requires den(0) != 0.
TruncSeries ratfunc_expand(const RatFunc& rf, int order);

}  // namespace wk
