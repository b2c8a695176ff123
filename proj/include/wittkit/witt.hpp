#pragma once

#include <optional>
#include <vector>

#include "wittkit/series.hpp"

namespace wk {

inline constexpr int kDefaultOrder = 32;

/// Element of the big Witt ring W(R) = 1 + tR[[t]], truncated.
/// Addition is series multiplication; multiplication is the Witt product,
/// fixed by (1 - at)^-1 * (1 - bt)^-1 = (1 - abt)^-1.
class WittElement {
 public:
  /// Throws DomainError unless the constant term is exactly 1.
  explicit WittElement(TruncSeries series);
  WittElement(TruncSeries series, Ring ring);
  static WittElement one(int order = kDefaultOrder);
  /// (1 - a t)^-1, the Teichmueller representative of a.
  static WittElement teichmuller(const Scalar& a, int order = kDefaultOrder);
  /// Rational function with den(0) = num(0) = 1.
  static WittElement from_ratfunc(const RatFunc& rf, int order = kDefaultOrder);

  const TruncSeries& series() const { return series_; }
  int order() const { return series_.order(); }
  Ring ring() const { return ring_; }
  const Scalar& operator[](int i) const { return series_[i]; }

  friend bool operator==(const WittElement& a, const WittElement& b) { return a.series_ == b.series_; }

 private:
  TruncSeries series_;
  Ring ring_ = Ring::Z;
};

/// Ghost components g_1..g_N; index 1 is stored first.
class GhostVector {
 public:
  GhostVector() = default;
  explicit GhostVector(std::vector<Scalar> components) : g_(std::move(components)) {}
  int length() const { return static_cast<int>(g_.size()); }
  /// 1-based.
  const Scalar& operator[](int k) const { return g_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<Scalar>& components() const { return g_; }

  friend GhostVector operator+(const GhostVector& a, const GhostVector& b);
  friend GhostVector operator*(const GhostVector& a, const GhostVector& b);
  friend bool operator==(const GhostVector& a, const GhostVector& b) = default;

 private:
  std::vector<Scalar> g_;
};

WittElement witt_add(const WittElement& p, const WittElement& q);
WittElement witt_neg(const WittElement& p);
WittElement witt_sub(const WittElement& p, const WittElement& q);

/// Ghost-coordinate product. For two Z-tagged inputs the result is checked
/// to be integral (InvariantError otherwise) and tagged Z.
WittElement witt_mul(const WittElement& p, const WittElement& q);

/// Coefficients of t P'/P: n c_n = sum_{m=1..n} g_m c_{n-m}.
GhostVector ghost(const WittElement& p);

/// exp(sum g_m t^m / m), tagged by the integrality of the result.
WittElement ghost_inverse(const GhostVector& g);

/// (g_n, g_2n, ..., g_{Ln}) with L = floor(order / n).
GhostVector witt_frobenius_ghost(const WittElement& p, int n);
/// Same with an explicit length; throws DomainError if order < n * length.
GhostVector witt_frobenius_ghost(const WittElement& p, int n, int length);

/// Evidence for or against membership of P in the image of the Almkvist ring,
/// i.e. rationality of P. Hankel ranks are taken over the coefficient sequence
/// c_1, c_2, ... (the constant 1 carries no information).
struct RationalityReport {
  int order = 0;
  /// ranks[k-1] = rank of the k x k Hankel matrix, k = 1..floor(order/2).
  std::vector<int> ranks;
  bool stabilized = false;
  int stable_rank = -1;
  std::optional<RatFunc> witness;
};

/// Requires order >= 8. Declares stabilization when the last three ranks agree
/// (and are below their sizes) and the reconstructed rational function
/// re-expands to P through the full order.
RationalityReport is_rational_up_to(const WittElement& p);

}  // namespace wk
