#include "wittkit/witt.hpp"

#include <algorithm>

#include "wittkit/errors.hpp"
#include "wittkit/matrix.hpp"

namespace wk {

WittElement::WittElement(TruncSeries series) : WittElement(series, series.ring()) {}

WittElement::WittElement(TruncSeries series, Ring ring) : series_(std::move(series)), ring_(ring) {
  if (series_[0] != 1) throw DomainError("Witt element must have constant term 1");
  if (ring_ == Ring::Z && series_.ring() != Ring::Z) throw DomainError("Z-tagged Witt element has non-integer coefficients");
}

WittElement WittElement::one(int order) { return WittElement(TruncSeries::one(order), Ring::Z); }

WittElement WittElement::teichmuller(const Scalar& a, int order) {
  std::vector<Scalar> c(static_cast<std::size_t>(order) + 1);
  Scalar p = 1;
  for (auto& x : c) {
    x = p;
    p *= a;
  }
  return WittElement(TruncSeries(std::move(c), order));
}

WittElement WittElement::from_ratfunc(const RatFunc& rf, int order) { return WittElement(ratfunc_expand(rf, order)); }

GhostVector operator+(const GhostVector& a, const GhostVector& b) {
  const std::size_t n = std::min(a.g_.size(), b.g_.size());
  std::vector<Scalar> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = a.g_[i] + b.g_[i];
  return GhostVector(std::move(r));
}

GhostVector operator*(const GhostVector& a, const GhostVector& b) {
  const std::size_t n = std::min(a.g_.size(), b.g_.size());
  std::vector<Scalar> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = a.g_[i] * b.g_[i];
  return GhostVector(std::move(r));
}

WittElement witt_add(const WittElement& p, const WittElement& q) {
  return WittElement(series_mul(p.series(), q.series()), join(p.ring(), q.ring()));
}

WittElement witt_neg(const WittElement& p) { return WittElement(series_inv(p.series()), p.ring()); }

WittElement witt_sub(const WittElement& p, const WittElement& q) { return witt_add(p, witt_neg(q)); }

GhostVector ghost(const WittElement& p) {
  const int n = p.order();
  std::vector<Scalar> g(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    Scalar acc = p[k] * k;
    for (int m = 1; m < k; ++m) acc -= g[static_cast<std::size_t>(m - 1)] * p[k - m];
    g[static_cast<std::size_t>(k - 1)] = acc;
  }
  return GhostVector(std::move(g));
}

WittElement ghost_inverse(const GhostVector& g) {
  const int n = g.length();
  std::vector<Scalar> c(static_cast<std::size_t>(n) + 1);
  c[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Scalar acc = 0;
    for (int m = 1; m <= k; ++m) acc += g[m] * c[static_cast<std::size_t>(k - m)];
    c[static_cast<std::size_t>(k)] = acc / k;
  }
  return WittElement(TruncSeries(std::move(c), n));
}

WittElement witt_mul(const WittElement& p, const WittElement& q) {
  WittElement r = ghost_inverse(ghost(p) * ghost(q));
  if (p.ring() == Ring::Z && q.ring() == Ring::Z && r.ring() != Ring::Z)
    throw InvariantError("Witt product of integral elements is not integral");
  if (r.ring() == Ring::Z && join(p.ring(), q.ring()) == Ring::Q) return WittElement(r.series(), Ring::Q);
  return r;
}

GhostVector witt_frobenius_ghost(const WittElement& p, int n) {
  if (n < 1) throw DomainError("Frobenius index must be positive");
  return witt_frobenius_ghost(p, n, p.order() / n);
}

GhostVector witt_frobenius_ghost(const WittElement& p, int n, int length) {
  if (n < 1) throw DomainError("Frobenius index must be positive");
  if (length < 0 || p.order() < n * length) throw DomainError("Frobenius ghost: insufficient truncation order");
  const GhostVector g = ghost(p);
  std::vector<Scalar> out;
  for (int k = 1; k <= length; ++k) out.push_back(g[n * k]);
  return GhostVector(std::move(out));
}

namespace {

// Shortest linear recurrence for s over Q; returns the connection polynomial
// C (C(0) = 1) and its length L.
std::pair<Poly, int> berlekamp_massey(const std::vector<Scalar>& s) {
  std::vector<Scalar> c{1}, b{1};
  int len = 0, shift = 1;
  Scalar last = 1;
  for (std::size_t n = 0; n < s.size(); ++n) {
    Scalar d = s[n];
    for (int i = 1; i <= len; ++i) d += c[static_cast<std::size_t>(i)] * s[n - static_cast<std::size_t>(i)];
    if (d == 0) {
      ++shift;
      continue;
    }
    const std::vector<Scalar> prev = c;
    const Scalar coef = d / last;
    if (c.size() < b.size() + static_cast<std::size_t>(shift)) c.resize(b.size() + static_cast<std::size_t>(shift));
    for (std::size_t i = 0; i < b.size(); ++i) c[i + static_cast<std::size_t>(shift)] -= coef * b[i];
    if (2 * len <= static_cast<int>(n)) {
      len = static_cast<int>(n) + 1 - len;
      b = prev;
      last = d;
      shift = 1;
    } else {
      ++shift;
    }
  }
  return {Poly(c), len};
}

}  // namespace

RationalityReport is_rational_up_to(const WittElement& p) {
  const int order = p.order();
  if (order < 8) throw DomainError("rationality check needs order >= 8");
  RationalityReport rep;
  rep.order = order;
  std::vector<Scalar> d(p.series().coeffs().begin() + 1, p.series().coeffs().end());
  const int kmax = order / 2;
  for (int k = 1; k <= kmax; ++k) {
    Matrix h(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) h(i, j) = d[static_cast<std::size_t>(i + j)];
    rep.ranks.push_back(rank_over_fraction_field(h));
  }
  const int r = rep.ranks.back();
  const bool flat = kmax >= 3 && rep.ranks[static_cast<std::size_t>(kmax - 2)] == r &&
                    rep.ranks[static_cast<std::size_t>(kmax - 3)] == r && r < kmax - 2;
  if (!flat) return rep;

  auto [conn, len] = berlekamp_massey(d);
  if (len != r) return rep;
  // d(t) = A(t) / C(t) with deg A < len, so P = 1 + t A / C.
  const Poly dpoly(d);
  std::vector<Scalar> a = (conn * dpoly).coeffs();
  a.resize(static_cast<std::size_t>(len));
  const RatFunc witness(conn + Poly::monomial(1) * Poly(a), conn);
  if (ratfunc_expand(witness, order) != p.series()) return rep;
  rep.stabilized = true;
  rep.stable_rank = r;
  rep.witness = witness;
  return rep;
}

}  // namespace wk
