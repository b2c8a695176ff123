#include "wittkit/torified.hpp"

#include <algorithm>

#include "wittkit/errors.hpp"

namespace wk {

namespace {

std::vector<Integer> trimmed(std::vector<Integer> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

Poly to_poly(const std::vector<Integer>& v) {
  std::vector<Scalar> c(v.begin(), v.end());
  return Poly(std::move(c));
}

std::vector<Integer> from_poly(const Poly& p) {
  std::vector<Integer> out;
  for (const auto& c : p.coeffs()) {
    if (!is_integer(c)) throw InvariantError("change of basis produced a non-integer coefficient");
    out.push_back(c.get_num());
  }
  return out;
}

}  // namespace

GrothClass::GrothClass(std::vector<Integer> t_coeffs) : t_(trimmed(std::move(t_coeffs))) {}

GrothClass GrothClass::from_L_basis(const std::vector<Integer>& l_coeffs) {
  // L = T + 1
  return GrothClass(from_poly(to_poly(l_coeffs).compose(Poly({Scalar(1), Scalar(1)}))));
}

std::vector<Integer> GrothClass::l_coeffs() const {
  // T = L - 1
  return from_poly(to_poly(t_).compose(Poly({Scalar(-1), Scalar(1)})));
}

bool GrothClass::effective() const {
  return std::all_of(t_.begin(), t_.end(), [](const Integer& a) { return a >= 0; });
}

GrothClass operator+(const GrothClass& a, const GrothClass& b) { return GrothClass(from_poly(to_poly(a.t_) + to_poly(b.t_))); }
GrothClass operator-(const GrothClass& a, const GrothClass& b) { return GrothClass(from_poly(to_poly(a.t_) - to_poly(b.t_))); }
GrothClass operator*(const GrothClass& a, const GrothClass& b) { return GrothClass(from_poly(to_poly(a.t_) * to_poly(b.t_))); }

Integer count_points(const GrothClass& x, const Integer& m) {
  Integer acc = 0;
  const auto& a = x.t_coeffs();
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * m + *it;
  return acc;
}

GrothClass adams(const GrothClass& x, int k) {
  if (k < 1) throw DomainError("Adams operation index must be >= 1");
  const auto b = x.l_coeffs();
  std::vector<Integer> out(b.empty() ? 0 : (b.size() - 1) * static_cast<std::size_t>(k) + 1);
  for (std::size_t i = 0; i < b.size(); ++i) out[i * static_cast<std::size_t>(k)] = b[i];
  return GrothClass::from_L_basis(out);
}

namespace {

// (1 - q t)^{-e} for any integer e: coefficient n is binom(e + n - 1, n) q^n.
TruncSeries teichmuller_power(const Integer& q, const Integer& e, int order) {
  std::vector<Scalar> c(static_cast<std::size_t>(order) + 1);
  Scalar binom = 1;
  Scalar qn = 1;
  for (int n = 0; n <= order; ++n) {
    c[static_cast<std::size_t>(n)] = binom * qn;
    binom = binom * (Scalar(e) + n) / (n + 1);
    qn *= Scalar(q);
  }
  return TruncSeries(std::move(c), order);
}

}  // namespace

WittElement sigma_eval(const GrothClass& x, const Integer& m, int order) {
  const auto b = x.l_coeffs();
  TruncSeries acc = TruncSeries::one(order);
  Integer q = 1;
  for (std::size_t i = 0; i < b.size(); ++i, q *= (m + 1))
    if (b[i] != 0) acc = series_mul(acc, teichmuller_power(q, b[i], order));
  return WittElement(std::move(acc), Ring::Z);
}

WittElement zeta_mu(const GrothClass& x, const Measure& mu, int order) { return sigma_eval(x, mu.m, order); }

VirtualEndo r_mu(const GrothClass& x, const Measure& mu) {
  const auto b = x.l_coeffs();
  Vector plus, minus;
  Integer q = 1;
  for (std::size_t i = 0; i < b.size(); ++i, q *= (mu.m + 1)) {
    Vector& target = b[i] > 0 ? plus : minus;
    for (Integer e = abs(b[i]); e > 0; --e) target.emplace_back(q);
  }
  return VirtualEndo(EndoClass(Matrix::diagonal(plus)), EndoClass(Matrix::diagonal(minus)));
}

RecSeq biring_measure(const GrothClass& x, const Measure& mu) {
  const RecSeq torus = RecSeq::polynomial(Poly({Scalar(mu.delta), Scalar(mu.m - mu.delta)}));
  const auto& a = x.t_coeffs();
  RecSeq acc;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = seq_add(had_prod(acc, torus), scale(Scalar(*it), RecSeq::one()));
  return acc;
}

TruncSeries polylog(int k, int order) {
  if (k < 0) throw DomainError("polylog index k must be >= 0");
  std::vector<Scalar> c(static_cast<std::size_t>(order) + 1);
  for (int l = 1; l <= order; ++l)
    c[static_cast<std::size_t>(l)] = k == 0 ? Scalar(1, l) : Scalar(pow(Integer(l), static_cast<unsigned long>(k - 1)));
  return TruncSeries(std::move(c), order);
}

F1Zeta f1_zeta(const GrothClass& x, const Integer& m, int order) {
  if (m < 1) throw DomainError("f1_zeta: m must be >= 1");
  TruncSeries exponent({}, order);
  Integer mk = 1;
  const auto& a = x.t_coeffs();
  for (std::size_t k = 0; k < a.size(); ++k, mk *= m) {
    if (a[k] == 0) continue;
    exponent = exponent + Scalar(a[k] * mk) * polylog(static_cast<int>(k), order);
  }
  TruncSeries z = series_exp(exponent);
  const bool integral = z.ring() == Ring::Z;
  return {WittElement(std::move(z), integral ? Ring::Z : Ring::Q), integral};
}

bool m_membership(const WittElement& p, const RecSeq& s, int order) {
  const int n = std::min(order, p.order());
  const GhostVector g = ghost(p);
  const auto terms = s.prefix(n + 1);
  for (int k = 1; k <= n; ++k)
    if (g[k] != terms[static_cast<std::size_t>(k)]) return false;
  return true;
}

RationalityReport f1_nonrationality_report(const Integer& m, int order) {
  if (order < 16) throw DomainError("non-rationality report needs order >= 16");
  return is_rational_up_to(f1_zeta(GrothClass::torus(), m, order).zeta);
}

}  // namespace wk
