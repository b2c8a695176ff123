#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wittkit/scalar.hpp"

namespace wk {

/// Dense univariate polynomial, lowest degree first. Trailing zero
/// coefficients are always trimmed, so the zero polynomial has no
/// coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Scalar> coeffs);
  static Poly constant(const Scalar& c);
  /// x^n
  static Poly monomial(int n, const Scalar& c = 1);
  /// x - root
  static Poly linear(const Scalar& root);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i; zero outside the stored range.
  Scalar operator[](int i) const;
  Scalar leading() const;
  Ring ring() const { return ring_of(coeffs_); }

  Scalar eval(const Scalar& x) const;
  Poly derivative() const;
  /// this(q(x))
  Poly compose(const Poly& q) const;
  /// Divides by the leading coefficient. Zero stays zero.
  Poly monic() const;
  /// x^deg * p(1/x) for the given nominal degree (must be >= degree()).
  Poly reversed(int nominal_degree) const;
  /// Largest k with x^k | p, and p / x^k. For p = 0 returns (0, 0).
  std::pair<int, Poly> strip_x_power() const;
  /// Scales to an integer polynomial with coprime coefficients and positive leading term.
  Poly primitive_part() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Scalar& c, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

Poly pow(const Poly& p, unsigned n);

/// Euclidean division over Q. Throws DomainError on division by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Exact division; throws InvariantError if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);

/// Monic gcd over Q (zero if both are zero).
Poly gcd(const Poly& a, const Poly& b);

/// p / gcd(p, p'), monic.
Poly squarefree_part(const Poly& p);

/// Yun's algorithm over Q: pairs (f_i, i) with p = lc * prod f_i^i, each f_i monic squarefree.
std::vector<std::pair<Poly, int>> squarefree_factorization(const Poly& p);

/// Unique polynomial of degree < points.size() through the points (Newton divided differences).
/// Throws DomainError on repeated abscissae.
Poly poly_interpolate(const std::vector<std::pair<Scalar, Scalar>>& points);

/// n-th cyclotomic polynomial over Z.
Poly cyclotomic(int n);

/// True iff p is a nonzero constant times a product of cyclotomic polynomials.
/// Uses Kronecker's bound: Phi_n can divide p only if phi(n) <= deg p, and phi(n) >= sqrt(n/2)
/// gives n <= 2 deg^2.
bool is_cyclotomic_product(const Poly& p);

}  // namespace wk
