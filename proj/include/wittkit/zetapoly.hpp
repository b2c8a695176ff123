#pragma once

#include <vector>

#include "wittkit/poly.hpp"

namespace wk {

/// Numeric root of an exact polynomial.
struct ComplexApprox {
  double re = 0;
  double im = 0;
  /// |p(root)| / |lead|
  double residual = 0;
  /// Number of returned roots within sqrt(tol) of this one (itself included).
  int multiplicity = 1;
};

struct RootOptions {
  double tol = 1e-9;
  int max_iterations = 1000;
};

/// All deg(p) roots with multiplicity, sorted by (re, im). The exact
/// squarefree factorization is taken first; each squarefree factor is solved by
/// Aberth-Ehrlich iteration with a long-double Newton polish.
/// Throws DomainError for deg p < 1 and NumericError on non-convergence or
/// when a root fails |p(root)| / |lead| < tol * max(1, |root|)^deg.
std::vector<ComplexApprox> find_roots(const Poly& p, const RootOptions& opts = {});

/// P(z) = U(z) / (1 - z)^{e+1} = sum_n H(n) z^n with e = deg U.
/// Throws DomainError if U(1) = 0 and InvariantError if the interpolated H
/// disagrees with the series through index 2e + 2.
Poly hilbert_poly(const Poly& u);

/// Z(1 - z) == (-1)^e Z(z), exactly.
bool check_functional_equation(const Poly& z, int e);

/// Every root of U satisfies ||root| - 1| < tol. Requires deg U >= 1.
bool check_unit_circle(const Poly& u, double tol = 1e-9);

struct ZetaPolyResult {
  Poly H;
  /// H(-z)
  Poly Z;
  int e = 0;
  bool functional_ok = false;
  std::vector<ComplexApprox> roots;
  /// max |Re(root) - 1/2|, 0 when Z is constant.
  double max_critical_deviation = 0;
};

ZetaPolyResult zeta_poly(const Poly& u, const RootOptions& opts = {});

}  // namespace wk
