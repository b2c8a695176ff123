#include "wittkit/zetapoly.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "wittkit/errors.hpp"
#include "wittkit/series.hpp"

namespace wk {

namespace {

using cplx = std::complex<long double>;

std::vector<long double> to_ld(const Poly& p) {
  std::vector<long double> c;
  for (const auto& x : p.coeffs()) c.push_back(static_cast<long double>(x.get_d()));
  return c;
}

// p(z) and p'(z) by Horner.
std::pair<cplx, cplx> horner(const std::vector<long double>& c, cplx z) {
  cplx p = 0, dp = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
  return {p, dp};
}

std::vector<cplx> aberth(const Poly& f, const RootOptions& opts) {
  const int n = f.degree();
  if (n == 1) return {cplx(static_cast<long double>(Scalar(-f[0] / f[1]).get_d()), 0)};
  const auto c = to_ld(f);
  const long double radius =
      c.front() != 0 ? std::pow(std::abs(c.front() / c.back()), 1.0L / static_cast<long double>(n)) : 1.0L;
  std::vector<cplx> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const long double angle = 2 * std::numbers::pi_v<long double> * k / n + 0.7L;
    z[static_cast<std::size_t>(k)] = std::polar(radius, angle);
  }
  bool converged = false;
  for (int it = 0; it < opts.max_iterations && !converged; ++it) {
    converged = true;
    for (int i = 0; i < n; ++i) {
      auto& zi = z[static_cast<std::size_t>(i)];
      const auto [p, dp] = horner(c, zi);
      if (p == cplx(0)) continue;
      const cplx ratio = p / dp;
      cplx sum = 0;
      for (int j = 0; j < n; ++j)
        if (j != i) sum += 1.0L / (zi - z[static_cast<std::size_t>(j)]);
      const cplx w = ratio / (1.0L - ratio * sum);
      zi -= w;
      if (std::abs(w) > 1e-17L * std::max<long double>(1, std::abs(zi))) converged = false;
    }
  }
  for (auto& zi : z)
    for (int k = 0; k < 3; ++k) {
      const auto [p, dp] = horner(c, zi);
      if (dp == cplx(0)) break;
      zi -= p / dp;
    }
  return z;
}

}  // namespace

std::vector<ComplexApprox> find_roots(const Poly& p, const RootOptions& opts) {
  if (p.degree() < 1) throw DomainError("find_roots: degree must be >= 1");
  std::vector<cplx> all;
  for (const auto& [factor, mult] : squarefree_factorization(p)) {
    const auto roots = aberth(factor, opts);
    for (int k = 0; k < mult; ++k) all.insert(all.end(), roots.begin(), roots.end());
  }
  const auto c = to_ld(p);
  const long double lead = std::abs(c.back());
  const int deg = p.degree();
  std::vector<ComplexApprox> out;
  for (const auto& r : all) {
    const long double res = std::abs(horner(c, r).first) / lead;
    const long double bound = opts.tol * std::pow(std::max<long double>(1, std::abs(r)), deg);
    if (!(res < bound)) throw NumericError("root finder did not converge (residual " + std::to_string(static_cast<double>(res)) + ")");
    out.push_back({static_cast<double>(r.real()), static_cast<double>(r.imag()), static_cast<double>(res), 1});
  }
  const double radius = std::sqrt(opts.tol);
  for (auto& a : out) {
    a.multiplicity = static_cast<int>(std::count_if(out.begin(), out.end(), [&](const ComplexApprox& b) {
      return std::hypot(a.re - b.re, a.im - b.im) < radius;
    }));
  }
  std::sort(out.begin(), out.end(), [](const ComplexApprox& a, const ComplexApprox& b) {
    return a.re != b.re ? a.re < b.re : a.im < b.im;
  });
  return out;
}

Poly hilbert_poly(const Poly& u) {
  if (u.eval(1) == 0) throw DomainError("hilbert_poly: U(1) must be nonzero");
  const int e = std::max(u.degree(), 0);
  const Poly one_minus_z({Scalar(1), Scalar(-1)});
  const TruncSeries series = ratfunc_expand(RatFunc(u, pow(one_minus_z, static_cast<unsigned>(e + 1))), 2 * e + 2);
  std::vector<std::pair<Scalar, Scalar>> points;
  for (int n = 0; n <= e; ++n) points.emplace_back(n, series[n]);
  const Poly h = poly_interpolate(points);
  for (int n = e + 1; n <= 2 * e + 2; ++n)
    if (h.eval(n) != series[n]) throw InvariantError("hilbert_poly: interpolated H disagrees with the series");
  return h;
}

bool check_functional_equation(const Poly& z, int e) {
  const Poly lhs = z.compose(Poly({Scalar(1), Scalar(-1)}));
  const Poly rhs = (e % 2 == 0 ? Scalar(1) : Scalar(-1)) * z;
  return lhs == rhs;
}

bool check_unit_circle(const Poly& u, double tol) {
  if (u.degree() < 1) throw DomainError("check_unit_circle: degree must be >= 1");
  const auto roots = find_roots(u, {tol, RootOptions{}.max_iterations});
  return std::all_of(roots.begin(), roots.end(), [tol](const ComplexApprox& r) {
    return std::abs(std::hypot(r.re, r.im) - 1.0) < tol;
  });
}

ZetaPolyResult zeta_poly(const Poly& u, const RootOptions& opts) {
  ZetaPolyResult r;
  r.e = std::max(u.degree(), 0);
  r.H = hilbert_poly(u);
  r.Z = r.H.compose(Poly({Scalar(0), Scalar(-1)}));
  r.functional_ok = check_functional_equation(r.Z, r.e);
  if (r.Z.degree() >= 1) r.roots = find_roots(r.Z, opts);
  for (const auto& root : r.roots) r.max_critical_deviation = std::max(r.max_critical_deviation, std::abs(root.re - 0.5));
  return r;
}

}  // namespace wk
