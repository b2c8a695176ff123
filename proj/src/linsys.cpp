#include "wittkit/linsys.hpp"

#include <algorithm>

#include "wittkit/errors.hpp"

namespace wk {

namespace {

Ring ring_of_system(const Matrix& m, const Vector& v, const Vector& c) {
  return (m.ring() == Ring::Z && all_integers(v) && all_integers(c)) ? Ring::Z : Ring::Q;
}

}  // namespace

LinSys::LinSys(Matrix m, Vector v, Vector c) : LinSys(m, v, c, ring_of_system(m, v, c)) {}

LinSys::LinSys(Matrix m, Vector v, Vector c, Ring ring)
    : m_(std::move(m)), v_(std::move(v)), c_(std::move(c)), ring_(ring) {
  if (!m_.is_square()) throw DomainError("state matrix must be square");
  if (static_cast<int>(v_.size()) != m_.rows() || static_cast<int>(c_.size()) != m_.rows())
    throw DomainError("input and output vectors must match the state dimension");
  if (ring_ == Ring::Z && ring_of_system(m_, v_, c_) != Ring::Z) throw DomainError("Z-tagged system has non-integer data");
}

LinSys LinSys::one() { return LinSys(Matrix::identity(1), {Scalar(1)}, {Scalar(1)}); }

TransferFunction::TransferFunction(Poly num, Poly den) {
  if (den.is_zero()) throw DomainError("transfer function with zero denominator");
  if (!num.is_zero() && num.degree() >= den.degree()) throw DomainError("transfer function is not strictly proper");
  if (num.is_zero()) {
    num_ = Poly();
    den_ = Poly::constant(1);
    return;
  }
  const Poly g = gcd(num, den);
  if (g.degree() > 0) {
    num = exact_div(num, g);
    den = exact_div(den, g);
  }
  const Scalar lc = den.leading();
  num_ = (1 / lc) * num;
  den_ = den.monic();
}

std::vector<Scalar> TransferFunction::laurent(int count) const {
  // Y = X * sum_n s_n z^{-n-1}; long division in 1/z.
  const int n = den_.degree();
  std::vector<Scalar> s(static_cast<std::size_t>(std::max(count, 0)));
  for (int k = 0; k < count; ++k) {
    // coefficient of z^{n-1-k} in Y equals sum_{i} X_{n-i} s_{k-i}, i = 0..min(k, n)
    Scalar acc = num_[n - 1 - k];
    for (int i = 1; i <= std::min(k, n); ++i) acc -= den_[n - i] * s[static_cast<std::size_t>(k - i)];
    s[static_cast<std::size_t>(k)] = acc;
  }
  return s;
}

RecSeq bat(const LinSys& s) {
  const Poly chi = charpoly(s.M());
  const int n = s.dim();
  std::vector<Scalar> init(static_cast<std::size_t>(n));
  Vector x = s.v();
  for (int k = 0; k < n; ++k) {
    init[static_cast<std::size_t>(k)] = dot(s.c(), x);
    x = s.M() * x;
  }
  return minimize(RecSeq::from_annihilator(chi, std::move(init)));
}

LinSys direct_sum(const LinSys& a, const LinSys& b) {
  Vector v = a.v(), c = a.c();
  v.insert(v.end(), b.v().begin(), b.v().end());
  c.insert(c.end(), b.c().begin(), b.c().end());
  return LinSys(direct_sum(a.M(), b.M()), std::move(v), std::move(c));
}

LinSys tensor(const LinSys& a, const LinSys& b) {
  return LinSys(kron(a.M(), b.M()), kron(a.v(), b.v()), kron(a.c(), b.c()));
}

LinSys dual(const LinSys& s) { return LinSys(s.M().transpose(), s.c(), s.v(), s.ring()); }

Matrix reachability_matrix(const LinSys& s) {
  std::vector<Vector> cols;
  Vector x = s.v();
  for (int k = 0; k < s.dim(); ++k) {
    cols.push_back(x);
    x = s.M() * x;
  }
  return s.dim() == 0 ? Matrix(0, 0) : Matrix::from_columns(cols);
}

Matrix observability_matrix(const LinSys& s) {
  std::vector<Vector> rows;
  Vector y = s.c();
  for (int k = 0; k < s.dim(); ++k) {
    rows.push_back(y);
    y = y * s.M();
  }
  return s.dim() == 0 ? Matrix(0, 0) : Matrix::from_rows(rows);
}

bool is_completely_reachable(const LinSys& s) {
  const Matrix k = reachability_matrix(s);
  if (s.ring() == Ring::Z) {
    const auto f = invariant_factors(k);
    return std::all_of(f.begin(), f.end(), [](const Integer& x) { return x == 1; });
  }
  return rank_over_fraction_field(k) == s.dim();
}

bool is_completely_observable(const LinSys& s) { return rank_over_fraction_field(observability_matrix(s)) == s.dim(); }

bool is_canonical(const LinSys& s) {
  if (s.dim() == 0) return false;
  return is_completely_reachable(s) && is_completely_observable(s);
}

bool is_split(const LinSys& s) {
  if (s.dim() == 0) return false;
  return is_completely_reachable(s) && is_completely_reachable(dual(s));
}

LinSys realize(const RecSeq& s) {
  if (s.depth() < 1) throw DomainError("realize: sequence must have depth >= 1");
  const int r = s.depth();
  Vector v(static_cast<std::size_t>(r));
  v[0] = 1;
  return LinSys(companion(s), std::move(v), s.initial(), s.ring());
}

LinSys minimal_realize(const RecSeq& s) {
  const RecSeq m = minimize(s);
  if (m.depth() == 0) throw DomainError("minimal_realize: zero sequence");
  return realize(m);
}

TransferFunction transfer(const LinSys& s) {
  const auto [chi, adj] = charpoly_with_adjugate(s.M());
  std::vector<Scalar> y(adj.size());
  for (std::size_t k = 0; k < adj.size(); ++k) y[k] = dot(s.c(), adj[k] * s.v());
  return TransferFunction(Poly(std::move(y)), chi);
}

LinSys realize_transfer(const TransferFunction& t) {
  const Poly& x = t.den();
  const int n = x.degree();
  if (n == 0) return LinSys();
  Matrix m(n, n);
  for (int i = 0; i + 1 < n; ++i) m(i, i + 1) = 1;
  for (int j = 0; j < n; ++j) m(n - 1, j) = -x[j];
  Vector v(static_cast<std::size_t>(n));
  v.back() = 1;
  Vector c(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(j)] = t.num()[j];
  return LinSys(std::move(m), std::move(v), std::move(c));
}

bool poles_zeros_in_sigma(const LinSys& s, const SigmaSpec& spec) {
  if (spec.kind != SigmaSpec::Kind::RootsOfUnity) throw DomainError("unsupported Sigma datum");
  const TransferFunction t = transfer(s);
  const Poly zeros = t.num().strip_x_power().second;
  const auto zeros_ok = zeros.is_zero() || zeros.degree() == 0 || is_cyclotomic_product(zeros);
  const auto poles_ok = t.den().degree() == 0 || is_cyclotomic_product(t.den());
  return zeros_ok && poles_ok;
}

}  // namespace wk
