#include "wittkit/poly.hpp"

#include <algorithm>
#include <sstream>

#include "wittkit/errors.hpp"

namespace wk {

Poly::Poly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Scalar& c) { return Poly(std::vector<Scalar>{c}); }

Poly Poly::monomial(int n, const Scalar& c) {
  std::vector<Scalar> v(static_cast<std::size_t>(n) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::linear(const Scalar& root) { return Poly({-root, Scalar(1)}); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Scalar Poly::operator[](int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Scalar Poly::leading() const { return is_zero() ? Scalar(0) : coeffs_.back(); }

Scalar Poly::eval(const Scalar& x) const {
  Scalar acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  std::vector<Scalar> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<long>(i));
  return Poly(std::move(d));
}

Poly Poly::compose(const Poly& q) const {
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + Poly::constant(*it);
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  const Scalar lc = leading();
  std::vector<Scalar> v = coeffs_;
  for (auto& c : v) c /= lc;
  return Poly(std::move(v));
}

Poly Poly::reversed(int nominal_degree) const {
  if (nominal_degree < degree()) throw InvariantError("reversed: nominal degree below actual degree");
  std::vector<Scalar> v(static_cast<std::size_t>(nominal_degree) + 1);
  for (int i = 0; i <= degree(); ++i) v[static_cast<std::size_t>(nominal_degree - i)] = coeffs_[static_cast<std::size_t>(i)];
  return Poly(std::move(v));
}

std::pair<int, Poly> Poly::strip_x_power() const {
  if (is_zero()) return {0, *this};
  std::size_t k = 0;
  while (coeffs_[k] == 0) ++k;
  return {static_cast<int>(k), Poly(std::vector<Scalar>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()))};
}

Poly Poly::primitive_part() const {
  if (is_zero()) return *this;
  Integer l = 1;
  for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  Integer g = 0;
  std::vector<Integer> ints;
  for (const auto& c : coeffs_) {
    Integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  if (ints.back() < 0) g = -g;
  std::vector<Scalar> out;
  for (const auto& v : ints) out.emplace_back(Integer(v / g));
  return Poly(std::move(out));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Scalar> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[static_cast<int>(i)] + b[static_cast<int>(i)];
  return Poly(std::move(v));
}

Poly operator-(const Poly& a) {
  std::vector<Scalar> v = a.coeffs_;
  for (auto& c : v) c = -c;
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(v));
}

Poly operator*(const Scalar& c, const Poly& a) {
  std::vector<Scalar> v = a.coeffs_;
  for (auto& x : v) x *= c;
  return Poly(std::move(v));
}

std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Scalar c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Scalar mag = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

Poly pow(const Poly& p, unsigned n) {
  Poly r = Poly::constant(1);
  Poly b = p;
  while (n) {
    if (n & 1U) r = r * b;
    n >>= 1U;
    if (n) b = b * b;
  }
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Scalar> rem = a.coeffs();
  const int db = b.degree();
  const Scalar lb = b.leading();
  if (a.degree() < db) return {Poly(), a};
  std::vector<Scalar> quo(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int i = a.degree(); i >= db; --i) {
    const Scalar q = rem[static_cast<std::size_t>(i)] / lb;
    quo[static_cast<std::size_t>(i - db)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b[j];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InvariantError("exact_div: nonzero remainder");
  return q;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

Poly squarefree_part(const Poly& p) {
  if (p.degree() <= 0) return p.monic();
  return exact_div(p, gcd(p, p.derivative())).monic();
}

std::vector<std::pair<Poly, int>> squarefree_factorization(const Poly& p) {
  std::vector<std::pair<Poly, int>> out;
  if (p.degree() <= 0) return out;
  const Poly f = p.monic();
  Poly a = gcd(f, f.derivative());
  Poly b = exact_div(f, a);
  Poly c = exact_div(f.derivative(), a);
  Poly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    const Poly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b.derivative();
  }
  return out;
}

Poly poly_interpolate(const std::vector<std::pair<Scalar, Scalar>>& points) {
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (points[i].first == points[j].first)
        throw DomainError("poly_interpolate: repeated abscissa " + to_string(points[i].first));
  std::vector<Scalar> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
  Poly result;
  for (std::size_t k = n; k-- > 0;) result = result * Poly::linear(points[k].first) + Poly::constant(dd[k]);
  return result;
}

namespace {

// phi[n] for 1 <= n <= max_n, built bottom-up from x^n - 1 = prod_{d | n} Phi_d.
// Distinct prime factors of n.
std::vector<int> prime_factors(int n) {
  std::vector<int> ps;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

int totient(int n) {
  int phi = n;
  for (int p : prime_factors(n)) phi = phi / p * (p - 1);
  return phi;
}

// Phi_n = prod_{d | n, d squarefree} (x^{n/d} - 1)^{mu(d)}; multiplications first so
// every division is exact.
std::vector<Integer> cyclotomic_coeffs(int n) {
  const auto ps = prime_factors(n);
  const std::size_t subsets = std::size_t{1} << ps.size();
  std::vector<int> up, down;
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    int d = 1;
    int bits = 0;
    for (std::size_t i = 0; i < ps.size(); ++i)
      if (mask & (std::size_t{1} << i)) {
        d *= ps[i];
        ++bits;
      }
    (bits % 2 == 0 ? up : down).push_back(n / d);
  }
  std::vector<Integer> c{Integer(1)};
  for (int k : up) {
    std::vector<Integer> next(c.size() + static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + static_cast<std::size_t>(k)] += c[i];
      next[i] -= c[i];
    }
    c = std::move(next);
  }
  for (int k : down) {
    // c = q (x^k - 1): q_i = q_{i-k} - c_i
    const std::size_t kk = static_cast<std::size_t>(k);
    std::vector<Integer> q(c.size() - kk);
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = (i >= kk ? q[i - kk] : Integer(0)) - c[i];
    c = std::move(q);
  }
  return c;
}

}  // namespace

Poly cyclotomic(int n) {
  if (n < 1) throw DomainError("cyclotomic index must be positive");
  std::vector<Scalar> c;
  for (const auto& x : cyclotomic_coeffs(n)) c.emplace_back(x);
  return Poly(std::move(c));
}

bool is_cyclotomic_product(const Poly& p) {
  if (p.is_zero()) return false;
  Poly rest = p.monic();
  const int deg = rest.degree();
  const int bound = 2 * deg * deg;
  for (int n = 1; n <= bound && rest.degree() > 0; ++n) {
    if (totient(n) > rest.degree()) continue;
    const Poly phi = cyclotomic(n);
    for (;;) {
      auto [q, r] = divmod(rest, phi);
      if (!r.is_zero()) break;
      rest = q;
    }
  }
  return rest.degree() == 0;
}

}  // namespace wk
