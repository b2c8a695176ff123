#include "wittkit/recseq.hpp"

#include "wittkit/errors.hpp"

namespace wk {

RecSeq::RecSeq(std::vector<Scalar> recurrence, std::vector<Scalar> initial)
    : RecSeq(recurrence, initial, (all_integers(recurrence) && all_integers(initial)) ? Ring::Z : Ring::Q) {}

RecSeq::RecSeq(std::vector<Scalar> recurrence, std::vector<Scalar> initial, Ring ring)
    : rec_(std::move(recurrence)), init_(std::move(initial)), ring_(ring) {
  if (rec_.size() != init_.size()) throw DomainError("recurrence and initial terms must have the same length");
  if (ring_ == Ring::Z && !(all_integers(rec_) && all_integers(init_)))
    throw DomainError("Z-tagged sequence has non-integer data");
}

RecSeq RecSeq::from_annihilator(const Poly& m, std::vector<Scalar> initial) {
  if (m.is_zero() || m.leading() != 1) throw DomainError("annihilator must be monic");
  const int r = m.degree();
  std::vector<Scalar> rec(static_cast<std::size_t>(r));
  for (int i = 1; i <= r; ++i) rec[static_cast<std::size_t>(i - 1)] = -m[r - i];
  initial.resize(static_cast<std::size_t>(r));
  return RecSeq(std::move(rec), std::move(initial));
}

RecSeq RecSeq::one() { return geometric(1); }
RecSeq RecSeq::geometric(const Scalar& a) { return RecSeq({a}, {Scalar(1)}); }
RecSeq RecSeq::d() { return RecSeq({Scalar(2), Scalar(-1)}, {Scalar(0), Scalar(1)}); }

RecSeq RecSeq::polynomial(const Poly& p) {
  if (p.is_zero()) return zero();
  const int r = p.degree() + 1;
  std::vector<Scalar> init;
  for (int n = 0; n < r; ++n) init.push_back(p.eval(n));
  return from_annihilator(pow(Poly({Scalar(-1), Scalar(1)}), static_cast<unsigned>(r)), std::move(init));
}

Poly RecSeq::annihilator() const {
  const int r = depth();
  std::vector<Scalar> c(static_cast<std::size_t>(r) + 1);
  c[static_cast<std::size_t>(r)] = 1;
  for (int i = 1; i <= r; ++i) c[static_cast<std::size_t>(r - i)] = -rec_[static_cast<std::size_t>(i - 1)];
  return Poly(std::move(c));
}

std::vector<Scalar> RecSeq::prefix(int n) const {
  std::vector<Scalar> out(static_cast<std::size_t>(std::max(n, 0)));
  const int r = depth();
  for (int i = 0; i < n; ++i) {
    if (i < r) {
      out[static_cast<std::size_t>(i)] = init_[static_cast<std::size_t>(i)];
      continue;
    }
    Scalar acc = 0;
    for (int j = 1; j <= r; ++j) acc += rec_[static_cast<std::size_t>(j - 1)] * out[static_cast<std::size_t>(i - j)];
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

Scalar RecSeq::term(long n) const {
  if (n < 0) throw DomainError("sequence index must be nonnegative");
  const long r = depth();
  if (n < r) return init_[static_cast<std::size_t>(n)];
  if (r == 0) return 0;
  std::vector<Scalar> window = init_;
  for (long i = r; i <= n; ++i) {
    Scalar acc = 0;
    for (long j = 1; j <= r; ++j) acc += rec_[static_cast<std::size_t>(j - 1)] * window[static_cast<std::size_t>(r - j)];
    window.erase(window.begin());
    window.push_back(acc);
  }
  return window.back();
}

bool operator==(const RecSeq& a, const RecSeq& b) {
  const RecSeq ma = minimize(a), mb = minimize(b);
  return ma.rec_ == mb.rec_ && ma.init_ == mb.init_;
}

Matrix companion(const RecSeq& s) {
  const int r = s.depth();
  Matrix m(r, r);
  for (int i = 1; i < r; ++i) m(i, i - 1) = 1;
  for (int j = 0; j < r; ++j) m(j, r - 1) = s.recurrence()[static_cast<std::size_t>(r - 1 - j)];
  return m;
}

RecSeq scale(const Scalar& c, const RecSeq& s) {
  if (c == 0) return RecSeq::zero();
  std::vector<Scalar> init = s.initial();
  for (auto& x : init) x *= c;
  return RecSeq(s.recurrence(), std::move(init));
}

RecSeq seq_add(const RecSeq& s, const RecSeq& t) {
  const Poly m = s.annihilator() * t.annihilator();
  const int r = m.degree();
  const auto ps = s.prefix(r), pt = t.prefix(r);
  std::vector<Scalar> init(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) init[static_cast<std::size_t>(i)] = ps[static_cast<std::size_t>(i)] + pt[static_cast<std::size_t>(i)];
  return minimize(RecSeq::from_annihilator(m, std::move(init)));
}

RecSeq seq_sub(const RecSeq& s, const RecSeq& t) { return seq_add(s, scale(-1, t)); }

RecSeq had_prod(const RecSeq& s, const RecSeq& t) {
  if (s.depth() == 0 || t.depth() == 0) return RecSeq::zero();
  const Poly m = charpoly(kron(companion(s), companion(t)));
  const int r = m.degree();
  const auto ps = s.prefix(r), pt = t.prefix(r);
  std::vector<Scalar> init(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) init[static_cast<std::size_t>(i)] = ps[static_cast<std::size_t>(i)] * pt[static_cast<std::size_t>(i)];
  return minimize(RecSeq::from_annihilator(m, std::move(init)));
}

RecSeq shift(const RecSeq& s) {
  const int r = s.depth();
  if (r == 0) return s;
  auto p = s.prefix(r + 1);
  p.erase(p.begin());
  return RecSeq(s.recurrence(), std::move(p));
}

Matrix hankel(const RecSeq& s, int k) {
  if (k < 1) throw DomainError("Hankel size must be positive");
  const auto p = s.prefix(2 * k - 1);
  Matrix h(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) h(i, j) = p[static_cast<std::size_t>(i + j)];
  return h;
}

int max_hankel_rank(const RecSeq& s) {
  if (s.depth() == 0) return 0;
  return rank_over_fraction_field(hankel(s, s.depth()));
}

RecSeq minimize(const RecSeq& s) {
  const int r = s.depth();
  if (r == 0) return s;
  const Matrix h = hankel(s, r);
  // t = number of leading linearly independent columns
  int t = 0;
  while (t < r) {
    std::vector<Vector> cols;
    for (int j = 0; j <= t; ++j) cols.push_back(h.col(j));
    if (rank_over_fraction_field(Matrix::from_columns(cols)) <= t) break;
    ++t;
  }
  if (t == r) return s;
  if (t == 0) return RecSeq::zero();
  // Solve H_t = sum_i x_i H_i (i < t) through the normal equations; the
  // leading t columns have full rank so A^T A is invertible over Q.
  std::vector<Vector> cols;
  for (int j = 0; j < t; ++j) cols.push_back(h.col(j));
  const Matrix a = Matrix::from_columns(cols);
  const Matrix at = a.transpose();
  const Vector x = inverse(at * a) * (at * h.col(t));
  std::vector<Scalar> rec(static_cast<std::size_t>(t));
  for (int j = 1; j <= t; ++j) rec[static_cast<std::size_t>(j - 1)] = x[static_cast<std::size_t>(t - j)];
  auto init = s.prefix(t);
  const bool integral = s.ring() == Ring::Z && all_integers(rec);
  return RecSeq(std::move(rec), std::move(init), integral ? Ring::Z : Ring::Q);
}

Scalar counit(const RecSeq& s) { return s.term(0); }

TensorDecomp comult(const RecSeq& s) {
  const RecSeq m = minimize(s);
  if (m.depth() == 0) throw DomainError("comultiplication of the zero sequence has no invertible Hankel matrix");
  const Matrix h = hankel(m, m.depth());
  const Scalar dh = det(h);
  TensorDecomp out;
  out.k = m.depth();
  out.coeffs = inverse(h);
  out.field_level = s.ring() == Ring::Z && abs(dh) != 1;
  return out;
}

bool is_grouplike(const RecSeq& s) {
  const RecSeq m = minimize(s);
  return m.depth() == 1 && m.initial()[0] == 1;
}

bool is_primitive(const RecSeq& s) {
  const RecSeq m = minimize(s);
  if (m.depth() == 0) return true;
  return m.depth() == 2 && m.initial()[0] == 0 && m.annihilator() == Poly({Scalar(1), Scalar(-2), Scalar(1)});
}

}  // namespace wk
