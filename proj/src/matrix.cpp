#include "wittkit/matrix.hpp"

#include <algorithm>
#include <optional>

#include "wittkit/errors.hpp"

namespace wk {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
  data_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  std::vector<Vector> v;
  for (const auto& r : rows) v.emplace_back(r);
  *this = from_rows(v);
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  Matrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c) throw DomainError("ragged matrix rows");
    for (int j = 0; j < c; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols) { return from_rows(cols).transpose(); }

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const Vector& d) {
  const int n = static_cast<int>(d.size());
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
  return m;
}

Vector Matrix::row(int i) const {
  return Vector(data_.begin() + static_cast<long>(index(i, 0)), data_.begin() + static_cast<long>(index(i, 0)) + cols_);
}

Vector Matrix::col(int j) const {
  Vector v(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) v[static_cast<std::size_t>(i)] = (*this)(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix sum: shape mismatch");
  Matrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + Scalar(-1) * b; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix product: shape mismatch");
  Matrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
    }
  return r;
}

Matrix operator*(const Scalar& c, const Matrix& a) {
  Matrix r = a;
  for (auto& x : r.data_) x *= c;
  return r;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (static_cast<int>(v.size()) != a.cols_) throw DomainError("matrix-vector product: shape mismatch");
  Vector r(static_cast<std::size_t>(a.rows_));
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) r[static_cast<std::size_t>(i)] += a(i, j) * v[static_cast<std::size_t>(j)];
  return r;
}

Vector operator*(const Vector& c, const Matrix& a) {
  if (static_cast<int>(c.size()) != a.rows()) throw DomainError("covector-matrix product: shape mismatch");
  Vector r(static_cast<std::size_t>(a.cols()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r[static_cast<std::size_t>(j)] += c[static_cast<std::size_t>(i)] * a(i, j);
  return r;
}

Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DomainError("dot product: length mismatch");
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Matrix pow(const Matrix& m, unsigned n) {
  if (!m.is_square()) throw DomainError("matrix power of a non-square matrix");
  Matrix r = Matrix::identity(m.rows());
  Matrix b = m;
  while (n) {
    if (n & 1U) r = r * b;
    n >>= 1U;
    if (n) b = b * b;
  }
  return r;
}

Scalar trace(const Matrix& m) {
  if (!m.is_square()) throw DomainError("trace of a non-square matrix");
  Scalar s = 0;
  for (int i = 0; i < m.rows(); ++i) s += m(i, i);
  return s;
}

namespace {

// Scales each row to integers; row scaling preserves rank and the zero pattern.
std::vector<std::vector<Integer>> integer_rows(const Matrix& m) {
  std::vector<std::vector<Integer>> out(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (int j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    auto& row = out[static_cast<std::size_t>(i)];
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_num() * (l / m(i, j).get_den()));
  }
  return out;
}

}  // namespace

int rank_over_fraction_field(const Matrix& m) {
  auto a = integer_rows(m);
  const int rows = m.rows(), cols = m.cols();
  Integer prev = 1;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i)
      if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(rank)]);
    const auto& pr = a[static_cast<std::size_t>(rank)];
    const Integer p = pr[static_cast<std::size_t>(col)];
    for (int i = rank + 1; i < rows; ++i) {
      auto& r = a[static_cast<std::size_t>(i)];
      const Integer f = r[static_cast<std::size_t>(col)];
      for (int j = col; j < cols; ++j) {
        Integer v = p * r[static_cast<std::size_t>(j)] - f * pr[static_cast<std::size_t>(j)];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        r[static_cast<std::size_t>(j)] = v;
      }
    }
    prev = p;
    ++rank;
  }
  return rank;
}

Scalar det(const Matrix& m) {
  if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
  const int n = m.rows();
  Matrix a = m;
  Scalar d = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i)
      if (a(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      d = -d;
    }
    d *= a(col, col);
    for (int i = col + 1; i < n; ++i) {
      const Scalar f = a(i, col) / a(col, col);
      if (f == 0) continue;
      for (int j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return d;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw DomainError("inverse of a non-square matrix");
  const int n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i)
      if (a(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw DomainError("matrix is singular");
    for (int j = 0; j < n; ++j) {
      std::swap(a(pivot, j), a(col, j));
      std::swap(inv(pivot, j), inv(col, j));
    }
    const Scalar p = a(col, col);
    for (int j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      const Scalar f = a(i, col);
      for (int j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector r;
  r.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) r.push_back(x * y);
  return r;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
  return r;
}

CharpolyAdjugate charpoly_with_adjugate(const Matrix& m) {
  if (!m.is_square()) throw DomainError("characteristic polynomial of a non-square matrix");
  const int n = m.rows();
  std::vector<Scalar> c(static_cast<std::size_t>(n) + 1);
  c[static_cast<std::size_t>(n)] = 1;
  std::vector<Matrix> adj(static_cast<std::size_t>(n));
  Matrix mk(n, n);
  for (int k = 1; k <= n; ++k) {
    // M_k = M M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(M M_k) / k
    mk = m * mk + c[static_cast<std::size_t>(n - k + 1)] * Matrix::identity(n);
    adj[static_cast<std::size_t>(n - k)] = mk;
    c[static_cast<std::size_t>(n - k)] = -trace(m * mk) / k;
  }
  return {Poly(std::move(c)), std::move(adj)};
}

Poly charpoly(const Matrix& m) { return charpoly_with_adjugate(m).charpoly; }

Matrix eval_poly(const Poly& p, const Matrix& m) {
  if (!m.is_square()) throw DomainError("polynomial of a non-square matrix");
  Matrix acc(m.rows(), m.cols());
  for (int i = p.degree(); i >= 0; --i) acc = acc * m + p[i] * Matrix::identity(m.rows());
  return acc;
}

std::vector<Integer> invariant_factors(const Matrix& m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Integer>> a(static_cast<std::size_t>(rows), std::vector<Integer>(static_cast<std::size_t>(cols)));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (!is_integer(m(i, j))) throw DomainError("invariant_factors: non-integer entry");
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j).get_num();
    }
  auto at = [&a](int i, int j) -> Integer& { return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  auto swap_rows = [&](int i, int k) { std::swap(a[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(k)]); };
  auto swap_cols = [&](int j, int k) {
    for (int i = 0; i < rows; ++i) std::swap(at(i, j), at(i, k));
  };

  const int n = std::min(rows, cols);
  std::vector<Integer> diag;
  for (int t = 0; t < n; ++t) {
    for (;;) {
      // smallest nonzero |entry| in the trailing block
      std::optional<std::pair<int, int>> best;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j)
          if (at(i, j) != 0 && (!best || abs(at(i, j)) < abs(at(best->first, best->second)))) best = {i, j};
      if (!best) {
        diag.resize(static_cast<std::size_t>(n), Integer(0));
        return diag;
      }
      swap_rows(t, best->first);
      swap_cols(t, best->second);
      const Integer p = at(t, t);
      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (at(i, t) == 0) continue;
        const Integer q = at(i, t) / p;  // truncating division; remainder strictly smaller than |p|
        for (int j = t; j < cols; ++j) at(i, j) -= q * at(t, j);
        if (at(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (at(t, j) == 0) continue;
        const Integer q = at(t, j) / p;
        for (int i = t; i < rows; ++i) at(i, j) -= q * at(i, t);
        if (at(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // pivot must divide the rest of the block; otherwise fold an offending row in
      int bad = -1;
      for (int i = t + 1; i < rows && bad < 0; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (at(i, j) % p != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      for (int j = t; j < cols; ++j) at(t, j) += at(bad, j);
    }
    diag.push_back(abs(at(t, t)));
  }
  return diag;
}

}  // namespace wk
