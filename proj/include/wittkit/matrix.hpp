#pragma once

#include <initializer_list>
#include <vector>

#include "wittkit/poly.hpp"
#include "wittkit/scalar.hpp"

namespace wk {

using Vector = std::vector<Scalar>;

/// Dense exact matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix identity(int n);
  static Matrix diagonal(const Vector& d);
  /// Columns given as vectors of equal length.
  static Matrix from_columns(const std::vector<Vector>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(int i, int j) { return data_[index(i, j)]; }
  const Scalar& operator()(int i, int j) const { return data_[index(i, j)]; }

  Vector row(int i) const;
  Vector col(int j) const;
  Matrix transpose() const;
  Ring ring() const { return ring_of(data_); }

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& c, const Matrix& a);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j); }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> data_;
};

/// Row vector times matrix.
Vector operator*(const Vector& c, const Matrix& a);
Scalar dot(const Vector& a, const Vector& b);

Matrix pow(const Matrix& m, unsigned n);
Scalar trace(const Matrix& m);
Scalar det(const Matrix& m);
/// Throws DomainError if singular or non-square.
Matrix inverse(const Matrix& m);

Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);
Matrix direct_sum(const Matrix& a, const Matrix& b);

/// Rank over Q by fraction-free (Bareiss) elimination.
int rank_over_fraction_field(const Matrix& m);

/// det(xI - M), monic.
Poly charpoly(const Matrix& m);

/// Faddeev-LeVerrier data: det(xI - M) and the matrices B_k with
/// adj(xI - M) = sum_{k=0}^{n-1} B_k x^k.
struct CharpolyAdjugate {
  Poly charpoly;
  std::vector<Matrix> adjugate_coeffs;
};
CharpolyAdjugate charpoly_with_adjugate(const Matrix& m);

/// p(M) by Horner.
Matrix eval_poly(const Poly& p, const Matrix& m);

/// Diagonal of the Smith normal form (nonnegative, each dividing the next),
/// min(rows, cols) entries. Throws DomainError on non-integer entries.
std::vector<Integer> invariant_factors(const Matrix& m);

}  // namespace wk
