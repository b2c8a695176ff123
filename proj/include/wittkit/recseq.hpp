#pragma once

#include <vector>

#include "wittkit/matrix.hpp"
#include "wittkit/poly.hpp"

namespace wk {

/// Linear recursive sequence s_n = a_1 s_{n-1} + ... + a_r s_{n-r} (n >= r),
/// stored as the recurrence a_1..a_r and the initial terms s_0..s_{r-1}.
/// Presentations need not be minimal; equality compares minimized forms.
class RecSeq {
 public:
  /// The zero sequence (depth 0).
  RecSeq() = default;
  RecSeq(std::vector<Scalar> recurrence, std::vector<Scalar> initial);
  RecSeq(std::vector<Scalar> recurrence, std::vector<Scalar> initial, Ring ring);
  /// Sequence annihilated by the monic polynomial m(x) with the given initial terms.
  static RecSeq from_annihilator(const Poly& m, std::vector<Scalar> initial);

  static RecSeq zero() { return {}; }
  /// (1, 1, 1, ...), the unit for the Hadamard product.
  static RecSeq one();
  /// (1, a, a^2, ...)
  static RecSeq geometric(const Scalar& a);
  /// d = (0, 1, 2, ...)
  static RecSeq d();
  /// Polynomial sequence n -> p(n), annihilated by (x - 1)^{deg p + 1}.
  static RecSeq polynomial(const Poly& p);

  int depth() const { return static_cast<int>(rec_.size()); }
  Ring ring() const { return ring_; }
  const std::vector<Scalar>& recurrence() const { return rec_; }
  const std::vector<Scalar>& initial() const { return init_; }
  /// m(x) = x^r - a_1 x^{r-1} - ... - a_r.
  Poly annihilator() const;

  Scalar term(long n) const;
  std::vector<Scalar> prefix(int n) const;

  friend bool operator==(const RecSeq& a, const RecSeq& b);

 private:
  std::vector<Scalar> rec_;
  std::vector<Scalar> init_;
  Ring ring_ = Ring::Z;
};

/// Companion matrix of the multiplication-by-x map on R[x]/(m) in the basis
/// 1, x, ..., x^{r-1}: ones on the subdiagonal, last column a_r, ..., a_1.
Matrix companion(const RecSeq& s);

RecSeq scale(const Scalar& c, const RecSeq& s);
RecSeq seq_add(const RecSeq& s, const RecSeq& t);
RecSeq seq_sub(const RecSeq& s, const RecSeq& t);
/// Hadamard (componentwise) product through the Kronecker product of the
/// companion matrices, then minimized.
RecSeq had_prod(const RecSeq& s, const RecSeq& t);
/// D(s_0, s_1, ...) = (s_1, s_2, ...)
RecSeq shift(const RecSeq& s);

/// k x k matrix (s_{i+j}).
Matrix hankel(const RecSeq& s, int k);
/// Rank of hankel(s, depth) over Q; the minimal realization dimension.
int max_hankel_rank(const RecSeq& s);

/// Equivalent presentation of minimal depth, from the first linear dependence
/// among the columns of the depth x depth Hankel matrix.
RecSeq minimize(const RecSeq& s);

Scalar counit(const RecSeq& s);

/// Delta(s) = sum_{i,j<k} c_ij (D^i s) (x) (D^j s) with (c_ij) the inverse of
/// the k x k Hankel matrix, k the minimal depth.
struct TensorDecomp {
  int k = 0;
  Matrix coeffs;
  /// Set for Z-sequences whose Hankel determinant is not a unit: the
  /// coefficients live in Q only.
  bool field_level = false;
};
/// Throws DomainError for the zero sequence.
TensorDecomp comult(const RecSeq& s);

/// s_0 = 1 and s geometric.
bool is_grouplike(const RecSeq& s);
/// s = c d for a scalar c.
bool is_primitive(const RecSeq& s);

}  // namespace wk
