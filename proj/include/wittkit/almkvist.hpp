#pragma once

#include "wittkit/matrix.hpp"
#include "wittkit/recseq.hpp"
#include "wittkit/series.hpp"
#include "wittkit/witt.hpp"

namespace wk {

/// Class of a pair (free module, endomorphism) in the Almkvist ring W0(R),
/// represented by a square matrix. Pairs (E, 0) are zero, so two classes are
/// equal exactly when their L-map images agree.
class EndoClass {
 public:
  EndoClass() = default;
  explicit EndoClass(Matrix m);
  /// The unit (R, 1).
  static EndoClass one() { return EndoClass(Matrix::identity(1)); }

  const Matrix& matrix() const { return m_; }
  int dim() const { return m_.rows(); }
  Ring ring() const { return m_.ring(); }

  /// 1 / det(1 - tM), reduced with num(0) = den(0) = 1.
  RatFunc l_ratfunc() const;

  friend bool operator==(const EndoClass& a, const EndoClass& b) { return a.l_ratfunc() == b.l_ratfunc(); }

 private:
  Matrix m_{0, 0};
};

/// Formal difference plus - minus. Its canonical form is the reduced rational
/// function L(plus) / L(minus).
class VirtualEndo {
 public:
  VirtualEndo() = default;
  VirtualEndo(EndoClass plus, EndoClass minus) : plus_(std::move(plus)), minus_(std::move(minus)) {}
  explicit VirtualEndo(EndoClass plus) : plus_(std::move(plus)) {}

  const EndoClass& plus() const { return plus_; }
  const EndoClass& minus() const { return minus_; }
  RatFunc canonical() const;

  friend bool operator==(const VirtualEndo& a, const VirtualEndo& b) { return a.canonical() == b.canonical(); }

 private:
  EndoClass plus_;
  EndoClass minus_;
};

VirtualEndo operator+(const VirtualEndo& a, const VirtualEndo& b);
VirtualEndo operator-(const VirtualEndo& a, const VirtualEndo& b);
VirtualEndo operator*(const VirtualEndo& a, const VirtualEndo& b);

/// Eigenvalue admissibility datum. Only the cyclotomic datum (all roots of
/// unity) is supported.
struct SigmaSpec {
  enum class Kind { RootsOfUnity };
  Kind kind = Kind::RootsOfUnity;
};

EndoClass endo_add(const EndoClass& a, const EndoClass& b);
EndoClass endo_mul(const EndoClass& a, const EndoClass& b);

/// Expansion of 1 / det(1 - tM) to the given order.
WittElement L_map(const EndoClass& a, int order = kDefaultOrder);
WittElement L_map(const VirtualEndo& a, int order = kDefaultOrder);

/// (E, f^n)
EndoClass frobenius(const EndoClass& a, int n);

/// (E^n, V) with V the n x n block matrix carrying M in the top-right block and
/// identity blocks on the block subdiagonal.
EndoClass verschiebung(const EndoClass& a, int n);

/// Trace sequence s_k = Tr(M^k) for k >= 1, with s_0 the number of nonzero
/// eigenvalues, so that zero eigenvalues (the pairs (E, 0)) contribute
/// nothing. The recurrence is det(xI - M) with its x^j factor removed.
/// Ghost component k of L_map(a) is term k of this sequence.
RecSeq ghost_trace(const EndoClass& a);
RecSeq ghost_trace(const VirtualEndo& a);

/// All eigenvalues of M other than 0 are roots of unity. Requires integer entries.
bool is_quasi_unipotent(const EndoClass& a);

/// M is diagonalizable over Qbar (squarefree minimal polynomial) and every
/// nonzero eigenvalue lies in the datum.
bool in_sigma_subring(const EndoClass& a, const SigmaSpec& spec = {});

}  // namespace wk
