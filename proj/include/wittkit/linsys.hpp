#pragma once

#include "wittkit/almkvist.hpp"
#include "wittkit/matrix.hpp"
#include "wittkit/recseq.hpp"

namespace wk {

/// Discrete linear system (E = R^n, f = M, input v, output covector c).
class LinSys {
 public:
  LinSys() = default;
  LinSys(Matrix m, Vector v, Vector c);
  LinSys(Matrix m, Vector v, Vector c, Ring ring);
  /// (R, 1, 1, 1)
  static LinSys one();

  const Matrix& M() const { return m_; }
  const Vector& v() const { return v_; }
  const Vector& c() const { return c_; }
  int dim() const { return m_.rows(); }
  Ring ring() const { return ring_; }

  friend bool operator==(const LinSys& a, const LinSys& b) = default;

 private:
  Matrix m_{0, 0};
  Vector v_;
  Vector c_;
  Ring ring_ = Ring::Z;
};

/// Strictly proper Y(z) / X(z) with X monic; reduced.
class TransferFunction {
 public:
  TransferFunction() : num_(), den_(Poly::constant(1)) {}
  /// Normalizes X to be monic and cancels common factors. Throws DomainError
  /// if deg Y >= deg X (unless Y = 0) or X = 0.
  TransferFunction(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  /// Coefficient of z^{-n-1} in the expansion at infinity, n = 0..count-1.
  std::vector<Scalar> laurent(int count) const;

  friend bool operator==(const TransferFunction& a, const TransferFunction& b) = default;

 private:
  Poly num_;
  Poly den_;
};

/// Input-output sequence (c v, c M v, c M^2 v, ...), minimized.
RecSeq bat(const LinSys& s);

LinSys direct_sum(const LinSys& a, const LinSys& b);
LinSys tensor(const LinSys& a, const LinSys& b);
/// (E*, M^T, c, v)
LinSys dual(const LinSys& s);

/// Krylov matrix [v, Mv, ..., M^{n-1} v] (columns).
Matrix reachability_matrix(const LinSys& s);
/// Rows c, cM, ..., cM^{n-1}.
Matrix observability_matrix(const LinSys& s);

/// Over Q: the Krylov matrix has rank n. Over Z: its Smith invariants are all 1,
/// i.e. v, Mv, ... generate Z^n as a module (Cayley-Hamilton bounds the list at n).
bool is_completely_reachable(const LinSys& s);
/// The observation map is injective (rank n over the fraction field).
bool is_completely_observable(const LinSys& s);
bool is_canonical(const LinSys& s);
/// Both s and its dual are completely reachable.
bool is_split(const LinSys& s);

/// Companion realization on R[x]/(m) with v = 1 and c(x^i) = s_i, using the
/// stated depth of s. bat(realize(s)) = s.
LinSys realize(const RecSeq& s);
/// realize(minimize(s)); throws DomainError for the zero sequence.
LinSys minimal_realize(const RecSeq& s);

/// c adj(zI - M) v / det(zI - M), reduced.
TransferFunction transfer(const LinSys& s);

/// Controllable companion form: last row -d_0..-d_{n-1}, v = e_n, c from Y.
LinSys realize_transfer(const TransferFunction& t);

/// All zeros (z = 0 excluded) and poles of the transfer function are roots of unity.
bool poles_zeros_in_sigma(const LinSys& s, const SigmaSpec& spec = {});

}  // namespace wk
