#pragma once

#include <vector>

#include "wittkit/almkvist.hpp"
#include "wittkit/recseq.hpp"
#include "wittkit/witt.hpp"

namespace wk {

/// Class sum_i a_i T^i in K0 of torified varieties = Z[T], where T = [G_m]
/// and L = T + 1 is the Lefschetz class.
class GrothClass {
 public:
  GrothClass() = default;
  /// Coefficients in the T-basis, lowest degree first.
  explicit GrothClass(std::vector<Integer> t_coeffs);
  static GrothClass from_L_basis(const std::vector<Integer>& l_coeffs);
  static GrothClass point() { return GrothClass({Integer(1)}); }
  static GrothClass torus() { return GrothClass({Integer(0), Integer(1)}); }
  static GrothClass lefschetz() { return GrothClass({Integer(1), Integer(1)}); }

  const std::vector<Integer>& t_coeffs() const { return t_; }
  std::vector<Integer> l_coeffs() const;
  int degree() const { return static_cast<int>(t_.size()) - 1; }
  /// All T-basis coefficients are nonnegative.
  bool effective() const;

  friend GrothClass operator+(const GrothClass& a, const GrothClass& b);
  friend GrothClass operator-(const GrothClass& a, const GrothClass& b);
  friend GrothClass operator*(const GrothClass& a, const GrothClass& b);
  friend bool operator==(const GrothClass& a, const GrothClass& b) = default;

 private:
  std::vector<Integer> t_;
};

/// Counting measure: mu(T) = m, so mu(L) = m + 1. The biring offset delta
/// selects the primitive generator D = T - delta.
struct Measure {
  Integer m = 1;
  Integer delta = 1;
};

/// #X(F_{1^m}) = sum a_i m^i.
Integer count_points(const GrothClass& x, const Integer& m);

/// L^i -> L^{ki}.
GrothClass adams(const GrothClass& x, int k);

/// prod_i (1 - (m+1)^i t)^{-b_i} for X = sum b_i L^i: the lambda-structure
/// composed with the counting measure mu(T) = m.
WittElement sigma_eval(const GrothClass& x, const Integer& m, int order = kDefaultOrder);

WittElement zeta_mu(const GrothClass& x, const Measure& mu, int order = kDefaultOrder);

/// L^i -> [(m+1)^i], assembled as a virtual endomorphism class.
VirtualEndo r_mu(const GrothClass& x, const Measure& mu);

/// Biring morphism T -> (m - delta) d + delta 1, i.e. n -> delta + n (m - delta),
/// extended through seq_add and had_prod.
RecSeq biring_measure(const GrothClass& x, const Measure& mu);

/// Li_{1-k}(t) = sum_{l>=1} l^{k-1} t^l; k = 0 gives -log(1 - t).
TruncSeries polylog(int k, int order = kDefaultOrder);

struct F1Zeta {
  WittElement zeta;
  /// Every coefficient is an integer (reported, never assumed).
  bool integral = false;
};

/// exp(sum_k a_k m^k Li_{1-k}(t)).
F1Zeta f1_zeta(const GrothClass& x, const Integer& m, int order = kDefaultOrder);

/// ghost(P)_k = s_k for 1 <= k <= order: the pair lies in the pullback of
/// W(Z) -> Z^inf <- L(Z). The epsilon-component s_0 is not compared.
bool m_membership(const WittElement& p, const RecSeq& s, int order);

/// is_rational_up_to(f1_zeta(T, m)). Requires order >= 16.
RationalityReport f1_nonrationality_report(const Integer& m, int order = kDefaultOrder);

}  // namespace wk
