#include "wittkit/almkvist.hpp"

#include "wittkit/errors.hpp"

namespace wk {

EndoClass::EndoClass(Matrix m) : m_(std::move(m)) {
  if (!m_.is_square()) throw DomainError("endomorphism matrix must be square");
}

RatFunc EndoClass::l_ratfunc() const {
  // det(1 - tM) = t^n chi(1/t)
  const Poly chi = charpoly(m_);
  return RatFunc(Poly::constant(1), chi.reversed(dim()));
}

RatFunc VirtualEndo::canonical() const { return plus_.l_ratfunc() / minus_.l_ratfunc(); }

VirtualEndo operator+(const VirtualEndo& a, const VirtualEndo& b) {
  return VirtualEndo(endo_add(a.plus(), b.plus()), endo_add(a.minus(), b.minus()));
}

VirtualEndo operator-(const VirtualEndo& a, const VirtualEndo& b) {
  return VirtualEndo(endo_add(a.plus(), b.minus()), endo_add(a.minus(), b.plus()));
}

VirtualEndo operator*(const VirtualEndo& a, const VirtualEndo& b) {
  return VirtualEndo(endo_add(endo_mul(a.plus(), b.plus()), endo_mul(a.minus(), b.minus())),
                     endo_add(endo_mul(a.plus(), b.minus()), endo_mul(a.minus(), b.plus())));
}

EndoClass endo_add(const EndoClass& a, const EndoClass& b) { return EndoClass(direct_sum(a.matrix(), b.matrix())); }

EndoClass endo_mul(const EndoClass& a, const EndoClass& b) { return EndoClass(kron(a.matrix(), b.matrix())); }

WittElement L_map(const EndoClass& a, int order) { return WittElement::from_ratfunc(a.l_ratfunc(), order); }

WittElement L_map(const VirtualEndo& a, int order) { return WittElement::from_ratfunc(a.canonical(), order); }

EndoClass frobenius(const EndoClass& a, int n) {
  if (n < 1) throw DomainError("Frobenius index must be positive");
  return EndoClass(pow(a.matrix(), static_cast<unsigned>(n)));
}

EndoClass verschiebung(const EndoClass& a, int n) {
  if (n < 1) throw DomainError("Verschiebung index must be positive");
  const int d = a.dim();
  Matrix v(n * d, n * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) v(i, (n - 1) * d + j) = a.matrix()(i, j);
  for (int b = 1; b < n; ++b)
    for (int i = 0; i < d; ++i) v(b * d + i, (b - 1) * d + i) = 1;
  return EndoClass(std::move(v));
}

RecSeq ghost_trace(const EndoClass& a) {
  const Poly p = charpoly(a.matrix()).strip_x_power().second;
  const int r = p.degree();
  std::vector<Scalar> init(static_cast<std::size_t>(r));
  if (r > 0) init[0] = r;
  Matrix power = Matrix::identity(a.dim());
  for (int k = 1; k < r; ++k) {
    power = power * a.matrix();
    init[static_cast<std::size_t>(k)] = trace(power);
  }
  return RecSeq::from_annihilator(p, std::move(init));
}

RecSeq ghost_trace(const VirtualEndo& a) { return seq_sub(ghost_trace(a.plus()), ghost_trace(a.minus())); }

bool is_quasi_unipotent(const EndoClass& a) {
  if (a.ring() != Ring::Z) throw DomainError("quasi-unipotence test needs integer entries");
  const Poly p = charpoly(a.matrix()).strip_x_power().second;
  return is_cyclotomic_product(p);
}

bool in_sigma_subring(const EndoClass& a, const SigmaSpec& spec) {
  if (spec.kind != SigmaSpec::Kind::RootsOfUnity) throw DomainError("unsupported Sigma datum");
  if (!is_quasi_unipotent(a)) return false;
  // diagonalizable iff the squarefree part of the characteristic polynomial kills M
  const Poly q = squarefree_part(charpoly(a.matrix()));
  const Matrix z = eval_poly(q, a.matrix());
  return z == Matrix(a.dim(), a.dim());
}

}  // namespace wk
