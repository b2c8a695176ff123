#pragma once

#include <random>
#include <vector>

#include "wittkit/almkvist.hpp"
#include "wittkit/linsys.hpp"
#include "wittkit/recseq.hpp"
#include "wittkit/torified.hpp"
#include "wittkit/witt.hpp"

namespace wk::test {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline std::vector<Scalar> ints(std::initializer_list<long> xs) {
  std::vector<Scalar> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

inline Poly poly(std::initializer_list<long> xs) { return Poly(ints(xs)); }

inline std::vector<Scalar> random_vector(Rng& rng, int n, long lo, long hi) {
  std::vector<Scalar> v;
  for (int i = 0; i < n; ++i) v.emplace_back(uniform(rng, lo, hi));
  return v;
}

inline Matrix random_matrix(Rng& rng, int n, long lo, long hi) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = uniform(rng, lo, hi);
  return m;
}

/// 1 + c_1 t + ... + c_N t^N with small integer coefficients.
inline WittElement random_witt(Rng& rng, int order, long bound = 3) {
  auto c = random_vector(rng, order + 1, -bound, bound);
  c[0] = 1;
  return WittElement(TruncSeries(c, order));
}

inline RecSeq random_recseq(Rng& rng, int max_depth, long bound = 3) {
  const int r = static_cast<int>(uniform(rng, 1, max_depth));
  return RecSeq(random_vector(rng, r, -bound, bound), random_vector(rng, r, -bound, bound));
}

inline LinSys random_system(Rng& rng, int max_dim, long bound = 3) {
  const int n = static_cast<int>(uniform(rng, 1, max_dim));
  return LinSys(random_matrix(rng, n, -bound, bound), random_vector(rng, n, -bound, bound), random_vector(rng, n, -bound, bound));
}

/// Effective torified class of degree <= max_deg with coefficients in [0, max_coeff].
inline GrothClass random_effective(Rng& rng, int max_deg, long max_coeff) {
  std::vector<Integer> c;
  const int d = static_cast<int>(uniform(rng, 0, max_deg));
  for (int i = 0; i <= d; ++i) c.emplace_back(uniform(rng, 0, max_coeff));
  return GrothClass(c);
}

/// Companion matrix of a monic integer polynomial (ones on the subdiagonal).
inline Matrix companion_of(const Poly& p) {
  const int n = p.degree();
  Matrix m(n, n);
  for (int i = 1; i < n; ++i) m(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) m(i, n - 1) = -p[i];
  return m;
}

/// Random unimodular matrix as a product of elementary row operations.
inline Matrix random_unimodular(Rng& rng, int n) {
  Matrix u = Matrix::identity(n);
  if (n < 2) return u;
  for (int step = 0; step < 2 * n; ++step) {
    const int i = static_cast<int>(uniform(rng, 0, n - 1));
    int j = static_cast<int>(uniform(rng, 0, n - 2));
    if (j >= i) ++j;
    const long k = uniform(rng, -1, 1);
    for (int col = 0; col < n; ++col) u(i, col) += k * u(j, col);
  }
  return u;
}

/// Integer matrix conjugate to a block sum of cyclotomic companions and
/// (sometimes) a nilpotent block, so every nonzero eigenvalue is a root of unity.
inline Matrix random_quasi_unipotent(Rng& rng, int max_dim) {
  Matrix m(0, 0);
  while (m.rows() < max_dim) {
    if (m.rows() > 0 && uniform(rng, 0, 3) == 0) break;
    const int room = max_dim - m.rows();
    Matrix block;
    if (uniform(rng, 0, 4) == 0) {
      block = Matrix(1, 1);
    } else {
      std::vector<int> fits;
      for (int n : {1, 2, 3, 4, 5, 6, 8, 10, 12})
        if (cyclotomic(n).degree() <= room) fits.push_back(n);
      block = companion_of(cyclotomic(fits[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(fits.size()) - 1))]));
    }
    m = direct_sum(m, block);
  }
  const Matrix u = random_unimodular(rng, m.rows());
  return u * m * inverse(u);
}

}  // namespace wk::test
