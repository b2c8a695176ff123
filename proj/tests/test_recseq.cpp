#include <doctest.h>

#include "support.hpp"
#include "wittkit/errors.hpp"

using namespace wk;
using wk::test::ints;
using wk::test::poly;

namespace {

const RecSeq kFib({1, 1}, {1, 1});
const RecSeq kNaturals({2, -1}, {1, 2});

}  // namespace

TEST_CASE("terms and prefixes") {
  CHECK(kFib.prefix(8) == ints({1, 1, 2, 3, 5, 8, 13, 21}));
  CHECK(kFib.term(50) == Scalar(Integer("20365011074")));
  CHECK(RecSeq::d().prefix(5) == ints({0, 1, 2, 3, 4}));
  CHECK(RecSeq::zero().prefix(3) == ints({0, 0, 0}));
  CHECK(RecSeq::polynomial(poly({1, 0, 1})).prefix(4) == ints({1, 2, 5, 10}));
  CHECK(kNaturals.annihilator() == poly({1, -2, 1}));
  CHECK_THROWS_AS(RecSeq({1}, {1, 2}), DomainError);
  CHECK_THROWS_AS(RecSeq({Scalar(1, 2)}, {1}, Ring::Z), DomainError);
}

TEST_CASE("minimization") {
  // 2^n presented with the redundant annihilator (x - 2)(x - 3).
  const RecSeq redundant({5, -6}, {1, 2});
  const RecSeq m = minimize(redundant);
  CHECK(m.depth() == 1);
  CHECK(m.recurrence() == ints({2}));
  CHECK(m == RecSeq::geometric(2));
  CHECK(redundant == RecSeq::geometric(2));
  CHECK(minimize(RecSeq({1, 1}, {0, 0})).depth() == 0);
  CHECK(max_hankel_rank(kNaturals) == 2);
}

TEST_CASE("Hankel matrices of s_n = n + 1") {
  CHECK(det(hankel(kNaturals, 1)) == 1);
  CHECK(det(hankel(kNaturals, 2)) == -1);
  CHECK(det(hankel(kNaturals, 3)) == 0);
  CHECK(hankel(kNaturals, 2) == Matrix{{1, 2}, {2, 3}});
}

TEST_CASE("sum, Hadamard product and shift") {
  CHECK(seq_add(kFib, RecSeq::d()).prefix(6) == ints({1, 2, 4, 6, 9, 13}));
  // Reference: squares of Fibonacci numbers.
  const RecSeq sq = had_prod(kFib, kFib);
  CHECK(sq.prefix(8) == ints({1, 1, 4, 9, 25, 64, 169, 441}));
  CHECK(sq.depth() == 3);
  CHECK(had_prod(RecSeq::geometric(2), RecSeq::geometric(3)) == RecSeq::geometric(6));
  CHECK(had_prod(kFib, RecSeq::one()) == kFib);
  CHECK(shift(kFib).prefix(4) == ints({1, 2, 3, 5}));
  CHECK(seq_sub(kFib, kFib) == RecSeq::zero());
  CHECK(scale(3, RecSeq::d()).prefix(3) == ints({0, 3, 6}));
}

TEST_CASE("coalgebra structure") {
  CHECK(counit(kFib) == 1);
  // Reference: inverse Hankel matrices computed by sympy.
  const auto d = comult(RecSeq::d());
  CHECK(d.k == 2);
  CHECK(d.coeffs == Matrix{{-2, 1}, {1, 0}});
  CHECK_FALSE(d.field_level);
  const auto f = comult(kFib);
  CHECK(f.coeffs == Matrix{{2, -1}, {-1, 1}});
  const auto g = comult(RecSeq::geometric(5));
  CHECK(g.coeffs == Matrix{{1}});
  CHECK(comult(RecSeq({3}, {2})).field_level);
  CHECK_THROWS_AS(comult(RecSeq::zero()), DomainError);

  CHECK(is_grouplike(RecSeq::geometric(-7)));
  CHECK_FALSE(is_grouplike(kFib));
  CHECK(is_primitive(RecSeq::d()));
  CHECK(is_primitive(scale(4, RecSeq::d())));
  CHECK_FALSE(is_primitive(kNaturals));
}

TEST_CASE("comultiplication reproduces the sequence") {
  // s_{m+n} = sum_ij c_ij s_{m+i} s_{n+j}
  test::Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const RecSeq s = test::random_recseq(rng, 4);
    if (max_hankel_rank(s) == 0) continue;
    const auto dec = comult(s);
    const auto pre = s.prefix(2 * dec.k + 8);
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n) {
        Scalar acc = 0;
        for (int i = 0; i < dec.k; ++i)
          for (int j = 0; j < dec.k; ++j) acc += dec.coeffs(i, j) * pre[static_cast<std::size_t>(m + i)] * pre[static_cast<std::size_t>(n + j)];
        CHECK(acc == pre[static_cast<std::size_t>(m + n)]);
      }
  }
}

TEST_CASE("random operations agree with termwise arithmetic") {
  test::Rng rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const RecSeq s = test::random_recseq(rng, 3);
    const RecSeq t = test::random_recseq(rng, 3);
    const auto ps = s.prefix(20);
    const auto pt = t.prefix(20);
    const auto sum = seq_add(s, t).prefix(20);
    const auto prod = had_prod(s, t).prefix(20);
    for (std::size_t i = 0; i < 20; ++i) {
      CHECK(sum[i] == ps[i] + pt[i]);
      CHECK(prod[i] == ps[i] * pt[i]);
    }
    CHECK(minimize(s).prefix(20) == ps);
    CHECK(minimize(s).depth() == max_hankel_rank(s));
  }
}
