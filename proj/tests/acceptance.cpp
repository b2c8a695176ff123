// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Usage: acceptance <golden-dir>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "eigen_oracle.hpp"
#include "support.hpp"
#include "wittkit/dispatch.hpp"
#include "wittkit/zetapoly.hpp"

using namespace wk;
using wk::test::Rng;
using wk::test::uniform;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

/// Collects the first failure with a description.
class Check {
 public:
  void expect(bool cond, const std::string& what) {
    ++count_;
    if (!cond && ok_) {
      ok_ = false;
      first_failure_ = what;
    }
  }
  bool ok() const { return ok_; }
  long count() const { return count_; }
  Outcome outcome(const std::string& detail) const { return {ok_, ok_ ? detail : "first failure: " + first_failure_}; }

 private:
  bool ok_ = true;
  long count_ = 0;
  std::string first_failure_;
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char timing[96];
  if (limit_s > 0) {
    std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", secs, limit_s);
    if (secs >= limit_s) {
      out.ok = false;
      out.detail += " (too slow)";
    }
  } else {
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
  }
  if (!out.ok) ++failures;
  std::printf("%s  [%2d] %s: %s [%s]\n", out.ok ? "PASS" : "FAIL", id, title, out.detail.c_str(), timing);
  std::fflush(stdout);
}

std::string str(long x) { return std::to_string(x); }

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path golden_dir = argc > 1 ? argv[1] : "tests/golden";

  criterion(1, "Teichmueller rule at order 32, a, b in [-20, 20]", 5, [] {
    Check c;
    std::vector<WittElement> teich;
    for (long a = -20; a <= 20; ++a) teich.push_back(WittElement::teichmuller(a, 32));
    for (long a = -20; a <= 20; ++a)
      for (long b = -20; b <= 20; ++b)
        c.expect(witt_mul(teich[static_cast<std::size_t>(a + 20)], teich[static_cast<std::size_t>(b + 20)]) == WittElement::teichmuller(a * b, 32),
                 "a=" + str(a) + " b=" + str(b));
    return c.outcome(str(c.count()) + " products exact");
  });

  criterion(2, "worked example s = (1, 2, 3, ...) end to end", 1, [] {
    Check c;
    // The naturals presented through the non-minimal annihilator (x - 1)^3.
    const RecSeq s({3, -3, 1}, {1, 2, 3});
    c.expect(s.depth() == 3 && s.prefix(6) == test::ints({1, 2, 3, 4, 5, 6}), "sequence");
    c.expect(det(hankel(s, 2)) == -1 && det(hankel(s, 3)) == 0, "Hankel determinants (-1, 0)");
    const RecSeq m = minimize(s);
    c.expect(m.annihilator() == test::poly({1, -2, 1}), "minimal recurrence x^2 - 2x + 1");
    const LinSys sys = minimal_realize(s);
    c.expect(sys.M() == Matrix{{0, -1}, {1, 2}}, "M = [[0,-1],[1,2]]");
    c.expect(sys.v() == test::ints({1, 0}), "v = (1, 0)");
    c.expect(sys.c() == test::ints({1, 2}), "c = (1, 2)");
    c.expect(is_split(sys), "classification split");
    const TransferFunction t = transfer(sys);
    c.expect(t.num() == test::poly({0, 1}) && t.den() == test::poly({1, -2, 1}), "transfer z/(z-1)^2");
    const auto li = polylog(2, 32);
    const auto expansion = t.laurent(32);
    bool same = true;
    for (int k = 0; k < 32; ++k) same = same && expansion[static_cast<std::size_t>(k)] == li[k + 1];
    c.expect(same, "transfer expansion equals Li_{-1} coefficients");
    return c.outcome("Hankel dets (-1, 0), x^2-2x+1, M/v/c, split, z/(z-1)^2, Li_{-1} through 32 terms");
  });

  criterion(3, "sigma_eval(T, m) = (1-t)/(1-(m+1)t) to order 16, m in [0, 10]", 0, [] {
    Check c;
    for (long m = 0; m <= 10; ++m) {
      const WittElement s = sigma_eval(GrothClass::torus(), m, 16);
      const RatFunc closed(test::poly({1, -1}), Poly({Scalar(1), Scalar(-(m + 1))}));
      c.expect(s == WittElement::from_ratfunc(closed, 16), "closed form m=" + str(m));
      c.expect(s[1] == m && s[2] == m * (m + 1), "leading terms 1 + mt + m(m+1)t^2, m=" + str(m));
    }
    return c.outcome("11 values of m exact");
  });

  criterion(4, "b_m(T) = (1, m, 2m-1, 3m-2, ...), delta = 1, m in [1, 10]", 0, [] {
    Check c;
    for (long m = 1; m <= 10; ++m) {
      const auto p = biring_measure(GrothClass::torus(), Measure{m, 1}).prefix(10);
      for (long n = 0; n < 10; ++n) c.expect(p[static_cast<std::size_t>(n)] == n * m - (n - 1), "m=" + str(m) + " n=" + str(n));
    }
    return c.outcome("10 terms for each m exact");
  });

  criterion(5, "ghost_k(f1_zeta(X, m)) = #X(F_{1^{mk}})", 30, [] {
    Check c;
    Rng rng(5005);
    for (int trial = 0; trial < 200; ++trial) {
      const GrothClass x = test::random_effective(rng, 5, 9);
      const long m = uniform(rng, 1, 4);
      const GhostVector g = ghost(f1_zeta(x, m, 16).zeta);
      for (int k = 1; k <= 16; ++k) c.expect(g[k] == count_points(x, m * k), "trial " + str(trial) + " k=" + str(k));
    }
    return c.outcome("200 random effective classes (deg <= 5, coeffs <= 9), m <= 4, k <= 16");
  });

  criterion(6, "non-rationality of f1_zeta(T, 1) versus rational zeta_mu(T, m)", 0, [] {
    Check c;
    const auto r = is_rational_up_to(f1_zeta(GrothClass::torus(), 1, 32).zeta);
    for (int k = 1; k < 8; ++k) c.expect(r.ranks[static_cast<std::size_t>(k)] > r.ranks[static_cast<std::size_t>(k - 1)], "rank increase at size " + str(k + 1));
    c.expect(!r.stabilized, "f1_zeta must not stabilize");
    std::string ranks;
    for (std::size_t k = 0; k < 8; ++k) ranks += (k ? "," : "") + std::to_string(r.ranks[k]);
    for (long m = 0; m <= 10; ++m) {
      const auto z = is_rational_up_to(zeta_mu(GrothClass::torus(), Measure{m, 1}, 32));
      c.expect(z.stabilized && z.stable_rank <= 2, "zeta_mu stabilizes, m=" + str(m));
      c.expect(z.witness && *z.witness == RatFunc(test::poly({1, -1}), Poly({Scalar(1), Scalar(-(m + 1))})), "witness m=" + str(m));
    }
    return c.outcome("ranks " + ranks + " not stabilized; zeta_mu(T, m) rank <= 2 with exact witness for m in [0, 10]");
  });

  criterion(7, "homomorphism suite, 1000 random cases each at order 24", 120, [] {
    Check c;
    Rng rng(7007);
    const int order = 24;
    const int cases = 1000;
    for (int i = 0; i < cases; ++i) {
      const auto a = test::random_witt(rng, order, 2);
      const auto b = test::random_witt(rng, order, 2);
      const auto d = test::random_witt(rng, order, 2);
      const WittElement ab = witt_mul(a, b);
      c.expect(ab == witt_mul(b, a), "Witt commutativity");
      c.expect(witt_mul(ab, d) == witt_mul(a, witt_mul(b, d)), "Witt associativity");
      c.expect(witt_mul(a, witt_add(b, d)) == witt_add(ab, witt_mul(a, d)), "Witt distributivity");
      c.expect(witt_mul(a, WittElement::teichmuller(1, order)) == a, "Witt unit");
      c.expect(witt_add(a, witt_neg(a)) == WittElement::one(order), "Witt additive inverse");
      c.expect(ghost(witt_add(a, b)) == ghost(a) + ghost(b), "ghost additivity");
      c.expect(ghost(ab) == ghost(a) * ghost(b), "ghost multiplicativity");
    }
    for (int i = 0; i < cases; ++i) {
      const EndoClass a(test::random_matrix(rng, static_cast<int>(uniform(rng, 1, 3)), -3, 3));
      const EndoClass b(test::random_matrix(rng, static_cast<int>(uniform(rng, 1, 3)), -3, 3));
      const WittElement la = L_map(a, order);
      const WittElement lb = L_map(b, order);
      c.expect(L_map(endo_add(a, b), order) == witt_add(la, lb), "L_map of direct sum");
      c.expect(L_map(endo_mul(a, b), order) == witt_mul(la, lb), "L_map of tensor product");
      const RecSeq ta = ghost_trace(a);
      const RecSeq tb = ghost_trace(b);
      c.expect(ghost_trace(endo_add(a, b)) == seq_add(ta, tb), "ghost_trace of direct sum");
      c.expect(ghost_trace(endo_mul(a, b)) == had_prod(ta, tb), "ghost_trace of tensor product");
      const GhostVector g = ghost(la);
      const auto terms = ta.prefix(order + 1);
      bool square = true;
      for (int k = 1; k <= order; ++k) square = square && g[k] == terms[static_cast<std::size_t>(k)];
      c.expect(square, "ghost o L_map = i o ghost_trace");
    }
    for (int i = 0; i < cases; ++i) {
      const LinSys a = test::random_system(rng, 3);
      const LinSys b = test::random_system(rng, 3);
      c.expect(bat(direct_sum(a, b)) == seq_add(bat(a), bat(b)), "bat of direct sum");
      c.expect(bat(tensor(a, b)) == had_prod(bat(a), bat(b)), "bat of tensor product");
    }
    return c.outcome(str(c.count()) + " identities exact");
  });

  criterion(8, "realization theory properties, 200 random cases each", 0, [] {
    Check c;
    Rng rng(8008);
    for (int i = 0; i < 200; ++i) {
      const RecSeq s = test::random_recseq(rng, 5);
      const LinSys r = realize(s);
      c.expect(bat(r) == s, "bat o realize = id");
      const int rank = max_hankel_rank(s);
      if (rank > 0) {
        const LinSys m = minimal_realize(s);
        c.expect(m.dim() == rank && bat(m) == s, "minimal dimension = Hankel rank");
      } else {
        c.expect(minimize(s).depth() == 0, "zero sequence has depth 0");
      }
      const Scalar d = det(hankel(s, s.depth()));
      c.expect(is_canonical(r) == (d != 0), "canonical iff det H_r != 0");
      c.expect(is_split(r) == (d == 1 || d == -1), "split iff det H_r = +-1");
    }
    for (int i = 0; i < 200; ++i) {
      const int n = static_cast<int>(uniform(rng, 1, 5));
      auto den = test::random_vector(rng, n + 1, -4, 4);
      den.back() = 1;
      const TransferFunction t(Poly(test::random_vector(rng, static_cast<int>(uniform(rng, 1, n)), -4, 4)), Poly(den));
      c.expect(transfer(realize_transfer(t)) == t, "transfer o realize_transfer = id");
    }
    return c.outcome(str(c.count()) + " checks exact");
  });

  criterion(9, "zeta polynomials and the critical line", 10, [] {
    Check c;
    const auto a = zeta_poly(test::poly({1, 1}));
    c.expect(a.Z == test::poly({1, -2}), "U = 1 + z gives Z = 1 - 2z");
    c.expect(a.roots.size() == 1 && a.roots[0].re == 0.5 && a.roots[0].im == 0.0, "root exactly 1/2");
    const auto b = zeta_poly(test::poly({1, 0, 1}));
    c.expect(b.Z == test::poly({1, -1, 1}), "U = 1 + z^2 gives Z = z^2 - z + 1");
    c.expect(b.functional_ok, "functional equation for 1 + z^2");
    bool near = b.roots.size() == 2;
    for (const auto& r : b.roots) near = near && std::abs(r.re - 0.5) < 1e-9;
    c.expect(near, "roots within 1e-9 of Re = 1/2");
    Rng rng(9009);
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
      Poly u = Poly::constant(1);
      const long target = uniform(rng, 1, 8);
      while (u.degree() < target) {
        const int n = static_cast<int>(uniform(rng, 2, 30));
        const Poly phi = cyclotomic(n);
        if (u.degree() + phi.degree() <= 8) u = u * phi;
        else if (u.degree() + 1 <= 8) u = u * cyclotomic(2);
      }
      const auto z = zeta_poly(u);
      c.expect(z.functional_ok, "functional equation for random cyclotomic product " + std::to_string(i));
      c.expect(z.max_critical_deviation < 1e-6, "critical deviation for random cyclotomic product " + std::to_string(i));
      worst = std::max(worst, z.max_critical_deviation);
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "100 random cyclotomic numerators, max deviation %.3g", worst);
    return c.outcome(buf);
  });

  criterion(10, "quasi-unipotence verdicts", 0, [] {
    Check c;
    for (int n = 1; n <= 20; ++n) c.expect(is_quasi_unipotent(EndoClass(test::companion_of(cyclotomic(n)))), "Phi_" + str(n));
    c.expect(!is_quasi_unipotent(EndoClass(test::companion_of(test::poly({-1, -1, 1})))), "x^2 - x - 1");
    c.expect(!is_quasi_unipotent(EndoClass(test::companion_of(test::poly({-2, 1})))), "x - 2");
    c.expect(!is_quasi_unipotent(EndoClass(test::companion_of(test::poly({-3, 0, 1})))), "x^2 - 3");
    Rng rng(1010);
    int agreed = 0;
    int positives = 0;
    int skipped = 0;
    while (agreed < 200) {
      const int n = static_cast<int>(uniform(rng, 1, 5));
      const Matrix m = agreed % 2 == 0 ? test::random_quasi_unipotent(rng, n) : test::random_matrix(rng, n, -3, 3);
      const auto oracle = test::eigen_quasi_unipotent(m);
      if (!oracle) {
        ++skipped;
        continue;
      }
      const bool exact = is_quasi_unipotent(EndoClass(m));
      c.expect(exact == *oracle, "random matrix " + str(agreed));
      positives += exact ? 1 : 0;
      ++agreed;
    }
    return c.outcome("Phi_1..Phi_20 true, 3 negatives false, 200 random matrices agree with eigenvalues (" + str(positives) +
                     " quasi-unipotent, " + str(skipped) + " numerically ambiguous redrawn)");
  });

  criterion(11, "Frobenius and Verschiebung ghost relations", 0, [] {
    Check c;
    Rng rng(1111);
    for (int trial = 0; trial < 40; ++trial) {
      const EndoClass a(test::random_matrix(rng, static_cast<int>(uniform(rng, 1, 4)), -3, 3));
      const GhostVector g = ghost(L_map(a, 100));
      for (int n = 1; n <= 5; ++n) {
        const GhostVector gf = ghost(L_map(frobenius(a, n), 20));
        const GhostVector gv = ghost(L_map(verschiebung(a, n), 20));
        for (int k = 1; k <= 20; ++k) {
          c.expect(gf[k] == g[n * k], "Fr trial " + str(trial) + " n=" + str(n) + " k=" + str(k));
          c.expect(gv[k] == (k % n == 0 ? Scalar(n * g[k / n]) : Scalar(0)), "V trial " + str(trial) + " n=" + str(n) + " k=" + str(k));
        }
      }
    }
    return c.outcome("40 random matrices up to 4x4, n <= 5, k <= 20");
  });

  criterion(12, "CLI golden files replay byte-identically", 0, [&golden_dir] {
    Check c;
    int files = 0;
    for (const char* name : {"teichmuller", "worked_example", "lm_expansion", "zeta_polynomials"}) {
      std::ifstream req(golden_dir / (std::string(name) + ".ndjson"));
      std::ifstream exp(golden_dir / (std::string(name) + ".expected"));
      c.expect(req && exp, std::string("missing golden file ") + name);
      if (!req || !exp) continue;
      std::ostringstream expected;
      expected << exp.rdbuf();
      std::ostringstream actual;
      c.expect(batch(req, actual), std::string("all requests ok in ") + name);
      c.expect(actual.str() == expected.str(), std::string("bytes differ in ") + name);
      ++files;
    }
    return c.outcome(str(files) + " golden files (criteria 1-3 and 9)");
  });

  std::printf("%s: %d of 12 criteria failed\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures ? 1 : 0;
}
