#include "wittkit/scalar.hpp"

#include <algorithm>

#include "wittkit/errors.hpp"

namespace wk {

bool all_integers(const std::vector<Scalar>& xs) {
  return std::all_of(xs.begin(), xs.end(), [](const Scalar& x) { return is_integer(x); });
}

Ring ring_of(const std::vector<Scalar>& xs) { return all_integers(xs) ? Ring::Z : Ring::Q; }

std::string_view ring_name(Ring r) { return r == Ring::Z ? "Z" : "Q"; }

Ring parse_ring(std::string_view s) {
  if (s == "Z") return Ring::Z;
  if (s == "Q") return Ring::Q;
  throw DomainError("ring must be \"Z\" or \"Q\", got \"" + std::string(s) + "\"");
}

std::string to_string(const Scalar& x) { return x.get_str(); }

namespace {

bool valid_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Scalar parse_scalar(std::string_view s) {
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!valid_integer_literal(num) || !valid_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw DomainError("malformed scalar \"" + std::string(s) + "\"");
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  Integer p(n, 10);
  Integer q(std::string(den), 10);
  if (q == 0) throw DomainError("zero denominator in \"" + std::string(s) + "\"");
  Scalar r(p, q);
  r.canonicalize();
  return r;
}

Scalar pow(const Scalar& base, unsigned long e) {
  Scalar r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  r.canonicalize();
  return r;
}

Integer pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace wk
