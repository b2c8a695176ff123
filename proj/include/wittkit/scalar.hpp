#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wk {

/// Exact scalar. GMP keeps rationals canonical: lowest terms, positive
/// denominator. An integer is a rational with denominator 1.
using Scalar = mpq_class;
using Integer = mpz_class;

/// Base ring tag carried by containers.
enum class Ring { Z, Q };

inline bool is_integer(const Scalar& x) { return x.get_den() == 1; }

bool all_integers(const std::vector<Scalar>& xs);

/// Ring::Z if every entry is integral, otherwise Ring::Q.
Ring ring_of(const std::vector<Scalar>& xs);

inline Ring join(Ring a, Ring b) { return (a == Ring::Z && b == Ring::Z) ? Ring::Z : Ring::Q; }

std::string_view ring_name(Ring r);
Ring parse_ring(std::string_view s);

/// "p" or "p/q".
std::string to_string(const Scalar& x);

/// Accepts "p", "-p", "p/q". Throws DomainError on malformed input or zero denominator.
Scalar parse_scalar(std::string_view s);

Scalar pow(const Scalar& base, unsigned long e);
Integer pow(const Integer& base, unsigned long e);

}  // namespace wk
