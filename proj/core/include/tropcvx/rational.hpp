#pragma once

// Exact rational scalars. Everything in the library is computed over Q; there
// is no floating point in any decision path.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace tropcvx {

using Rational = mpq_class;
using Integer = mpz_class;
using Vec = std::vector<Rational>;

/// Parses "p/q", "-p/q" or an integer string. Throws InvalidInput on garbage
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text, or just "p" when the denominator is 1.
std::string to_string(const Rational& q);

std::string to_string(const Vec& v);

inline Rational rabs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// Scales v by a positive factor so that its entries are coprime integers.
/// The zero vector is returned unchanged.
Vec primitive_integer(const Vec& v);

/// Least common multiple of the denominators of v.
Integer lcm_of_denominators(const Vec& v);

}  // namespace tropcvx
