#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace eqlines {

/// Exact rational scalar. GMP keeps every value canonical (lowest terms,
/// positive denominator) as long as it is built through the helpers below
/// or through arithmetic on canonical operands.
using Rational = mpq_class;
using RatVector = std::vector<Rational>;
using Integer = mpz_class;

/// Parses "p/q" or "p" (optional leading sign, decimal digits only).
/// Throws ParseError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers print without the "/1".
std::string to_string(const Rational& value);

Rational make_rational(long numerator, long denominator = 1);

/// Least common multiple of the denominators.
Integer common_denominator(const RatVector& values);

}  // namespace eqlines
