#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace poincare {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p", "-p" or "p/q" into a canonical rational. Throws
// Error{InvalidArgument} on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical lowest-terms form with positive denominator; integers print
// without a denominator ("3", "-1/2").
std::string to_string(const Rational& value);

bool is_integral(const Rational& value);

// Least common multiple of the denominators (1 for an empty range).
Integer common_denominator(const std::vector<Rational>& values);

}  // namespace poincare
