#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hopfdepth {

/// Arbitrary-precision rational. GMP keeps results canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// "num/den" with the denominator always present, e.g. "-3/1".
std::string to_fraction_string(const Rational& q);

/// Accepts "n", "n/d" (d may be negative; the result is canonicalized).
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace hopfdepth
