#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace degloci {

/// Exact rational number. GMP keeps it canonical: gcd(num, den) = 1, den > 0.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "n" or "n/d" (optional leading sign). Throws ParseError.
Rational parse_rational(std::string_view text);

/// "n" when the denominator is 1, "n/d" otherwise.
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Exact power with integer exponent (negative allowed when q != 0).
Rational pow(const Rational& q, long e);

}  // namespace degloci
