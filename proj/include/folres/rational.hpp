#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace folres {

/// Exact rational scalar. GMP keeps it canonical: gcd(num, den) = 1, den > 0.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" with decimal integers; throws SyntaxError otherwise.
Rational parse_rational(std::string_view text);

/// Renders as "p" or "p/q".
std::string to_string(const Rational& value);

}  // namespace folres
