#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tph {

/// Exact rational scalar. GMP keeps values canonical (lowest terms, positive
/// denominator) as long as every construction goes through make_rational /
/// parse_rational or arithmetic.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// Strict parser for "[-+]?digits" or "[-+]?digits/digits". A zero denominator,
/// whitespace, or a sign on the denominator is a ParseError. Non-reduced input
/// such as "2/4" is accepted and canonicalized.
Rational parse_rational(std::string_view text);

/// Canonical form: lowest terms, sign on the numerator only, integers without "/1".
std::string format_rational(const Rational& value);

} // namespace tph
