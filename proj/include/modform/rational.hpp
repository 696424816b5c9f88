#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace modform {

/// Exact rational number. GMP keeps it canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

/// Parses "a/b", "a" or "-a/b". Throws Error{ParseError} on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Always "num/den", also for integers ("240/1").
std::string format_rational(const Rational& x);

bool is_integer(const Rational& x);

/// Largest integer <= x.
Integer floor_of(const Rational& x);

/// Narrowing conversion for small integral values; throws when x is not an
/// integer or does not fit.
long to_long(const Rational& x);

}  // namespace modform
