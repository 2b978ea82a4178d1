#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace prym {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "n", "-n" or "p/q". Decimal points and exponents are rejected so
/// that every length stays exact. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical form: "n" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// 2^exponent as an exact rational; negative exponents give 1/2^-exponent.
Rational pow2(long exponent);

}  // namespace prym
