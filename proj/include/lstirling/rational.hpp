#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace lstirling {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always canonical: lowest terms, denominator > 0.
/// The universal scalar for lambda, r, x and all triangle entries.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", a plain (optionally signed) integer, or a decimal literal
/// like "0.5" (read exactly, so "0.1" -> 1/10). Throws ParseError.
Rational parse_rational(std::string_view text);

/// "p/q", or just "p" when the denominator is 1. Inverse of parse_rational
/// up to normalization; never emits decimals.
std::string format_rational(const Rational& q);

double to_double(const Rational& q);

/// Exact binary64 -> rational conversion (every finite double is rational).
Rational rational_from_double(double x);

/// q^e for integer e (negative e inverts; throws DomainError on 0^negative).
Rational rational_pow(const Rational& q, long e);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

}  // namespace lstirling
