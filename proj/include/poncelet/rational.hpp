#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace poncelet {

/// Exact rational number. GMP keeps every mpq_class in lowest terms with a
/// positive denominator, zero being 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "a", "a/b" or a decimal such as "-0.125" / "1.5e-3" exactly; a
/// decimal becomes a fraction with a power-of-ten denominator.
Rational parse_rational(std::string_view text);

/// "num/den", or just "num" when the denominator is one.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

int sign(const Rational& r);

Rational pow(const Rational& base, unsigned exponent);

/// Exact binary value of a finite double.
Rational from_double(double value);

}  // namespace poncelet
