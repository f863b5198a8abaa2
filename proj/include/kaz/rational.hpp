#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace kaz {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "p", "-p", "p/q". Throws UserError on anything else or q = 0.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);
Integer floor(const Rational& q);
Integer ceil(const Rational& q);
Rational factorial(unsigned n);
Rational power(const Rational& base, unsigned exponent);

/// Converts to int64, throwing UserError when the value does not fit.
std::int64_t to_int64(const Integer& z);

}  // namespace kaz
