#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace orbk {

/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q" in lowest terms, or "p" when the value is integral.
std::string to_string(const Rational& value);

/// Parses "p" or "p/q" (optional leading '-'); throws Error(SyntaxError).
Rational parse_rational(std::string_view text);

Integer floor(const Rational& value);

/// value - floor(value), in [0, 1).
Rational frac(const Rational& value);

bool is_integral(const Rational& value);

std::size_t hash_value(const Rational& value) noexcept;

}  // namespace orbk
