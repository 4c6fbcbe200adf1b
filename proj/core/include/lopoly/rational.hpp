#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lopoly {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p", or "p/q" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// Converts to int64, throwing std::overflow_error when the value does not fit.
std::int64_t to_int64(const Integer& z);

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Overflow-checked 64-bit helpers used on integer fast paths.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace lopoly
