#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace equihodge {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (no floating point). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical "p" or "p/q" form.
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace equihodge
