#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace enriques {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "p" or "-p/q". Throws Error(invalid_input) on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when integral).
std::string to_string(const Rational& q);

/// Parses a comma-separated list of rationals, e.g. "1/3,1/3,1/4".
std::vector<Rational> parse_rational_list(std::string_view text);

/// Least common multiple of all denominators (1 for an empty span).
Integer common_denominator(std::span<const Rational> values);

bool fits_int64(const Integer& z);
std::int64_t to_int64(const Integer& z);

}  // namespace enriques
