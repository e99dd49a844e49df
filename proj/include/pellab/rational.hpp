#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace pellab {

/// Exact rational scalar. GMP keeps num/den coprime with den > 0 after every
/// arithmetic operation; values built from raw parts must be canonicalized.
using Rat = mpq_class;
using BigInt = mpz_class;

/// Parses "a" or "a/b" with an optional leading sign. Throws Error(Parse).
Rat parse_rational(std::string_view text);

/// "num/den" with den always present (lossless coefficient form).
std::string to_fraction_string(const Rat& value);

/// Shortest form: "num" when den == 1, otherwise "num/den".
std::string to_short_string(const Rat& value);

/// Rational r with r^m == value, or nullopt. Even m requires value >= 0 and
/// returns the non-negative root.
std::optional<Rat> rational_root(const Rat& value, unsigned long m);

}  // namespace pellab
