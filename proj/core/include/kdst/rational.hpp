#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace kdst {

// Exact rational arithmetic on the whole solver path. Cut-capacity
// comparisons ("capacity < l+1") and LP pivots are decided exactly, so no
// floating point anywhere between input parsing and output formatting.
using Rational = mpq_class;

// Parses a decimal literal ("3", "0.25", "10.", "-1.5") into an exact
// rational. Returns nullopt on malformed input; sign handling is left to
// the caller so that "negative weight" can be reported as its own error.
std::optional<Rational> parse_decimal(const std::string& text);

// "p/q", or plain "p" when the denominator is 1.
std::string to_fraction_string(const Rational& value);

// Fixed-point decimal with `digits` fractional digits, rounding half away
// from zero. Display only; never fed back into arithmetic.
std::string to_decimal_string(const Rational& value, int digits = 6);

} // namespace kdst
