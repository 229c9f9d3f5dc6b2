#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace circnet {

// All boundary data is computed in exact rational arithmetic; floating point
// is never used for sign decisions anywhere in the library.
using Int = mpz_class;
using Rat = mpq_class;

/// Builds a canonical rational from a numerator/denominator pair.
Rat make_rat(long numerator, long denominator = 1);

/// Parses "p/q", plain integers, or decimal literals ("0.25" -> 1/4, exact,
/// via the literal digits -- never through binary floating point).
Rat parse_rational(std::string_view text);

/// Lowest terms with positive denominator; integers print without "/1".
std::string format_rational(const Rat& value);

/// -1, 0 or +1.
int sign(const Rat& value);

}  // namespace circnet
