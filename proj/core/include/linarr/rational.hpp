#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace linarr {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "n", "-n" or "n/d" (decimal integers, d != 0). Surrounding
/// whitespace is rejected; the result is canonicalized.
Rational parse_rational(std::string_view text);

/// Always "num/den", including "/1" for integers.
std::string to_fraction_string(const Rational& value);

/// Fractional part in [0, 1).
Rational frac(const Rational& value);

bool is_prime(std::uint64_t value);

/// -1, 0 or 1.
inline int compare(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  return (c > 0) - (c < 0);
}

}  // namespace linarr
