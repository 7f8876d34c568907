#pragma once

#include <map>
#include <string>
#include <vector>

#include "linarr/rational.hpp"

namespace linarr {

/// Integer polynomial in t, coefficients in ascending degree.
using IntPoly = std::vector<Integer>;

IntPoly poly_multiply(const IntPoly& a, const IntPoly& b);
/// Exact division by a monic divisor; throws internal on a remainder.
IntPoly poly_divide_exact(const IntPoly& dividend, const IntPoly& divisor);

/// The k-th cyclotomic polynomial, k >= 1.
IntPoly cyclotomic_polynomial(unsigned k);

/// (t - 1)^{r - 1} * prod_{1 < k | d} Phi_k(t)^{e_k}.
struct CycloPoly {
  unsigned d = 0;
  unsigned trivial_exponent = 0;       // r - 1
  std::map<unsigned, unsigned> cyclotomic;  // k -> e_k, only nonzero e_k

  bool trivial_part_only() const noexcept { return cyclotomic.empty(); }
  IntPoly expand() const;
  /// e.g. "(t-1)^5*Phi_3(t)"; "1" for the constant polynomial.
  std::string factored_string() const;

  friend bool operator==(const CycloPoly& a, const CycloPoly& b) {
    return a.trivial_exponent == b.trivial_exponent && a.cyclotomic == b.cyclotomic;
  }
};

/// Throws invalid_argument when a key does not divide d, is <= 1, or r < 1.
CycloPoly generic_alexander_shape(unsigned d, unsigned r, const std::map<unsigned, unsigned>& e);

std::string to_string(const IntPoly& p);

}  // namespace linarr
