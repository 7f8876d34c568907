#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linarr/linalg.hpp"
#include "linarr/poly.hpp"

namespace linarr {

/// Monomials of the given weighted degree in grlex-descending order. Empty
/// weights mean the standard grading.
std::vector<Exponents> monomials_of_degree(std::size_t variables, unsigned degree,
                                           std::span<const unsigned> weights = {});

/// Restricts a graded piece to monomials whose character
/// sum_i weights[i] * e[i] is congruent to `residue` mod `modulus`.
struct CharacterFilter {
  std::vector<unsigned> weights;
  unsigned modulus = 1;
  unsigned residue = 0;

  unsigned character(const Exponents& e) const;
};

struct GradedQuotientOptions {
  std::vector<unsigned> weights;  // empty: standard grading
  std::optional<CharacterFilter> filter;
  std::uint64_t check_prime = kDefaultCheckPrime;
};

struct GradedQuotientReport {
  std::string f;
  unsigned k = 0;
  std::size_t dim_rk = 0;
  std::size_t rank = 0;
  std::size_t dim_quotient = 0;
  std::uint64_t check_prime = 0;
  std::size_t check_rank = 0;
};

/// Dimension of the degree-k piece of R / (df/dv_1, ..., df/dv_n). The
/// rank is that of the span of m * df/dv_i over monomials m of the
/// complementary degree, expressed in the monomial basis of R_k.
GradedQuotientReport graded_quotient_dim(const Poly& f, unsigned k,
                                         const GradedQuotientOptions& options = {});

}  // namespace linarr
