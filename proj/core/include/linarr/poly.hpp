#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "linarr/rational.hpp"

namespace linarr {

using Exponents = std::vector<unsigned>;

unsigned total_degree(const Exponents& e);

/// Graded lexicographic order, larger monomials first: higher total degree,
/// then larger exponent on the earliest variable.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse polynomial over Q in a fixed, ordered set of variables. No zero
/// coefficients are stored.
class Poly {
 public:
  using Terms = std::map<Exponents, Rational, GrlexGreater>;

  explicit Poly(std::vector<std::string> variables);

  static Poly constant(std::vector<std::string> variables, const Rational& c);
  static Poly variable(std::vector<std::string> variables, std::size_t index);
  static Poly monomial(std::vector<std::string> variables, Exponents e, const Rational& c);

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  std::size_t variable_count() const noexcept { return variables_.size(); }
  std::optional<std::size_t> variable_index(std::string_view name) const;
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;

  void add_term(const Exponents& e, const Rational& c);

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  Poly operator-() const;
  Poly pow(unsigned exponent) const;
  /// Product with the monomial x^shift (coefficient 1).
  Poly shifted(const Exponents& shift) const;

  Poly derivative(std::size_t variable) const;

  /// Common weighted degree of all terms, or nullopt for zero or mixed
  /// polynomials. Empty weights mean all ones.
  std::optional<unsigned> weighted_degree(std::span<const unsigned> weights = {}) const;
  std::optional<unsigned> homogeneous_degree() const { return weighted_degree(); }

  Rational evaluate(std::span<const Rational> point) const;

  /// Grlex-descending terms, e.g. "y^4+z^4-x0^4+5*x0^3*x2-6*x0^2*x2^2".
  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.variables_ == b.variables_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_ring(const Poly& other) const;

  std::vector<std::string> variables_;
  Terms terms_;
};

/// Grammar: sums and differences of products of factors; factors are
/// rational literals, declared variables, parenthesized expressions, each
/// optionally raised to a nonnegative integer power; division only by
/// nonzero constants.
Poly parse_poly(std::string_view text, std::vector<std::string> variables);

/// Partial derivatives in variable order. Throws for constant input.
std::vector<Poly> jacobian_generators(const Poly& f);

}  // namespace linarr
