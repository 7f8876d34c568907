#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linarr/arrangement.hpp"
#include "linarr/cyclo.hpp"
#include "linarr/graded.hpp"
#include "linarr/lattice.hpp"
#include "linarr/poly.hpp"
#include "linarr/spectrum.hpp"

namespace linarr {

/// The pencil of surfaces Y_s cut from X = {y^n + z^n = f} by x1 = s x0,
/// where f is the product of the lines of a bi-pencil.
struct PencilFamily {
  BiPencil bipencil;

  explicit PencilFamily(BiPencil b);

  std::size_t n() const noexcept { return bipencil.n(); }
  std::size_t p() const noexcept { return bipencil.p(); }
  std::size_t q() const noexcept { return bipencil.q(); }

  /// h(s) = prod (1 - lambda_i s).
  Rational h(const Rational& s) const;
};

/// A point of P^1 parametrizing the pencil; `infinite` is s = (0:1).
struct PencilParameter {
  bool infinite = false;
  Rational value;

  static PencilParameter at_infinity() { return {true, Rational(0)}; }
  static PencilParameter finite(Rational s) { return {false, std::move(s)}; }
  std::string to_string() const;

  friend bool operator==(const PencilParameter& a, const PencilParameter& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
};

/// y^n + z^n - prod(x0 - lambda_i x1) prod(x0 - mu_i x2) over {y,z,x0,x1,x2}.
Poly total_space_polynomial(const PencilFamily& family);
/// f_s over {y,z,x0,x2}.
Poly fiber_polynomial(const PencilFamily& family, const Rational& s);
/// f_inf over {y,z,x1,x2}.
Poly fiber_at_infinity(const PencilFamily& family);

/// Infinity first, then the roots 1/lambda_i of h in increasing order.
std::vector<PencilParameter> special_fibers(const PencilFamily& family);

Rational pick_generic_parameter(const PencilFamily& family);

/// A singular point, or a singular line given by two spanning points.
/// Coordinates are in P^4 with order (y:z:x0:x1:x2).
struct SingularComponent {
  std::string label;
  std::vector<std::vector<Rational>> span;
  std::string type;
};

struct SingularLocusReport {
  std::string surface;  // "X", "Y_s" or "Y_inf"
  std::vector<SingularComponent> components;
};

struct LocusSelector {
  enum class Kind { total_space, fiber, fiber_at_infinity };
  Kind kind = Kind::total_space;
  Rational s;
};

/// Lists the singular locus from the case analysis and checks exactly that
/// every listed point (and the midpoint of each listed line) annihilates the
/// gradient; throws internal otherwise. Completeness is not checked.
SingularLocusReport singular_locus(const PencilFamily& family, const LocusSelector& which);

/// (y:z:x0:x2) -> (eta y : eta z : x0 : x2) at the level of exponents.
struct MonodromyAction {
  unsigned order = 2;

  /// Phase k of eta^k after applying the action once to a monomial that
  /// already carries eta^phase.
  unsigned apply(const Exponents& e, unsigned phase = 0) const;
  /// h * yzx0x2 is invariant: a + b + 2 = 0 mod n.
  bool invariant_numerator(const Exponents& e) const;
};

struct InvariantCount {
  std::uint64_t count = 0;
  bool negative_degree = false;  // t n - 4 < 0
};

/// Monomials y^a z^b x0^c x2^d of degree t n - 4 with a + b = n - 2 and
/// a, b <= n - 2. Requires n >= 2 and t in {1, 2, 3}.
InvariantCount invariant_monomial_count(unsigned n, unsigned t);

/// (n - 1)^2.
std::uint64_t invariant_bound(unsigned n);

/// Nonnegative solutions of (n-1)^2 + (n-2) sum eps_i <= bound; returns the
/// zero vector of length n - 1 when it is the only one.
std::vector<unsigned> epsilon_solve(unsigned n, std::uint64_t bound);

struct AlexanderReport {
  BiPencil pencil;
  std::optional<Matrix3> change;  // present when detected from lines
  Rational s;
  Poly fiber{std::vector<std::string>{}};
  std::vector<GradedQuotientReport> invariant_dims;  // degrees n-4 (if >= 0), 2n-4
  std::vector<InvariantCount> counts;                // t = 1, 2, 3
  std::uint64_t bound = 0;
  MonodromyTable join;  // sp(y^n) * sp(z^n), degree 1
  unsigned fixed_part = 0;
  unsigned epsilon0 = 0;
  std::optional<std::vector<unsigned>> epsilon;  // absent for n = 2
  CycloPoly result;
};

AlexanderReport alexander_bipencil(const Arrangement& arrangement);
AlexanderReport alexander_bipencil(const BiPencil& bipencil);

struct ConjecturalReport {
  std::size_t beta2 = 0;
  std::size_t beta3 = 0;
  CycloPoly polynomial;
};

/// (t-1)^{n-1} Phi_3^{beta_3} (Phi_2 Phi_4)^{beta_2}.
ConjecturalReport conjectural_alexander(const Lattice& lattice);
ConjecturalReport conjectural_alexander(const Arrangement& arrangement);

}  // namespace linarr
