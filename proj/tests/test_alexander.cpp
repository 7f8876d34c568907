#include <gtest/gtest.h>

#include <random>

#include "linarr/alexander.hpp"
#include "linarr/error.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace linarr {
namespace {

Rational q(long num, long den) {
  Rational r{Integer{num}, Integer{den}};
  r.canonicalize();
  return r;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::internal;
}

const BiPencil kExample = BiPencil::make({1, -1}, {2, 3});

TEST(Fibers, Polynomials) {
  const PencilFamily family(kExample);
  EXPECT_EQ(fiber_polynomial(family, Rational(0)).to_string(), "y^4+z^4-x0^4+5*x0^3*x2-6*x0^2*x2^2");
  EXPECT_EQ(fiber_polynomial(family, Rational(0)).variables(),
            (std::vector<std::string>{"y", "z", "x0", "x2"}));
  EXPECT_EQ(fiber_at_infinity(family).variables(), (std::vector<std::string>{"y", "z", "x1", "x2"}));
  EXPECT_EQ(fiber_at_infinity(family).homogeneous_degree(), 4u);
  EXPECT_EQ(total_space_polynomial(family).variable_count(), 5u);
  EXPECT_EQ(family.h(Rational(1)), Rational(0));
  EXPECT_EQ(family.h(Rational(2)), Rational(-3));
}

TEST(Fibers, SpecialParameters) {
  const auto special = special_fibers(PencilFamily(BiPencil::make({2, q(1, 3), -1}, {5})));
  ASSERT_EQ(special.size(), 4u);
  EXPECT_TRUE(special[0].infinite);
  EXPECT_EQ(special[1], PencilParameter::finite(Rational(-1)));
  EXPECT_EQ(special[2], PencilParameter::finite(q(1, 2)));
  EXPECT_EQ(special[3], PencilParameter::finite(Rational(3)));
  EXPECT_EQ(special[2].to_string(), "1/2");
  EXPECT_EQ(special[0].to_string(), "inf");
  // A zero lambda contributes no finite root.
  EXPECT_EQ(special_fibers(PencilFamily(BiPencil::make({0, 1}, {2}))).size(), 2u);
}

TEST(SingularLocus, TotalSpaceOfTheExample) {
  const auto report = singular_locus(PencilFamily(kExample), {});
  EXPECT_EQ(report.surface, "X");
  // P_p, P_q and one double point per (lambda, mu) pair.
  ASSERT_EQ(report.components.size(), 6u);
  EXPECT_EQ(report.components[0].label, "P_p");
  EXPECT_EQ(report.components[2].label, "D(0,2)");
  EXPECT_EQ(report.components[2].span.front(),
            (std::vector<Rational>{0, 0, 1, 1, q(1, 2)}));
  for (const auto& c : report.components) EXPECT_EQ(c.type, "y^4+z^4-v^2-w^2");
}

TEST(SingularLocus, Fibers) {
  const PencilFamily family(kExample);
  LocusSelector special{LocusSelector::Kind::fiber, Rational(1)};
  const auto line = singular_locus(family, special);
  ASSERT_EQ(line.components.size(), 1u);
  EXPECT_EQ(line.components[0].label, "L_s");
  EXPECT_EQ(line.components[0].span.size(), 2u);

  const auto generic = singular_locus(family, {LocusSelector::Kind::fiber, Rational(0)});
  ASSERT_EQ(generic.components.size(), 1u);
  EXPECT_EQ(generic.components[0].label, "P_p");

  const auto infinity = singular_locus(family, {LocusSelector::Kind::fiber_at_infinity, Rational(0)});
  EXPECT_EQ(infinity.surface, "Y_inf");
  EXPECT_EQ(infinity.components.size(), 2u);

  const PencilFamily simple(BiPencil::make({1}, {2}));
  EXPECT_TRUE(singular_locus(simple, {LocusSelector::Kind::fiber, Rational(0)}).components.empty());
}

TEST(SingularLocus, RandomFamiliesPassTheGradientCheck) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t q_ = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const std::size_t p_ = std::uniform_int_distribution<std::size_t>(q_, 4)(rng);
    const PencilFamily family(testing::random_bipencil(rng, p_, q_));
    EXPECT_NO_THROW(singular_locus(family, {}));
    EXPECT_NO_THROW(singular_locus(family, {LocusSelector::Kind::fiber_at_infinity, Rational(0)}));
    for (const auto& s : special_fibers(family)) {
      if (!s.infinite) {
        EXPECT_NO_THROW(singular_locus(family, {LocusSelector::Kind::fiber, s.value}));
      }
    }
  }
}

TEST(Invariants, CountsMatchEnumeration) {
  for (unsigned n = 2; n <= 64; ++n) {
    for (unsigned t = 1; t <= 3; ++t) {
      const auto c = invariant_monomial_count(n, t);
      EXPECT_EQ(c.count, oracle::invariant_monomials(n, t)) << n << " " << t;
      EXPECT_EQ(c.negative_degree, t * n < 4);
      const std::int64_t closed = static_cast<std::int64_t>(n - 1) * ((t - 1) * static_cast<std::int64_t>(n) - 1);
      EXPECT_EQ(static_cast<std::int64_t>(c.count), std::max<std::int64_t>(closed, 0));
    }
    EXPECT_EQ(invariant_bound(n), static_cast<std::uint64_t>(n - 1) * (n - 1));
  }
  EXPECT_EQ(kind_of([] { invariant_monomial_count(1, 2); }), ErrorKind::invalid_argument);
  EXPECT_EQ(kind_of([] { invariant_monomial_count(4, 4); }), ErrorKind::invalid_argument);
}

TEST(Invariants, MonodromyAction) {
  const MonodromyAction action{5};
  EXPECT_EQ(action.apply({1, 2, 0, 7}), 3u);
  EXPECT_EQ(action.apply({1, 2, 0, 7}, 4), 2u);
  EXPECT_TRUE(action.invariant_numerator({1, 2, 9, 0}));
  EXPECT_FALSE(action.invariant_numerator({1, 1, 0, 0}));
  // Applying the action `order` times returns to phase 0.
  unsigned phase = 0;
  for (unsigned i = 0; i < action.order; ++i) phase = action.apply({2, 0, 1, 1}, phase);
  EXPECT_EQ(phase, 0u);
}

TEST(Epsilon, OnlyZeroSolution) {
  for (unsigned n = 3; n <= 12; ++n) {
    EXPECT_EQ(epsilon_solve(n, invariant_bound(n)), std::vector<unsigned>(n - 1, 0));
  }
  EXPECT_EQ(kind_of([] { epsilon_solve(2, 1); }), ErrorKind::inconclusive);
  EXPECT_EQ(kind_of([] { epsilon_solve(5, 15); }), ErrorKind::invalid_argument);
  EXPECT_EQ(kind_of([] { epsilon_solve(5, 16 + 3); }), ErrorKind::inconclusive);
}

TEST(Pipeline, ExampleBiPencils) {
  const auto four = alexander_bipencil(kExample);
  EXPECT_EQ(four.result.factored_string(), "(t-1)^3");
  EXPECT_EQ(four.bound, 9u);
  EXPECT_EQ(four.fixed_part, 9u);
  EXPECT_EQ(four.counts[1].count, 9u);
  ASSERT_TRUE(four.epsilon.has_value());
  EXPECT_FALSE(four.change.has_value());

  const auto five = alexander_bipencil(BiPencil::make({1, 2, 3}, {-1, 5}));
  EXPECT_EQ(five.result.factored_string(), "(t-1)^4");
  EXPECT_EQ(five.result.expand(), (IntPoly{1, -4, 6, -4, 1}));

  const auto two = alexander_bipencil(BiPencil::make({1}, {1}));
  EXPECT_FALSE(two.epsilon.has_value());
  EXPECT_EQ(two.result.factored_string(), "(t-1)");
}

TEST(Pipeline, ArrangementInputDetectsThePencil) {
  std::mt19937_64 rng(73);
  const BiPencil b = testing::random_bipencil(rng, 3, 2);
  const auto report = alexander_bipencil(transform(b.to_arrangement(), testing::random_change(rng)));
  EXPECT_TRUE(report.change.has_value());
  EXPECT_EQ(report.pencil.p(), 3u);
  EXPECT_EQ(report.result.factored_string(), "(t-1)^4");
  EXPECT_EQ(kind_of([] { alexander_bipencil(testing::braid_arrangement()); }), ErrorKind::not_bipencil);
}

TEST(Pipeline, AgreesWithConjecturalFormula) {
  std::mt19937_64 rng(79);
  for (unsigned n = 3; n <= 8; ++n) {
    const std::size_t q_ = std::uniform_int_distribution<std::size_t>(1, n / 2)(rng);
    const BiPencil b = testing::random_bipencil(rng, n - q_, q_);
    const auto report = alexander_bipencil(b);
    const auto conj = conjectural_alexander(b.to_arrangement());
    EXPECT_EQ(report.result, conj.polynomial) << n;
    EXPECT_EQ(conj.beta2, 0u);
    EXPECT_EQ(conj.beta3, 0u);
  }
}

TEST(Conjectural, Examples) {
  const auto hesse = conjectural_alexander(hesse_lattice());
  EXPECT_EQ(hesse.beta2, 2u);
  EXPECT_EQ(hesse.beta3, 0u);
  EXPECT_EQ(hesse.polynomial.factored_string(), "(t-1)^11*Phi_2(t)^2*Phi_4(t)^2");
  EXPECT_EQ(conjectural_alexander(testing::braid_arrangement()).polynomial.factored_string(),
            "(t-1)^5*Phi_3(t)");
  const auto one = conjectural_alexander(Arrangement({Line(1, 0, 0)}));
  EXPECT_EQ(one.polynomial.factored_string(), "1");
  EXPECT_EQ(one.polynomial.expand(), (IntPoly{1}));
}

TEST(Cyclotomic, MatchesRoots) {
  for (unsigned k = 1; k <= 40; ++k) {
    const auto expected = oracle::cyclotomic_by_roots(k);
    const auto got = cyclotomic_polynomial(k);
    ASSERT_EQ(got.size(), expected.size()) << k;
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(got[i], expected[i]) << k;
  }
  // t^12 - 1 is the product over divisors.
  IntPoly product{1};
  for (unsigned k : {1u, 2u, 3u, 4u, 6u, 12u}) product = poly_multiply(product, cyclotomic_polynomial(k));
  IntPoly expected(13, 0);
  expected[0] = -1;
  expected[12] = 1;
  EXPECT_EQ(product, expected);
  EXPECT_EQ(to_string(cyclotomic_polynomial(3)), "t^2+t+1");
}

TEST(Cyclotomic, GenericShape) {
  const auto s = generic_alexander_shape(6, 4, {{3, 1}, {2, 0}});
  EXPECT_EQ(s.factored_string(), "(t-1)^3*Phi_3(t)");
  EXPECT_EQ(s.cyclotomic.size(), 1u);
  EXPECT_EQ(s.expand(), poly_multiply(IntPoly{-1, 3, -3, 1}, IntPoly{1, 1, 1}));
  EXPECT_EQ(kind_of([] { generic_alexander_shape(6, 2, {{4, 1}}); }), ErrorKind::invalid_argument);
  EXPECT_EQ(kind_of([] { generic_alexander_shape(6, 2, {{1, 1}}); }), ErrorKind::invalid_argument);
  EXPECT_EQ(kind_of([] { generic_alexander_shape(6, 0, {}); }), ErrorKind::invalid_argument);
  EXPECT_EQ(kind_of([] { poly_divide_exact({1, 0, 1}, {-1, 1}); }), ErrorKind::internal);
}

}  // namespace
}  // namespace linarr
