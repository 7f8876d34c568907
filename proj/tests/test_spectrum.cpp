#include <gtest/gtest.h>

#include "linarr/error.hpp"
#include "linarr/spectrum.hpp"

namespace linarr {
namespace {

Rational q(long num, long den) {
  Rational r{Integer{num}, Integer{den}};
  r.canonicalize();
  return r;
}

std::vector<SpectrumEntry> sp_power(unsigned n) {
  return steenbrink_spectrum(Poly::variable({"y"}, 0).pow(n), n, {1});
}

Poly fermat(unsigned vars, unsigned n) {
  std::vector<std::string> names;
  for (unsigned i = 0; i < vars; ++i) names.push_back("x" + std::to_string(i));
  Poly f(names);
  for (unsigned i = 0; i < vars; ++i) f += Poly::variable(names, i).pow(n);
  return f;
}

TEST(Spectrum, SinglePower) {
  for (unsigned n = 2; n <= 12; ++n) {
    const auto sp = sp_power(n);
    ASSERT_EQ(sp.size(), n - 1);
    for (unsigned j = 1; j < n; ++j) {
      EXPECT_EQ(sp[j - 1].alpha, q(j, n) - 1);
      EXPECT_EQ(sp[j - 1].nu, 1u);
    }
  }
}

TEST(Spectrum, FermatCubicCurve) {
  const auto sp = steenbrink_spectrum(fermat(2, 3), 3, {1, 1});
  const std::vector<SpectrumEntry> expected{{q(-1, 3), 1}, {Rational(0), 2}, {q(1, 3), 1}};
  EXPECT_EQ(sp, expected);
}

TEST(Spectrum, WeightedCusp) {
  // The A2 singularity.
  const auto sp = steenbrink_spectrum(parse_poly("y^2 + z^3", {"y", "z"}), 6, {3, 2});
  const std::vector<SpectrumEntry> expected{{q(-1, 6), 1}, {q(1, 6), 1}};
  EXPECT_EQ(sp, expected);
}

TEST(Spectrum, SymmetricAndInRange) {
  for (unsigned vars = 1; vars <= 3; ++vars) {
    for (unsigned n = 2; n <= 6; ++n) {
      const auto sp = steenbrink_spectrum(fermat(vars, n), n, std::vector<unsigned>(vars, 1));
      unsigned total = 0;
      for (const auto& e : sp) {
        EXPECT_GT(e.alpha, -1);
        EXPECT_LT(e.alpha, Rational(vars - 1));
        const Rational mirror = Rational(vars) - 2 - e.alpha;
        const auto it = std::find_if(sp.begin(), sp.end(), [&](const SpectrumEntry& x) { return x.alpha == mirror; });
        ASSERT_NE(it, sp.end());
        EXPECT_EQ(it->nu, e.nu);
        total += e.nu;
      }
      unsigned milnor = 1;
      for (unsigned i = 0; i < vars; ++i) milnor *= n - 1;
      EXPECT_EQ(total, milnor);
    }
  }
}

TEST(Spectrum, NonIsolatedIsRejected) {
  try {
    steenbrink_spectrum(parse_poly("y^2*z", {"y", "z"}), 3, {1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::non_isolated);
  }
}

TEST(Monodromy, TableBasics) {
  MonodromyTable t;
  t.add(0, q(-1, 3), 2);
  t.add(0, q(5, 3), 1);
  EXPECT_EQ(t.multiplicity(0, q(2, 3)), 3u);
  EXPECT_EQ(t.total_dimension(0), 3u);
  EXPECT_EQ(t.total_dimension(1), 0u);
}

TEST(Monodromy, JoinMatchesDirectSpectrum) {
  for (unsigned n = 3; n <= 10; ++n) {
    const auto single = spectrum_to_table(sp_power(n), 0);
    const auto joined = thom_sebastiani_join(single, single);
    const auto direct = spectrum_to_table(steenbrink_spectrum(fermat(2, n), n, {1, 1}), 1);
    EXPECT_EQ(joined, direct) << n;
    EXPECT_EQ(joined.total_dimension(1), (n - 1) * (n - 1));
    EXPECT_EQ(joined.multiplicity(1, Rational(0)), n - 1);
  }
}

TEST(Monodromy, JoinAlgebra) {
  const auto a = spectrum_to_table(sp_power(3), 0);
  const auto b = spectrum_to_table(sp_power(4), 0);
  const auto c = spectrum_to_table(sp_power(6), 0);
  EXPECT_EQ(thom_sebastiani_join(a, b), thom_sebastiani_join(b, a));
  EXPECT_EQ(thom_sebastiani_join(thom_sebastiani_join(a, b), c),
            thom_sebastiani_join(a, thom_sebastiani_join(b, c)));
  const auto abc = thom_sebastiani_join(thom_sebastiani_join(a, b), c);
  EXPECT_EQ(abc.total_dimension(2), 2u * 3u * 5u);
  EXPECT_TRUE(thom_sebastiani_join(a, MonodromyTable{}).empty());
}

}  // namespace
}  // namespace linarr
