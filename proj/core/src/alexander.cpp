#include "linarr/alexander.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "linarr/error.hpp"
#include "linarr/resonance.hpp"

namespace linarr {

namespace {

const std::vector<std::string> kTotalVars{"y", "z", "x0", "x1", "x2"};
const std::vector<std::string> kFiberVars{"y", "z", "x0", "x2"};
const std::vector<std::string> kInfinityVars{"y", "z", "x1", "x2"};

// Positions of the fiber variables among (y, z, x0, x1, x2).
constexpr std::array<std::size_t, 4> kFiberSlots{0, 1, 2, 4};
constexpr std::array<std::size_t, 4> kInfinitySlots{0, 1, 3, 4};

Poly cone_part(const std::vector<std::string>& vars, unsigned n) {
  Exponents ey(vars.size(), 0);
  Exponents ez(vars.size(), 0);
  ey[0] = n;
  ez[1] = n;
  return Poly::monomial(vars, ey, Rational(1)) + Poly::monomial(vars, ez, Rational(1));
}

// x_a - c x_b
Poly linear(const std::vector<std::string>& vars, std::size_t a, std::size_t b, const Rational& c) {
  return Poly::variable(vars, a) - Poly::variable(vars, b) * c;
}

std::vector<Rational> point5(long y, long z, const Rational& x0, const Rational& x1,
                             const Rational& x2) {
  return {Rational(y), Rational(z), x0, x1, x2};
}

void require_singular(const Poly& f, const std::vector<Rational>& point,
                      std::span<const std::size_t> slots, const std::string& label) {
  std::vector<Rational> local;
  local.reserve(slots.size());
  for (const auto slot : slots) local.push_back(point.at(slot));
  for (std::size_t v = 0; v < f.variable_count(); ++v) {
    if (f.derivative(v).evaluate(local) != 0) {
      throw Error(ErrorKind::internal, "listed point " + label + " is not singular");
    }
  }
}

std::string tag(unsigned n, const std::string& tail) {
  return "y^" + std::to_string(n) + "+z^" + std::to_string(n) + tail;
}

std::string power(const char* var, std::size_t k) {
  return "-" + std::string(var) + "^" + std::to_string(k);
}

bool has_zero(const std::vector<Rational>& v) {
  return std::find(v.begin(), v.end(), Rational(0)) != v.end();
}

}  // namespace

PencilFamily::PencilFamily(BiPencil b) : bipencil(std::move(b)) { bipencil.validate(); }

Rational PencilFamily::h(const Rational& s) const {
  Rational value = 1;
  for (const auto& l : bipencil.lambdas) value *= 1 - l * s;
  return value;
}

std::string PencilParameter::to_string() const {
  return infinite ? "inf" : to_fraction_string(value);
}

Poly total_space_polynomial(const PencilFamily& family) {
  const auto& vars = kTotalVars;
  Poly f = Poly::constant(vars, Rational(1));
  for (const auto& l : family.bipencil.lambdas) f *= linear(vars, 2, 3, l);
  for (const auto& m : family.bipencil.mus) f *= linear(vars, 2, 4, m);
  return cone_part(vars, static_cast<unsigned>(family.n())) - f;
}

Poly fiber_polynomial(const PencilFamily& family, const Rational& s) {
  const auto& vars = kFiberVars;
  Poly g = Poly::variable(vars, 2).pow(static_cast<unsigned>(family.p()));
  for (const auto& m : family.bipencil.mus) g *= linear(vars, 2, 3, m);
  return cone_part(vars, static_cast<unsigned>(family.n())) - g * family.h(s);
}

Poly fiber_at_infinity(const PencilFamily& family) {
  const auto& vars = kInfinityVars;
  Rational c = family.n() % 2 == 0 ? 1 : -1;
  for (const auto& l : family.bipencil.lambdas) c *= l;
  for (const auto& m : family.bipencil.mus) c *= m;
  Exponents e{0, 0, static_cast<unsigned>(family.p()), static_cast<unsigned>(family.q())};
  return cone_part(vars, static_cast<unsigned>(family.n())) - Poly::monomial(vars, e, c);
}

std::vector<PencilParameter> special_fibers(const PencilFamily& family) {
  std::vector<Rational> roots;
  for (const auto& l : family.bipencil.lambdas) {
    if (l != 0) roots.push_back(Rational(1) / l);
  }
  std::sort(roots.begin(), roots.end());
  std::vector<PencilParameter> out{PencilParameter::at_infinity()};
  for (auto& r : roots) out.push_back(PencilParameter::finite(std::move(r)));
  return out;
}

Rational pick_generic_parameter(const PencilFamily& family) {
  for (long s = 0;; ++s) {
    if (family.h(Rational(s)) != 0) return Rational(s);
  }
}

SingularLocusReport singular_locus(const PencilFamily& family, const LocusSelector& which) {
  const unsigned n = static_cast<unsigned>(family.n());
  const auto& b = family.bipencil;
  // Multiplicities of the arrangement at (0:0:1) and (0:1:0); a zero
  // parameter adds the line x0 = 0 to both.
  const std::size_t m1 = family.p() + (has_zero(b.mus) ? 1 : 0);
  const std::size_t m2 = family.q() + (has_zero(b.lambdas) ? 1 : 0);
  const auto pp = point5(0, 0, 0, 0, 1);
  const auto pq = point5(0, 0, 0, 1, 0);

  SingularLocusReport report;
  std::vector<std::size_t> slots;
  Poly f = Poly::constant(kTotalVars, 0);

  switch (which.kind) {
    case LocusSelector::Kind::total_space: {
      report.surface = "X";
      f = total_space_polynomial(family);
      slots = {0, 1, 2, 3, 4};
      if (m1 >= 2) report.components.push_back({"P_p", {pp}, tag(n, power("v", m1) + power("w", m1))});
      if (m2 >= 2) report.components.push_back({"P_q", {pq}, tag(n, power("v", m2) + power("w", m2))});
      for (std::size_t i = 0; i < b.lambdas.size(); ++i) {
        for (std::size_t j = 0; j < b.mus.size(); ++j) {
          const ProjectivePoint d(b.lambdas[i] * b.mus[j], b.mus[j], b.lambdas[i]);
          if (d == ProjectivePoint(0, 0, 1) || d == ProjectivePoint(0, 1, 0)) continue;
          const auto& c = d.coords();
          report.components.push_back({"D(" + std::to_string(i) + "," +
                                           std::to_string(b.p() + j) + ")",
                                       {point5(0, 0, c[0], c[1], c[2])},
                                       tag(n, "-v^2-w^2")});
        }
      }
      break;
    }
    case LocusSelector::Kind::fiber: {
      report.surface = "Y_s";
      f = fiber_polynomial(family, which.s);
      slots.assign(kFiberSlots.begin(), kFiberSlots.end());
      if (family.h(which.s) == 0) {
        const auto start = point5(0, 0, 1, which.s, 0);
        report.components.push_back({"L_s", {start, pp}, tag(n, "")});
      } else if (m1 >= 2) {
        report.components.push_back({"P_p", {pp}, tag(n, power("v", m1))});
      }
      break;
    }
    case LocusSelector::Kind::fiber_at_infinity: {
      report.surface = "Y_inf";
      f = fiber_at_infinity(family);
      slots.assign(kInfinitySlots.begin(), kInfinitySlots.end());
      if (has_zero(b.lambdas) || has_zero(b.mus)) {
        report.components.push_back({"L_inf", {pq, pp}, tag(n, "")});
      } else {
        if (family.p() >= 2) report.components.push_back({"P_p", {pp}, tag(n, power("v", family.p()))});
        if (family.q() >= 2) report.components.push_back({"P_q", {pq}, tag(n, power("v", family.q()))});
      }
      break;
    }
  }

  for (const auto& component : report.components) {
    for (const auto& point : component.span) require_singular(f, point, slots, component.label);
    if (component.span.size() == 2) {
      std::vector<Rational> mid(5);
      for (std::size_t i = 0; i < 5; ++i) mid[i] = component.span[0][i] + component.span[1][i];
      require_singular(f, mid, slots, component.label);
    }
  }
  return report;
}

unsigned MonodromyAction::apply(const Exponents& e, unsigned phase) const {
  if (e.size() != 4) throw Error(ErrorKind::invalid_argument, "monomial must have 4 exponents");
  return static_cast<unsigned>((phase + e[0] + e[1]) % order);
}

bool MonodromyAction::invariant_numerator(const Exponents& e) const {
  if (e.size() != 4) throw Error(ErrorKind::invalid_argument, "monomial must have 4 exponents");
  return (e[0] + e[1] + 2) % order == 0;
}

InvariantCount invariant_monomial_count(unsigned n, unsigned t) {
  if (n < 2) throw Error(ErrorKind::invalid_argument, "n must be >= 2");
  if (t < 1 || t > 3) throw Error(ErrorKind::invalid_argument, "t must be 1, 2 or 3");
  if (t * n < 4) return {0, true};
  // a + b = n - 2 leaves c + d = (t - 1) n - 2.
  const long rest = static_cast<long>((t - 1) * n) - 2;
  if (rest < 0) return {0, false};
  return {static_cast<std::uint64_t>(n - 1) * static_cast<std::uint64_t>(rest + 1), false};
}

std::uint64_t invariant_bound(unsigned n) {
  if (n < 2) throw Error(ErrorKind::invalid_argument, "n must be >= 2");
  return static_cast<std::uint64_t>(n - 1) * (n - 1);
}

std::vector<unsigned> epsilon_solve(unsigned n, std::uint64_t bound) {
  if (n < 3) {
    throw Error(ErrorKind::inconclusive, "inequality is vacuous for n = 2");
  }
  const std::uint64_t fixed = invariant_bound(n);
  if (bound < fixed) {
    throw Error(ErrorKind::invalid_argument, "bound is below the fixed part (n-1)^2");
  }
  if (bound - fixed >= n - 2) {
    throw Error(ErrorKind::inconclusive, "bound admits nonzero epsilon");
  }
  return std::vector<unsigned>(n - 1, 0);
}

AlexanderReport alexander_bipencil(const BiPencil& bipencil) {
  const PencilFamily family(bipencil);
  const unsigned n = static_cast<unsigned>(family.n());

  AlexanderReport report;
  report.pencil = bipencil;
  report.s = pick_generic_parameter(family);
  report.fiber = fiber_polynomial(family, report.s);

  for (unsigned t = 1; t <= 3; ++t) report.counts.push_back(invariant_monomial_count(n, t));

  GradedQuotientOptions options;
  options.filter = CharacterFilter{{1, 1, 0, 0}, n, (n - 2) % n};
  for (unsigned t = 1; t <= 2; ++t) {
    if (t * n < 4) continue;
    auto dims = graded_quotient_dim(report.fiber, t * n - 4, options);
    if (dims.dim_quotient > report.counts[t - 1].count) {
      throw Error(ErrorKind::internal, "invariant graded piece exceeds the monomial count");
    }
    report.invariant_dims.push_back(std::move(dims));
  }

  report.bound = invariant_bound(n);
  if (report.counts[1].count != report.bound) {
    throw Error(ErrorKind::internal, "t = 2 count differs from the bound");
  }

  const Poly yn = Poly::variable({"y"}, 0).pow(n);
  const auto table = spectrum_to_table(steenbrink_spectrum(yn, n, {1}), 0);
  report.join = thom_sebastiani_join(table, table);
  report.epsilon0 = n - 1;
  for (const auto& [exponent, mult] : report.join.degrees().at(1)) {
    const unsigned expected = exponent == 0 ? n - 1 : n - 2;
    if (mult != expected) throw Error(ErrorKind::internal, "unexpected join multiplicity");
  }
  report.fixed_part = report.join.multiplicity(1, Rational(0)) * report.epsilon0;
  if (report.fixed_part != report.bound) {
    throw Error(ErrorKind::internal, "fixed part differs from (n-1)^2");
  }

  if (n >= 3) report.epsilon = epsilon_solve(n, report.bound);
  report.result = generic_alexander_shape(n, n, {});
  return report;
}

AlexanderReport alexander_bipencil(const Arrangement& arrangement) {
  PencilForm form = pencil_form(arrangement);
  AlexanderReport report = alexander_bipencil(form.pencil);
  report.change = form.change;
  return report;
}

ConjecturalReport conjectural_alexander(const Lattice& lattice) {
  ConjecturalReport report;
  report.beta2 = aomoto_betti(lattice, 2).beta;
  report.beta3 = aomoto_betti(lattice, 3).beta;
  const auto n = static_cast<unsigned>(lattice.line_count());
  report.polynomial.d = n;
  report.polynomial.trivial_exponent = n - 1;
  if (report.beta3 > 0) report.polynomial.cyclotomic[3] = static_cast<unsigned>(report.beta3);
  if (report.beta2 > 0) {
    report.polynomial.cyclotomic[2] = static_cast<unsigned>(report.beta2);
    report.polynomial.cyclotomic[4] = static_cast<unsigned>(report.beta2);
  }
  return report;
}

ConjecturalReport conjectural_alexander(const Arrangement& arrangement) {
  return conjectural_alexander(Lattice::from_arrangement(arrangement));
}

}  // namespace linarr
