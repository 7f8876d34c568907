#include "linarr/graded.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "linarr/error.hpp"

namespace linarr {

std::vector<Exponents> monomials_of_degree(std::size_t variables, unsigned degree,
                                           std::span<const unsigned> weights) {
  if (!weights.empty() && weights.size() != variables) {
    throw Error(ErrorKind::invalid_argument, "weight vector does not match variables");
  }
  std::vector<Exponents> out;
  if (variables == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponents e(variables, 0);
  auto weight = [&](std::size_t i) { return weights.empty() ? 1u : weights[i]; };
  // Largest exponent on the earliest variable first.
  auto fill = [&](auto&& self, std::size_t i, unsigned remaining) -> void {
    if (i + 1 == variables) {
      if (remaining % weight(i) == 0) {
        e[i] = remaining / weight(i);
        out.push_back(e);
      }
      return;
    }
    for (unsigned a = remaining / weight(i) + 1; a-- > 0;) {
      e[i] = a;
      self(self, i + 1, remaining - a * weight(i));
    }
  };
  fill(fill, 0, degree);
  if (!weights.empty()) std::sort(out.begin(), out.end(), GrlexGreater{});
  return out;
}

unsigned CharacterFilter::character(const Exponents& e) const {
  unsigned long long s = 0;
  for (std::size_t i = 0; i < e.size() && i < weights.size(); ++i) s += 1ull * weights[i] * e[i];
  return static_cast<unsigned>(s % modulus);
}

namespace {

// Integer row proportional to p in the given monomial basis.
std::vector<Integer> integer_row(const Poly& p, const std::map<Exponents, std::size_t>& index) {
  std::vector<Integer> row(index.size());
  Integer common = 1;
  for (const auto& [e, c] : p.terms()) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& [e, c] : p.terms()) {
    const auto it = index.find(e);
    if (it == index.end()) throw Error(ErrorKind::internal, "product escaped the graded piece");
    row[it->second] = c.get_num() * (common / c.get_den());
  }
  return row;
}

}  // namespace

GradedQuotientReport graded_quotient_dim(const Poly& f, unsigned k,
                                         const GradedQuotientOptions& options) {
  const auto degree = f.weighted_degree(options.weights);
  if (!degree) {
    throw Error(ErrorKind::invalid_argument,
                f.is_zero() ? "zero polynomial" : "polynomial is not (weighted) homogeneous");
  }
  if (*degree < 2) throw Error(ErrorKind::invalid_argument, "polynomial degree must be >= 2");
  if (options.filter && options.filter->modulus == 0) {
    throw Error(ErrorKind::invalid_argument, "character modulus must be positive");
  }
  const std::size_t nvars = f.variable_count();
  auto weight = [&](std::size_t i) { return options.weights.empty() ? 1u : options.weights[i]; };

  std::map<Exponents, std::size_t> index;
  for (auto& e : monomials_of_degree(nvars, k, options.weights)) {
    if (options.filter && options.filter->character(e) != options.filter->residue) continue;
    index.emplace(std::move(e), index.size());
  }

  IntMatrix rows;
  for (std::size_t v = 0; v < nvars; ++v) {
    const Poly g = f.derivative(v);
    if (g.is_zero()) continue;
    const unsigned g_degree = *degree - weight(v);
    if (k < g_degree) continue;
    for (const auto& m : monomials_of_degree(nvars, k - g_degree, options.weights)) {
      const Poly product = g.shifted(m);
      if (options.filter) {
        const unsigned ch = options.filter->character(product.terms().begin()->first);
        for (const auto& [e, c] : product.terms()) {
          if (options.filter->character(e) != ch) {
            throw Error(ErrorKind::invalid_argument,
                        "Jacobian generator is not homogeneous for the character filter");
          }
        }
        if (ch != options.filter->residue) continue;
      }
      rows.push_back(integer_row(product, index));
    }
  }

  GradedQuotientReport report;
  report.f = f.to_string();
  report.k = k;
  report.dim_rk = index.size();
  report.check_prime = options.check_prime;
  report.check_rank = rank_mod_prime(rows, options.check_prime);
  report.rank = rank_exact(std::move(rows));
  if (report.check_rank > report.rank) {
    throw Error(ErrorKind::internal, "modular rank exceeds rational rank");
  }
  report.dim_quotient = report.dim_rk - report.rank;
  return report;
}

}  // namespace linarr
