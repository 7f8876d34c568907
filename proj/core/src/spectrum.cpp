#include "linarr/spectrum.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "linarr/error.hpp"
#include "linarr/graded.hpp"

namespace linarr {

std::vector<SpectrumEntry> steenbrink_spectrum(const Poly& f, unsigned degree,
                                               const std::vector<unsigned>& weights) {
  if (weights.size() != f.variable_count()) {
    throw Error(ErrorKind::invalid_argument, "one weight per variable is required");
  }
  if (std::any_of(weights.begin(), weights.end(), [](unsigned w) { return w == 0; })) {
    throw Error(ErrorKind::invalid_argument, "weights must be positive");
  }
  const auto actual = f.weighted_degree(weights);
  if (!actual || *actual != degree) {
    throw Error(ErrorKind::invalid_argument,
                "polynomial is not weighted homogeneous of degree " + std::to_string(degree));
  }
  const long weight_sum = std::accumulate(weights.begin(), weights.end(), 0L);
  long socle = 0;
  for (unsigned w : weights) socle += static_cast<long>(degree) - 2L * w;

  GradedQuotientOptions options;
  options.weights = weights;
  std::vector<SpectrumEntry> entries;
  for (long j = 0; j <= socle; ++j) {
    const auto report = graded_quotient_dim(f, static_cast<unsigned>(j), options);
    if (report.dim_quotient == 0) continue;
    Rational alpha(Integer(j + weight_sum), Integer(degree));
    alpha.canonicalize();
    alpha -= 1;
    // nu vanishes outside (-1, number of variables - 1).
    if (alpha <= -1 || alpha >= static_cast<long>(f.variable_count()) - 1) {
      throw Error(ErrorKind::internal, "spectral value out of range");
    }
    entries.push_back({alpha, static_cast<unsigned>(report.dim_quotient)});
  }
  // A window of max weight consecutive zero degrees forces vanishing above it.
  const unsigned max_weight = *std::max_element(weights.begin(), weights.end());
  for (long j = std::max(socle + 1, 0L); j <= socle + static_cast<long>(max_weight); ++j) {
    if (graded_quotient_dim(f, static_cast<unsigned>(j), options).dim_quotient != 0) {
      throw Error(ErrorKind::non_isolated,
                  "Milnor algebra does not vanish in degree " + std::to_string(j) +
                      "; singularity is not isolated");
    }
  }
  return entries;
}

void MonodromyTable::add(unsigned degree, const Rational& exponent, unsigned multiplicity) {
  if (multiplicity == 0) return;
  degrees_[degree][frac(exponent)] += multiplicity;
}

unsigned MonodromyTable::total_dimension(unsigned degree) const {
  const auto it = degrees_.find(degree);
  if (it == degrees_.end()) return 0;
  unsigned total = 0;
  for (const auto& [e, m] : it->second) total += m;
  return total;
}

unsigned MonodromyTable::multiplicity(unsigned degree, const Rational& exponent) const {
  const auto it = degrees_.find(degree);
  if (it == degrees_.end()) return 0;
  const auto jt = it->second.find(frac(exponent));
  return jt == it->second.end() ? 0 : jt->second;
}

MonodromyTable spectrum_to_table(const std::vector<SpectrumEntry>& entries, unsigned degree) {
  MonodromyTable table;
  for (const auto& entry : entries) table.add(degree, -entry.alpha, entry.nu);
  return table;
}

MonodromyTable thom_sebastiani_join(const MonodromyTable& f, const MonodromyTable& g) {
  MonodromyTable out;
  for (const auto& [df, spaces_f] : f.degrees()) {
    for (const auto& [dg, spaces_g] : g.degrees()) {
      for (const auto& [ef, mf] : spaces_f) {
        for (const auto& [eg, mg] : spaces_g) out.add(df + dg + 1, ef + eg, mf * mg);
      }
    }
  }
  return out;
}

}  // namespace linarr
