#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "linarr/poly.hpp"

namespace linarr {

struct SpectrumEntry {
  Rational alpha;
  unsigned nu = 0;

  friend bool operator==(const SpectrumEntry& a, const SpectrumEntry& b) {
    return a.alpha == b.alpha && a.nu == b.nu;
  }
};

/// nu(alpha) = dim M(f)_{(alpha+1)d - w}, w the sum of the weights. Entries
/// are sorted by alpha. Throws non_isolated when the Milnor algebra does not
/// vanish above its expected socle degree sum_i (d - 2 w_i).
std::vector<SpectrumEntry> steenbrink_spectrum(const Poly& f, unsigned degree,
                                               const std::vector<unsigned>& weights);

struct RationalLess {
  bool operator()(const Rational& a, const Rational& b) const { return cmp(a, b) < 0; }
};

/// Eigenvalue data of monodromy operators on reduced cohomology: for each
/// cohomological degree, eigenvalue exp(2 pi i e) for exponents e in [0, 1)
/// with their multiplicities.
class MonodromyTable {
 public:
  using Eigenspaces = std::map<Rational, unsigned, RationalLess>;

  /// Adds `multiplicity` to exponent frac(exponent) in `degree`.
  void add(unsigned degree, const Rational& exponent, unsigned multiplicity);

  const std::map<unsigned, Eigenspaces>& degrees() const noexcept { return degrees_; }
  bool empty() const noexcept { return degrees_.empty(); }
  unsigned total_dimension(unsigned degree) const;
  unsigned multiplicity(unsigned degree, const Rational& exponent) const;

  friend bool operator==(const MonodromyTable& a, const MonodromyTable& b) {
    return a.degrees_ == b.degrees_;
  }

 private:
  std::map<unsigned, Eigenspaces> degrees_;
};

/// Exponent (-alpha) mod 1 for each entry, all in `degree`.
MonodromyTable spectrum_to_table(const std::vector<SpectrumEntry>& entries, unsigned degree);

/// Tensor product of monodromies: degree a + b + 1, exponent (e_f + e_g) mod 1,
/// multiplicity product.
MonodromyTable thom_sebastiani_join(const MonodromyTable& f, const MonodromyTable& g);

}  // namespace linarr
