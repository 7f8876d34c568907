#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "linarr/lattice.hpp"
#include "linarr/linalg.hpp"

namespace linarr {

/// Degree-one to degree-two differential of the mod-p Aomoto complex at
/// sigma = sum of all generators. Rows follow the points of the lattice;
/// for a point with lines l0 < l1 < ... the rows are e_{l0} ^ e_{lj}, j >= 1.
struct AomotoComplexSlice {
  std::uint64_t prime = 0;
  std::size_t dim1 = 0;
  std::size_t dim2 = 0;
  ModMatrix matrix;  // dim2 x dim1, entries in [0, p)
};

AomotoComplexSlice aomoto_slice(const Lattice& lattice, std::uint64_t prime);

struct AomotoBettiReport {
  std::uint64_t prime = 0;
  std::size_t dim1 = 0;
  std::size_t dim2 = 0;
  std::size_t rank = 0;
  std::size_t beta = 0;
};

/// dim ker(sigma ^ -) - 1. Throws invalid_argument when `prime` is not prime.
AomotoBettiReport aomoto_betti(const Lattice& lattice, std::uint64_t prime);
AomotoBettiReport aomoto_betti(const Arrangement& arrangement, std::uint64_t prime);

}  // namespace linarr
