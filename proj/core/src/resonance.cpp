#include "linarr/resonance.hpp"

#include <string>
#include <utility>

#include "linarr/error.hpp"

namespace linarr {

namespace {

std::uint64_t reduce(long long value, std::uint64_t prime) {
  const long long p = static_cast<long long>(prime);
  long long r = value % p;
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

}  // namespace

AomotoComplexSlice aomoto_slice(const Lattice& lattice, std::uint64_t prime) {
  if (!is_prime(prime)) {
    throw Error(ErrorKind::invalid_argument, std::to_string(prime) + " is not prime");
  }
  const std::size_t n = lattice.line_count();
  AomotoComplexSlice slice;
  slice.prime = prime;
  slice.dim1 = n;

  // sigma ^ a = sum over pairs l < m of (a_m - a_l) e_l ^ e_m, and inside a
  // point with first line l0: e_l ^ e_m = e_l0 ^ e_m - e_l0 ^ e_l.
  std::vector<std::vector<long long>> rows;
  for (const auto& lines : lattice.points()) {
    const std::size_t first_row = rows.size();
    rows.resize(rows.size() + lines.size() - 1, std::vector<long long>(n, 0));
    auto row_of = [&](std::size_t local) { return first_row + local - 1; };
    for (std::size_t a = 0; a < lines.size(); ++a) {
      for (std::size_t b = a + 1; b < lines.size(); ++b) {
        const std::size_t l = lines[a];
        const std::size_t m = lines[b];
        // coefficient (a_m - a_l) added to e_l0 ^ e_m ...
        rows[row_of(b)][m] += 1;
        rows[row_of(b)][l] -= 1;
        // ... and subtracted from e_l0 ^ e_l when l != l0.
        if (a != 0) {
          rows[row_of(a)][m] -= 1;
          rows[row_of(a)][l] += 1;
        }
      }
    }
  }
  slice.dim2 = rows.size();
  slice.matrix.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<std::uint64_t> reduced(n);
    for (std::size_t j = 0; j < n; ++j) reduced[j] = reduce(row[j], prime);
    slice.matrix.push_back(std::move(reduced));
  }
  return slice;
}

AomotoBettiReport aomoto_betti(const Lattice& lattice, std::uint64_t prime) {
  auto slice = aomoto_slice(lattice, prime);
  AomotoBettiReport report;
  report.prime = prime;
  report.dim1 = slice.dim1;
  report.dim2 = slice.dim2;
  report.rank = rank_mod_prime(std::move(slice.matrix), prime);
  const std::size_t kernel = report.dim1 - report.rank;
  // sigma itself is always in the kernel.
  if (kernel == 0) throw Error(ErrorKind::internal, "sigma missing from the kernel");
  report.beta = kernel - 1;
  return report;
}

AomotoBettiReport aomoto_betti(const Arrangement& arrangement, std::uint64_t prime) {
  return aomoto_betti(Lattice::from_arrangement(arrangement), prime);
}

}  // namespace linarr
