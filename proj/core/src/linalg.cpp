#include "linarr/linalg.hpp"

#include <string>
#include <utility>

#include "linarr/error.hpp"

namespace linarr {

std::size_t rank_exact(IntMatrix matrix) {
  if (matrix.empty()) return 0;
  const std::size_t rows = matrix.size();
  const std::size_t cols = matrix.front().size();
  std::size_t rank = 0;
  Integer previous = 1;
  Integer scratch;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && matrix[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(matrix[pivot], matrix[rank]);
    const auto& pivot_row = matrix[rank];
    const Integer& lead = pivot_row[col];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      auto& row = matrix[r];
      const Integer factor = row[col];
      for (std::size_t j = col + 1; j < cols; ++j) {
        // row[j] = (lead * row[j] - factor * pivot_row[j]) / previous, exact.
        mpz_mul(scratch.get_mpz_t(), lead.get_mpz_t(), row[j].get_mpz_t());
        mpz_submul(scratch.get_mpz_t(), factor.get_mpz_t(), pivot_row[j].get_mpz_t());
        mpz_divexact(row[j].get_mpz_t(), scratch.get_mpz_t(), previous.get_mpz_t());
      }
      row[col] = 0;
    }
    previous = lead;
    ++rank;
  }
  return rank;
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1;
  for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = mul_mod(result, a, p);
    a = mul_mod(a, a, p);
  }
  return result;
}

}  // namespace

std::size_t rank_mod_prime(ModMatrix matrix, std::uint64_t prime) {
  if (matrix.empty()) return 0;
  const std::size_t rows = matrix.size();
  const std::size_t cols = matrix.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && matrix[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(matrix[pivot], matrix[rank]);
    const std::uint64_t inv = inverse_mod(matrix[rank][col], prime);
    for (std::size_t j = col; j < cols; ++j) matrix[rank][j] = mul_mod(matrix[rank][j], inv, prime);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const std::uint64_t factor = matrix[r][col];
      if (factor == 0) continue;
      for (std::size_t j = col; j < cols; ++j) {
        const std::uint64_t sub = mul_mod(factor, matrix[rank][j], prime);
        matrix[r][j] = matrix[r][j] >= sub ? matrix[r][j] - sub : matrix[r][j] + prime - sub;
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_mod_prime(const IntMatrix& matrix, std::uint64_t prime) {
  ModMatrix reduced;
  reduced.reserve(matrix.size());
  const Integer p(std::to_string(prime));
  Integer r;
  for (const auto& row : matrix) {
    std::vector<std::uint64_t> out(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
      mpz_fdiv_r(r.get_mpz_t(), row[j].get_mpz_t(), p.get_mpz_t());
      out[j] = r.get_ui();
    }
    reduced.push_back(std::move(out));
  }
  return rank_mod_prime(std::move(reduced), prime);
}

std::uint64_t random_prime(unsigned bits, std::mt19937_64& rng) {
  if (bits < 2 || bits > 62) throw Error(ErrorKind::invalid_argument, "prime size out of range");
  std::uniform_int_distribution<std::uint64_t> dist(std::uint64_t{1} << (bits - 1),
                                                    (std::uint64_t{1} << bits) - 1);
  while (true) {
    const std::uint64_t candidate = dist(rng) | 1u;
    if (is_prime(candidate)) return candidate;
  }
}

}  // namespace linarr
