#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "linarr/rational.hpp"

namespace linarr {

using IntMatrix = std::vector<std::vector<Integer>>;
using ModMatrix = std::vector<std::vector<std::uint64_t>>;

/// Exact rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank_exact(IntMatrix matrix);

/// Rank over the p-element field; entries must already lie in [0, p).
std::size_t rank_mod_prime(ModMatrix matrix, std::uint64_t prime);
/// Reduces entries mod `prime` first. Never exceeds rank_exact.
std::size_t rank_mod_prime(const IntMatrix& matrix, std::uint64_t prime);

/// Largest prime below 2^30.
inline constexpr std::uint64_t kDefaultCheckPrime = 1073741789;

/// Uniform random prime with exactly `bits` bits (2..62).
std::uint64_t random_prime(unsigned bits, std::mt19937_64& rng);

}  // namespace linarr
