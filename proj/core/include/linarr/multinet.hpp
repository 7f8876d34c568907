#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "linarr/lattice.hpp"

namespace linarr {

/// A partition of the lines into k >= 3 classes, a multiplicity per line and
/// a base locus given as point indices of the lattice.
struct MultinetCandidate {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<unsigned> multiplicity;
  std::vector<std::size_t> base_locus;

  std::size_t k() const noexcept { return classes.size(); }
};

/// Ordered: every level implies the ones before it.
enum class MultinetLevel { none, weak, multinet, reduced, net, trivial_net };

std::string_view to_string(MultinetLevel level);

struct Violation {
  std::string axiom;  // "i", "ii", "iii" or "iv"
  std::string witness;
};

struct MultinetVerdict {
  MultinetLevel level = MultinetLevel::none;
  unsigned weight = 0;  // d, meaningful when level != none
  std::vector<Violation> violations;
};

MultinetVerdict check_multinet(const Lattice& lattice, const MultinetCandidate& candidate);

/// Classes (0-based) having a line through the given point.
std::vector<std::size_t> support(const Lattice& lattice, const MultinetCandidate& candidate,
                                 std::size_t point);
/// Geometric variant: throws unknown_reference when `point` is not a
/// multiple point of the arrangement.
std::vector<std::size_t> support(const Arrangement& arrangement,
                                 const MultinetCandidate& candidate,
                                 const ProjectivePoint& point);

/// Points where lines of two different classes meet; the smallest base
/// locus axiom (ii) allows.
std::vector<std::size_t> minimal_base_locus(const Lattice& lattice,
                                            const std::vector<std::vector<std::size_t>>& classes);

struct MultinetMatch {
  MultinetCandidate candidate;
  MultinetVerdict verdict;
};

inline constexpr std::uint64_t kDefaultSearchCap = 1'000'000;

/// Number of set partitions of n items into exactly k blocks, saturating at
/// UINT64_MAX.
std::uint64_t stirling2(std::size_t n, std::size_t k);

/// All weak multinets with exactly k classes and multiplicities in
/// [1, max_multiplicity], base locus minimal. Partitions are enumerated as
/// restricted growth strings; throws budget_exceeded when S(n, k) > cap.
std::vector<MultinetMatch> search_multinets(const Lattice& lattice, std::size_t k,
                                            unsigned max_multiplicity,
                                            std::uint64_t cap = kDefaultSearchCap);

}  // namespace linarr
