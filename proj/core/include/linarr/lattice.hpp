#pragma once

#include <cstddef>
#include <vector>

#include "linarr/arrangement.hpp"

namespace linarr {

/// Rank-two part of the intersection lattice: the lines and the multiple
/// points as sets of incident lines. Every pair of lines lies in exactly one
/// point.
class Lattice {
 public:
  /// Point order matches intersection_points(arrangement).
  static Lattice from_arrangement(const Arrangement& arrangement);

  /// Builds a lattice from explicitly listed points; pairs of lines not
  /// covered by any listed point are appended as double points in
  /// lexicographic pair order. Used for configurations without a rational
  /// realization (e.g. the Hesse arrangement).
  static Lattice from_points(std::size_t line_count,
                             std::vector<std::vector<std::size_t>> points);

  std::size_t line_count() const noexcept { return line_count_; }
  const std::vector<std::vector<std::size_t>>& points() const noexcept { return points_; }
  std::size_t multiplicity(std::size_t point) const { return points_.at(point).size(); }
  /// Index of the point where lines i != j meet.
  std::size_t point_of(std::size_t i, std::size_t j) const;
  bool only_double_and_triple() const;

 private:
  Lattice(std::size_t line_count, std::vector<std::vector<std::size_t>> points);

  std::size_t line_count_ = 0;
  std::vector<std::vector<std::size_t>> points_;
  std::vector<std::size_t> pair_to_point_;
};

/// The Hesse configuration: 12 lines of the affine plane over F_3, meeting
/// in its 9 points (multiplicity 4) and in 12 double points.
Lattice hesse_lattice();

}  // namespace linarr
