#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "linarr/rational.hpp"

namespace linarr {

using Triple = std::array<Rational, 3>;
/// Rows are linear forms; applied to a column vector of coordinates.
using Matrix3 = std::array<Triple, 3>;

/// Lexicographic order on coordinate tuples; the tie-breaker used everywhere.
bool lex_less(const Triple& a, const Triple& b);
bool equal(const Triple& a, const Triple& b);
Triple cross(const Triple& a, const Triple& b);
Rational dot(const Triple& a, const Triple& b);
/// Scales so that the first nonzero entry is 1. Throws on the zero triple.
Triple normalize(Triple t);

Matrix3 identity3();
Matrix3 multiply(const Matrix3& a, const Matrix3& b);
/// Throws invalid_argument when singular.
Matrix3 inverse(const Matrix3& m);
Triple row_times(const Triple& row, const Matrix3& m);

/// A point of P^2 over Q in normalized coordinates.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(Triple coords);
  ProjectivePoint(Rational x0, Rational x1, Rational x2);

  const Triple& coords() const noexcept { return coords_; }

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    return equal(a.coords_, b.coords_);
  }
  friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) {
    return lex_less(a.coords_, b.coords_);
  }

 private:
  Triple coords_;
};

/// The line a*x0 + b*x1 + c*x2 = 0, stored as its normalized representative.
class Line {
 public:
  explicit Line(Triple coeffs);
  Line(Rational a, Rational b, Rational c);

  const Triple& coeffs() const noexcept { return coeffs_; }
  Rational evaluate(const Triple& point) const { return dot(coeffs_, point); }
  bool contains(const ProjectivePoint& p) const { return evaluate(p.coords()) == 0; }

  friend bool operator==(const Line& a, const Line& b) { return equal(a.coeffs_, b.coeffs_); }
  friend bool operator<(const Line& a, const Line& b) { return lex_less(a.coeffs_, b.coeffs_); }

 private:
  Triple coeffs_;
};

ProjectivePoint meet(const Line& a, const Line& b);

/// A reduced arrangement of n >= 1 distinct lines, in input order.
class Arrangement {
 public:
  explicit Arrangement(std::vector<Line> lines);

  std::size_t degree() const noexcept { return lines_.size(); }
  const std::vector<Line>& lines() const noexcept { return lines_; }
  const Line& line(std::size_t i) const { return lines_.at(i); }

 private:
  std::vector<Line> lines_;
};

/// Applies the coordinate change x' = change * x; each line L becomes L * change^-1.
Arrangement transform(const Arrangement& arrangement, const Matrix3& change);

struct FlatPoint {
  ProjectivePoint point;
  std::vector<std::size_t> incident;  // sorted line indices

  std::size_t multiplicity() const noexcept { return incident.size(); }
};

/// Every point on at least two lines, sorted by coordinates.
std::vector<FlatPoint> intersection_points(const Arrangement& arrangement);

/// Product of (x0 - lambda_i x1) over lambdas and (x0 - mu_i x2) over mus.
struct BiPencil {
  std::vector<Rational> lambdas;
  std::vector<Rational> mus;

  /// Validating constructor: p >= q >= 1, distinct parameters, at most one zero.
  static BiPencil make(std::vector<Rational> lambdas, std::vector<Rational> mus);

  std::size_t p() const noexcept { return lambdas.size(); }
  std::size_t q() const noexcept { return mus.size(); }
  std::size_t n() const noexcept { return lambdas.size() + mus.size(); }

  void validate() const;
  /// Lines x0 - lambda_i x1 then x0 - mu_i x2.
  Arrangement to_arrangement() const;
};

struct PencilCover {
  FlatPoint p1;
  FlatPoint p2;
  std::size_t p = 0;
  std::size_t q = 0;
};

/// Finds two multiple points such that every line passes through exactly one
/// of them. Prefers the largest p, then the lexicographically smallest pair.
std::optional<PencilCover> is_bipencil(const Arrangement& arrangement);

struct PencilForm {
  PencilCover cover;
  /// Rows are the new coordinates x0', x1', x2' as forms in the old ones;
  /// P1 maps to (0:0:1) and P2 to (0:1:0).
  Matrix3 change;
  BiPencil pencil;
};

PencilForm pencil_form(const Arrangement& arrangement);

}  // namespace linarr
