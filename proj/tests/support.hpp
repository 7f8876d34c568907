#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "linarr/arrangement.hpp"
#include "linarr/json_io.hpp"

namespace linarr::testing {

inline std::string fixture(const std::string& name) { return std::string(LINARR_FIXTURE_DIR) + "/" + name; }

inline Json load_json(const std::string& name) {
  std::ifstream in(fixture(name));
  return Json::parse(in);
}

inline Rational small_rational(std::mt19937_64& rng, int span = 20, int max_den = 9) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, max_den);
  Rational r(Integer(num(rng)), Integer(den(rng)));
  r.canonicalize();
  return r;
}

/// `count` pairwise distinct nonzero rationals.
inline std::vector<Rational> distinct_rationals(std::mt19937_64& rng, std::size_t count) {
  std::set<Rational> seen;
  std::vector<Rational> out;
  while (out.size() < count) {
    Rational r = small_rational(rng);
    if (r != 0 && seen.insert(r).second) out.push_back(r);
  }
  return out;
}

inline BiPencil random_bipencil(std::mt19937_64& rng, std::size_t p, std::size_t q) {
  return BiPencil::make(distinct_rationals(rng, p), distinct_rationals(rng, q));
}

inline Matrix3 random_change(std::mt19937_64& rng) {
  while (true) {
    Matrix3 m;
    for (auto& row : m) {
      for (auto& x : row) x = small_rational(rng, 5, 3);
    }
    if (dot(m[0], cross(m[1], m[2])) != 0) return m;
  }
}

inline Arrangement braid_arrangement() {
  return Arrangement({Line(1, -1, 0), Line(1, 0, -1), Line(0, 1, -1), Line(1, 0, 0), Line(0, 1, 0),
                      Line(0, 0, 1)});
}

inline Arrangement coordinate_triangle() {
  return Arrangement({Line(1, 0, 0), Line(0, 1, 0), Line(0, 0, 1)});
}

/// The 13 lines with coefficients in {-1, 0, 1}, normalized.
inline std::vector<Line> small_coefficient_lines() {
  std::vector<Line> out;
  for (int a = -1; a <= 1; ++a) {
    for (int b = -1; b <= 1; ++b) {
      for (int c = -1; c <= 1; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        Line l(a, b, c);
        if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
      }
    }
  }
  return out;
}

/// Random arrangement of `n` lines with generic (large random) coefficients.
inline Arrangement generic_arrangement(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> coeff(-1000, 1000);
  while (true) {
    std::vector<Line> lines;
    try {
      for (std::size_t i = 0; i < n; ++i) lines.emplace_back(coeff(rng), coeff(rng), coeff(rng));
      Arrangement a(lines);
      bool generic = true;
      for (const auto& f : intersection_points(a)) generic = generic && f.multiplicity() == 2;
      if (generic) return a;
    } catch (const std::exception&) {
    }
  }
}

}  // namespace linarr::testing
