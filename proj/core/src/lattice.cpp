#include "linarr/lattice.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "linarr/error.hpp"

namespace linarr {

namespace {
constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
}

Lattice::Lattice(std::size_t line_count, std::vector<std::vector<std::size_t>> points)
    : line_count_(line_count),
      points_(std::move(points)),
      pair_to_point_(line_count * line_count, kUnset) {
  if (line_count_ == 0) throw Error(ErrorKind::invalid_argument, "lattice has no lines");
  for (std::size_t id = 0; id < points_.size(); ++id) {
    auto& pt = points_[id];
    std::sort(pt.begin(), pt.end());
    if (pt.size() < 2 || std::adjacent_find(pt.begin(), pt.end()) != pt.end() ||
        pt.back() >= line_count_) {
      throw Error(ErrorKind::invalid_argument,
                  "lattice point " + std::to_string(id) + " needs >= 2 distinct valid lines");
    }
    for (std::size_t a = 0; a < pt.size(); ++a) {
      for (std::size_t b = a + 1; b < pt.size(); ++b) {
        auto& slot = pair_to_point_[pt[a] * line_count_ + pt[b]];
        if (slot != kUnset) {
          throw Error(ErrorKind::invalid_argument,
                      "lines " + std::to_string(pt[a]) + " and " + std::to_string(pt[b]) +
                          " meet in two points");
        }
        slot = id;
        pair_to_point_[pt[b] * line_count_ + pt[a]] = id;
      }
    }
  }
  for (std::size_t i = 0; i < line_count_; ++i) {
    for (std::size_t j = i + 1; j < line_count_; ++j) {
      if (pair_to_point_[i * line_count_ + j] == kUnset) {
        throw Error(ErrorKind::invalid_argument, "lattice misses the meet of lines " +
                                                     std::to_string(i) + " and " + std::to_string(j));
      }
    }
  }
}

Lattice Lattice::from_arrangement(const Arrangement& arrangement) {
  std::vector<std::vector<std::size_t>> points;
  for (auto& flat : intersection_points(arrangement)) points.push_back(std::move(flat.incident));
  return Lattice(arrangement.degree(), std::move(points));
}

Lattice Lattice::from_points(std::size_t line_count, std::vector<std::vector<std::size_t>> points) {
  std::vector<std::vector<bool>> covered(line_count, std::vector<bool>(line_count, false));
  for (const auto& pt : points) {
    for (std::size_t a : pt) {
      for (std::size_t b : pt) {
        if (a < line_count && b < line_count) covered[a][b] = true;
      }
    }
  }
  for (std::size_t i = 0; i < line_count; ++i) {
    for (std::size_t j = i + 1; j < line_count; ++j) {
      if (!covered[i][j]) points.push_back({i, j});
    }
  }
  return Lattice(line_count, std::move(points));
}

std::size_t Lattice::point_of(std::size_t i, std::size_t j) const {
  if (i == j || i >= line_count_ || j >= line_count_) {
    throw Error(ErrorKind::invalid_argument, "point_of needs two distinct valid lines");
  }
  return pair_to_point_[i * line_count_ + j];
}

bool Lattice::only_double_and_triple() const {
  return std::all_of(points_.begin(), points_.end(),
                     [](const auto& pt) { return pt.size() <= 3; });
}

Lattice hesse_lattice() {
  // Lines of AG(2,3): {a*x + b*y = c} for the 4 directions (a,b) and c in F_3.
  // Points (x,y) are indexed 3*x + y.
  const int directions[4][2] = {{1, 0}, {0, 1}, {1, 1}, {1, 2}};
  std::vector<std::vector<int>> line_points;
  for (const auto& dir : directions) {
    for (int c = 0; c < 3; ++c) {
      std::vector<int> pts;
      for (int x = 0; x < 3; ++x) {
        for (int y = 0; y < 3; ++y) {
          if ((dir[0] * x + dir[1] * y) % 3 == c) pts.push_back(3 * x + y);
        }
      }
      line_points.push_back(std::move(pts));
    }
  }
  std::vector<std::vector<std::size_t>> points(9);
  for (std::size_t line = 0; line < line_points.size(); ++line) {
    for (int pt : line_points[line]) points[static_cast<std::size_t>(pt)].push_back(line);
  }
  return Lattice::from_points(line_points.size(), std::move(points));
}

}  // namespace linarr
