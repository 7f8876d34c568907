#include "linarr/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "linarr/error.hpp"

namespace linarr {

bool lex_less(const Triple& a, const Triple& b) {
  for (std::size_t i = 0; i < 3; ++i) {
    const int c = compare(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

bool equal(const Triple& a, const Triple& b) {
  return a[0] == b[0] && a[1] == b[1] && a[2] == b[2];
}

Triple cross(const Triple& a, const Triple& b) {
  return {Rational(a[1] * b[2] - a[2] * b[1]), Rational(a[2] * b[0] - a[0] * b[2]),
          Rational(a[0] * b[1] - a[1] * b[0])};
}

Rational dot(const Triple& a, const Triple& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Triple normalize(Triple t) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (t[i] != 0) {
      const Rational lead = t[i];
      for (auto& x : t) x /= lead;
      return t;
    }
  }
  throw Error(ErrorKind::invalid_argument, "zero coordinate triple");
}

Matrix3 identity3() {
  Matrix3 m;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) m[i][j] = i == j ? 1 : 0;
  }
  return m;
}

Matrix3 multiply(const Matrix3& a, const Matrix3& b) {
  Matrix3 out;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      out[i][j] = s;
    }
  }
  return out;
}

Matrix3 inverse(const Matrix3& m) {
  // Columns of the adjugate are cross products of rows.
  const Triple c0 = cross(m[1], m[2]);
  const Triple c1 = cross(m[2], m[0]);
  const Triple c2 = cross(m[0], m[1]);
  const Rational det = dot(m[0], c0);
  if (det == 0) throw Error(ErrorKind::invalid_argument, "singular coordinate change");
  Matrix3 inv;
  for (std::size_t i = 0; i < 3; ++i) {
    inv[i][0] = c0[i] / det;
    inv[i][1] = c1[i] / det;
    inv[i][2] = c2[i] / det;
  }
  return inv;
}

Triple row_times(const Triple& row, const Matrix3& m) {
  Triple out;
  for (std::size_t j = 0; j < 3; ++j) out[j] = row[0] * m[0][j] + row[1] * m[1][j] + row[2] * m[2][j];
  return out;
}

ProjectivePoint::ProjectivePoint(Triple coords) : coords_(normalize(std::move(coords))) {}

ProjectivePoint::ProjectivePoint(Rational x0, Rational x1, Rational x2)
    : ProjectivePoint(Triple{std::move(x0), std::move(x1), std::move(x2)}) {}

Line::Line(Triple coeffs) {
  if (coeffs[0] == 0 && coeffs[1] == 0 && coeffs[2] == 0) {
    throw Error(ErrorKind::invalid_argument, "zero line: all coefficients vanish");
  }
  coeffs_ = normalize(std::move(coeffs));
}

Line::Line(Rational a, Rational b, Rational c)
    : Line(Triple{std::move(a), std::move(b), std::move(c)}) {}

ProjectivePoint meet(const Line& a, const Line& b) {
  if (a == b) throw Error(ErrorKind::invalid_argument, "meet of a line with itself");
  return ProjectivePoint(cross(a.coeffs(), b.coeffs()));
}

Arrangement::Arrangement(std::vector<Line> lines) : lines_(std::move(lines)) {
  if (lines_.empty()) throw Error(ErrorKind::invalid_argument, "arrangement has no lines");
  std::vector<Line> sorted = lines_;
  std::sort(sorted.begin(), sorted.end());
  const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    const Triple& c = dup->coeffs();
    throw Error(ErrorKind::duplicate_line,
                "duplicate line (" + c[0].get_str() + "," + c[1].get_str() + "," +
                    c[2].get_str() + ")");
  }
}

Arrangement transform(const Arrangement& arrangement, const Matrix3& change) {
  const Matrix3 inv = inverse(change);
  std::vector<Line> lines;
  lines.reserve(arrangement.degree());
  for (const auto& line : arrangement.lines()) lines.emplace_back(row_times(line.coeffs(), inv));
  return Arrangement(std::move(lines));
}

std::vector<FlatPoint> intersection_points(const Arrangement& arrangement) {
  std::map<ProjectivePoint, std::set<std::size_t>> incidence;
  const auto& lines = arrangement.lines();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      auto& incident = incidence[meet(lines[i], lines[j])];
      incident.insert(i);
      incident.insert(j);
    }
  }
  std::vector<FlatPoint> out;
  out.reserve(incidence.size());
  for (auto& [point, incident] : incidence) {
    out.push_back(FlatPoint{point, std::vector<std::size_t>(incident.begin(), incident.end())});
  }
  return out;
}

BiPencil BiPencil::make(std::vector<Rational> lambdas, std::vector<Rational> mus) {
  BiPencil b{std::move(lambdas), std::move(mus)};
  b.validate();
  return b;
}

void BiPencil::validate() const {
  if (mus.empty() || lambdas.size() < mus.size()) {
    throw Error(ErrorKind::invalid_argument, "bi-pencil requires p >= q >= 1");
  }
  auto distinct = [](std::vector<Rational> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  if (!distinct(lambdas) || !distinct(mus)) {
    throw Error(ErrorKind::invalid_argument, "bi-pencil parameters must be pairwise distinct");
  }
  const auto zeros = std::count(lambdas.begin(), lambdas.end(), Rational(0)) +
                     std::count(mus.begin(), mus.end(), Rational(0));
  if (zeros > 1) {
    throw Error(ErrorKind::invalid_argument, "at most one bi-pencil parameter may be zero");
  }
}

Arrangement BiPencil::to_arrangement() const {
  std::vector<Line> lines;
  lines.reserve(n());
  for (const auto& l : lambdas) lines.emplace_back(Rational(1), Rational(-l), Rational(0));
  for (const auto& m : mus) lines.emplace_back(Rational(1), Rational(0), Rational(-m));
  return Arrangement(std::move(lines));
}

std::optional<PencilCover> is_bipencil(const Arrangement& arrangement) {
  const auto flats = intersection_points(arrangement);
  const std::size_t n = arrangement.degree();
  std::optional<PencilCover> best;
  for (std::size_t a = 0; a < flats.size(); ++a) {
    for (std::size_t b = a + 1; b < flats.size(); ++b) {
      const FlatPoint& fa = flats[a];
      const FlatPoint& fb = flats[b];
      if (fa.multiplicity() + fb.multiplicity() != n) continue;
      bool covers = true;
      for (const auto& line : arrangement.lines()) {
        const bool on_a = line.contains(fa.point);
        const bool on_b = line.contains(fb.point);
        if (on_a == on_b) {
          covers = false;
          break;
        }
      }
      if (!covers) continue;
      // Flats are sorted, so fa precedes fb lexicographically.
      PencilCover cover = fa.multiplicity() >= fb.multiplicity()
                              ? PencilCover{fa, fb, fa.multiplicity(), fb.multiplicity()}
                              : PencilCover{fb, fa, fb.multiplicity(), fa.multiplicity()};
      // Iteration order already yields the lexicographically smallest pair first.
      if (!best || cover.p > best->p) best = std::move(cover);
    }
  }
  return best;
}

namespace {

Triple standard_basis(std::size_t j) {
  Triple e{Rational(0), Rational(0), Rational(0)};
  e[j] = 1;
  return e;
}

bool proportional(const Triple& a, const Triple& b) {
  const Triple c = cross(a, b);
  return c[0] == 0 && c[1] == 0 && c[2] == 0;
}

// A form vanishing at `point`, different from `axis` and from every line of
// the arrangement.
Triple reference_form(const ProjectivePoint& point, const Triple& axis,
                      const Arrangement& arrangement) {
  Triple base;
  bool found = false;
  for (std::size_t j = 0; j < 3 && !found; ++j) {
    const Triple u = cross(point.coords(), standard_basis(j));
    if (u[0] == 0 && u[1] == 0 && u[2] == 0) continue;
    if (proportional(u, axis)) continue;
    base = normalize(u);
    found = true;
  }
  if (!found) throw Error(ErrorKind::internal, "no reference form through pencil point");
  for (long step = 0;; ++step) {
    // t = 0, 1, -1, 2, -2, ...
    const long t = step % 2 == 1 ? (step + 1) / 2 : -(step / 2);
    Triple candidate{Rational(base[0] + t * axis[0]), Rational(base[1] + t * axis[1]),
                     Rational(base[2] + t * axis[2])};
    const Line as_line(candidate);
    const auto& lines = arrangement.lines();
    if (std::find(lines.begin(), lines.end(), as_line) == lines.end()) return as_line.coeffs();
  }
}

}  // namespace

PencilForm pencil_form(const Arrangement& arrangement) {
  auto cover = is_bipencil(arrangement);
  if (!cover) throw Error(ErrorKind::not_bipencil, "arrangement is not a bi-pencil arrangement");

  const ProjectivePoint& p1 = cover->p1.point;
  const ProjectivePoint& p2 = cover->p2.point;
  const Triple axis = normalize(cross(p1.coords(), p2.coords()));
  const Triple x1 = reference_form(p1, axis, arrangement);
  const Triple x2 = reference_form(p2, axis, arrangement);
  const Matrix3 change{axis, x1, x2};
  const Matrix3 inv = inverse(change);

  std::vector<Rational> lambdas;
  std::vector<Rational> mus;
  for (const auto& line : arrangement.lines()) {
    const Triple local = row_times(line.coeffs(), inv);
    if (line.contains(p1)) {
      if (local[2] != 0 || local[0] == 0) throw Error(ErrorKind::internal, "pencil_form: bad P1 line");
      lambdas.push_back(-local[1] / local[0]);
    } else {
      if (local[1] != 0 || local[0] == 0) throw Error(ErrorKind::internal, "pencil_form: bad P2 line");
      mus.push_back(-local[2] / local[0]);
    }
  }
  return PencilForm{std::move(*cover), change, BiPencil::make(std::move(lambdas), std::move(mus))};
}

}  // namespace linarr
