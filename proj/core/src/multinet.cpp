#include "linarr/multinet.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <set>

#include "linarr/error.hpp"

namespace linarr {

std::string_view to_string(MultinetLevel level) {
  switch (level) {
    case MultinetLevel::none: return "none";
    case MultinetLevel::weak: return "weak";
    case MultinetLevel::multinet: return "multinet";
    case MultinetLevel::reduced: return "reduced";
    case MultinetLevel::net: return "net";
    case MultinetLevel::trivial_net: return "trivial-net";
  }
  return "none";
}

namespace {

std::vector<std::size_t> class_assignment(const Lattice& lattice,
                                          const std::vector<std::vector<std::size_t>>& classes) {
  const std::size_t n = lattice.line_count();
  std::vector<std::size_t> class_of(n, std::numeric_limits<std::size_t>::max());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw Error(ErrorKind::invalid_argument, "empty multinet class");
    for (std::size_t line : classes[c]) {
      if (line >= n) {
        throw Error(ErrorKind::unknown_reference, "candidate references unknown line " +
                                                      std::to_string(line));
      }
      if (class_of[line] != std::numeric_limits<std::size_t>::max()) {
        throw Error(ErrorKind::invalid_argument,
                    "line " + std::to_string(line) + " appears in two classes");
      }
      class_of[line] = c;
    }
  }
  for (std::size_t line = 0; line < n; ++line) {
    if (class_of[line] == std::numeric_limits<std::size_t>::max()) {
      throw Error(ErrorKind::invalid_argument,
                  "line " + std::to_string(line) + " belongs to no class");
    }
  }
  return class_of;
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

// Axiom (iv): lines of each class connected through points outside the base locus.
std::optional<Violation> connectivity_violation(const Lattice& lattice,
                                                const std::vector<std::vector<std::size_t>>& classes,
                                                const std::vector<bool>& in_base) {
  UnionFind uf(lattice.line_count());
  for (const auto& cls : classes) {
    for (std::size_t a = 0; a < cls.size(); ++a) {
      for (std::size_t b = a + 1; b < cls.size(); ++b) {
        if (!in_base[lattice.point_of(cls[a], cls[b])]) uf.unite(cls[a], cls[b]);
      }
    }
  }
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (std::size_t line : classes[c]) {
      if (uf.find(line) != uf.find(classes[c].front())) {
        return Violation{"iv", "lines " + std::to_string(classes[c].front()) + " and " +
                                   std::to_string(line) + " of class " + std::to_string(c) +
                                   " are not connected outside the base locus"};
      }
    }
  }
  return std::nullopt;
}

// n_p per class for one point.
std::vector<unsigned> point_weights(const Lattice& lattice, std::size_t point,
                                    const std::vector<std::size_t>& class_of, std::size_t k,
                                    const std::vector<unsigned>& multiplicity) {
  std::vector<unsigned> weights(k, 0);
  for (std::size_t line : lattice.points()[point]) weights[class_of[line]] += multiplicity[line];
  return weights;
}

}  // namespace

MultinetVerdict check_multinet(const Lattice& lattice, const MultinetCandidate& candidate) {
  const std::size_t n = lattice.line_count();
  const std::size_t k = candidate.k();
  if (k < 3) throw Error(ErrorKind::invalid_argument, "a multinet needs k >= 3 classes");
  const auto class_of = class_assignment(lattice, candidate.classes);
  if (candidate.multiplicity.size() != n) {
    throw Error(ErrorKind::invalid_argument, "multiplicity function must cover every line");
  }
  if (std::any_of(candidate.multiplicity.begin(), candidate.multiplicity.end(),
                  [](unsigned m) { return m == 0; })) {
    throw Error(ErrorKind::invalid_argument, "multiplicities must be positive");
  }
  std::vector<bool> in_base(lattice.points().size(), false);
  for (std::size_t point : candidate.base_locus) {
    if (point >= in_base.size()) {
      throw Error(ErrorKind::unknown_reference,
                  "candidate references unknown point " + std::to_string(point));
    }
    in_base[point] = true;
  }

  MultinetVerdict verdict;

  // (i)
  std::vector<unsigned> class_sums(k, 0);
  for (std::size_t line = 0; line < n; ++line) class_sums[class_of[line]] += candidate.multiplicity[line];
  const bool axiom_i = std::all_of(class_sums.begin(), class_sums.end(),
                                   [&](unsigned s) { return s == class_sums.front(); });
  if (!axiom_i) {
    const auto it = std::find_if(class_sums.begin(), class_sums.end(),
                                 [&](unsigned s) { return s != class_sums.front(); });
    verdict.violations.push_back(
        {"i", "class 0 has weight " + std::to_string(class_sums.front()) + " but class " +
                  std::to_string(it - class_sums.begin()) + " has weight " + std::to_string(*it)});
  }

  // (ii)
  bool axiom_ii = true;
  for (std::size_t a = 0; a < n && axiom_ii; ++a) {
    for (std::size_t b = a + 1; b < n && axiom_ii; ++b) {
      if (class_of[a] == class_of[b]) continue;
      const std::size_t point = lattice.point_of(a, b);
      if (!in_base[point]) {
        axiom_ii = false;
        verdict.violations.push_back(
            {"ii", "lines " + std::to_string(a) + " (class " + std::to_string(class_of[a]) +
                       ") and " + std::to_string(b) + " (class " + std::to_string(class_of[b]) +
                       ") meet at point " + std::to_string(point) + " outside the base locus"});
      }
    }
  }

  // (iii)
  bool axiom_iii = true;
  bool unit_weights = true;
  for (std::size_t point : candidate.base_locus) {
    const auto weights = point_weights(lattice, point, class_of, k, candidate.multiplicity);
    if (std::any_of(weights.begin(), weights.end(),
                    [&](unsigned w) { return w != weights.front(); })) {
      axiom_iii = false;
      std::string listed;
      for (std::size_t c = 0; c < k; ++c) listed += (c ? "," : "") + std::to_string(weights[c]);
      verdict.violations.push_back(
          {"iii", "point " + std::to_string(point) + " has class weights (" + listed + ")"});
      break;
    }
    if (weights.front() != 1) unit_weights = false;
  }

  // (iv)
  const auto disconnected = connectivity_violation(lattice, candidate.classes, in_base);
  if (disconnected) verdict.violations.push_back(*disconnected);

  if (!(axiom_i && axiom_ii && axiom_iii)) return verdict;
  verdict.weight = class_sums.front();
  verdict.level = MultinetLevel::weak;
  if (disconnected) return verdict;
  verdict.level = MultinetLevel::multinet;
  if (!std::all_of(candidate.multiplicity.begin(), candidate.multiplicity.end(),
                   [](unsigned m) { return m == 1; })) {
    return verdict;
  }
  verdict.level = MultinetLevel::reduced;
  if (!unit_weights) return verdict;
  verdict.level = verdict.weight == 1 ? MultinetLevel::trivial_net : MultinetLevel::net;
  return verdict;
}

std::vector<std::size_t> support(const Lattice& lattice, const MultinetCandidate& candidate,
                                 std::size_t point) {
  if (point >= lattice.points().size()) {
    throw Error(ErrorKind::unknown_reference,
                "point " + std::to_string(point) + " is not a multiple point");
  }
  const auto class_of = class_assignment(lattice, candidate.classes);
  std::set<std::size_t> classes;
  for (std::size_t line : lattice.points()[point]) classes.insert(class_of[line]);
  return {classes.begin(), classes.end()};
}

std::vector<std::size_t> support(const Arrangement& arrangement,
                                 const MultinetCandidate& candidate,
                                 const ProjectivePoint& point) {
  const auto flats = intersection_points(arrangement);
  const auto it = std::find_if(flats.begin(), flats.end(),
                               [&](const FlatPoint& f) { return f.point == point; });
  if (it == flats.end()) {
    throw Error(ErrorKind::unknown_reference, "point is not a multiple point of the arrangement");
  }
  return support(Lattice::from_arrangement(arrangement), candidate,
                 static_cast<std::size_t>(it - flats.begin()));
}

std::vector<std::size_t> minimal_base_locus(const Lattice& lattice,
                                            const std::vector<std::vector<std::size_t>>& classes) {
  const auto class_of = class_assignment(lattice, classes);
  std::vector<std::size_t> base;
  for (std::size_t point = 0; point < lattice.points().size(); ++point) {
    const auto& lines = lattice.points()[point];
    const bool mixed = std::any_of(lines.begin(), lines.end(), [&](std::size_t line) {
      return class_of[line] != class_of[lines.front()];
    });
    if (mixed) base.push_back(point);
  }
  return base;
}

std::uint64_t stirling2(std::size_t n, std::size_t k) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::vector<std::uint64_t>> s(n + 1, std::vector<std::uint64_t>(k + 1, 0));
  s[0][0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= std::min(i, k); ++j) {
      const std::uint64_t a = s[i - 1][j];
      const std::uint64_t b = s[i - 1][j - 1];
      if (a != 0 && j > kMax / a) {
        s[i][j] = kMax;
        continue;
      }
      const std::uint64_t prod = j * a;
      s[i][j] = prod > kMax - b ? kMax : prod + b;
    }
  }
  return s[n][k];
}

namespace {

class MultinetSearch {
 public:
  MultinetSearch(const Lattice& lattice, std::size_t k, unsigned max_multiplicity)
      : lattice_(lattice),
        n_(lattice.line_count()),
        k_(k),
        max_multiplicity_(max_multiplicity),
        growth_(n_, 0) {}

  std::vector<MultinetMatch> run() {
    extend(0, 0);
    return std::move(found_);
  }

 private:
  // Assign a class to `line`; `used` classes appear among earlier lines.
  void extend(std::size_t line, std::size_t used) {
    if (line == n_) {
      if (used == k_) evaluate_partition();
      return;
    }
    if (n_ - line < k_ - used) return;
    const std::size_t limit = std::min(used + 1, k_);
    for (std::size_t c = 0; c < limit; ++c) {
      growth_[line] = c;
      if (crosses_low_multiplicity_point(line)) continue;
      extend(line + 1, std::max(used, c + 1));
    }
  }

  // A point meeting two classes lies in the base locus and must meet all k
  // classes; so a cross-class meet of multiplicity < k is a dead end.
  bool crosses_low_multiplicity_point(std::size_t line) const {
    for (std::size_t other = 0; other < line; ++other) {
      if (growth_[other] == growth_[line]) continue;
      if (lattice_.multiplicity(lattice_.point_of(other, line)) < k_) return true;
    }
    return false;
  }

  void evaluate_partition() {
    std::vector<std::vector<std::size_t>> classes(k_);
    for (std::size_t line = 0; line < n_; ++line) classes[growth_[line]].push_back(line);
    const auto base = minimal_base_locus(lattice_, classes);

    // Support of every base point must be all classes (multiplicities are positive).
    for (std::size_t point : base) {
      std::vector<bool> seen(k_, false);
      for (std::size_t line : lattice_.points()[point]) seen[growth_[line]] = true;
      if (std::find(seen.begin(), seen.end(), false) != seen.end()) return;
    }

    std::vector<unsigned> m(n_, 1);
    while (true) {
      if (weights_balanced(classes, base, m)) {
        MultinetCandidate candidate{classes, m, base};
        auto verdict = check_multinet(lattice_, candidate);
        if (verdict.level != MultinetLevel::none) {
          found_.push_back({std::move(candidate), std::move(verdict)});
        }
      }
      // Lexicographic odometer over [1, max]^n.
      std::size_t pos = n_;
      while (pos > 0 && m[pos - 1] == max_multiplicity_) m[--pos] = 1;
      if (pos == 0) break;
      ++m[pos - 1];
    }
  }

  // Axioms (i) and (iii).
  bool weights_balanced(const std::vector<std::vector<std::size_t>>& classes,
                        const std::vector<std::size_t>& base, const std::vector<unsigned>& m) const {
    unsigned d = 0;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      unsigned sum = 0;
      for (std::size_t line : classes[c]) sum += m[line];
      if (c == 0) d = sum;
      else if (sum != d) return false;
    }
    std::vector<unsigned> weights(k_);
    for (std::size_t point : base) {
      std::fill(weights.begin(), weights.end(), 0);
      for (std::size_t line : lattice_.points()[point]) weights[growth_[line]] += m[line];
      if (std::any_of(weights.begin(), weights.end(),
                      [&](unsigned w) { return w != weights.front(); })) {
        return false;
      }
    }
    return true;
  }

  const Lattice& lattice_;
  std::size_t n_;
  std::size_t k_;
  unsigned max_multiplicity_;
  std::vector<std::size_t> growth_;
  std::vector<MultinetMatch> found_;
};

}  // namespace

std::vector<MultinetMatch> search_multinets(const Lattice& lattice, std::size_t k,
                                            unsigned max_multiplicity, std::uint64_t cap) {
  if (k < 3) throw Error(ErrorKind::invalid_argument, "multinet search needs k >= 3");
  if (max_multiplicity < 1) throw Error(ErrorKind::invalid_argument, "mmax must be >= 1");
  const std::uint64_t partitions = stirling2(lattice.line_count(), k);
  if (partitions > cap) {
    throw Error(ErrorKind::budget_exceeded,
                "search over " + std::to_string(partitions) + " partitions exceeds cap " +
                    std::to_string(cap));
  }
  return MultinetSearch(lattice, k, max_multiplicity).run();
}

}  // namespace linarr
