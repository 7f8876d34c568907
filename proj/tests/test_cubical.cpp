#include <gtest/gtest.h>

#include <random>

#include "linarr/cubical.hpp"
#include "linarr/error.hpp"
#include "linarr/json_io.hpp"
#include "support.hpp"

namespace linarr {
namespace {

constexpr MorphismKind kKinds[] = {MorphismKind::iso, MorphismKind::closed_immersion,
                                   MorphismKind::proper_modification, MorphismKind::proper,
                                   MorphismKind::other};

/// Every arrow in direction j carries kinds[j], so all composites agree.
CubicalDiagram directional_cube(unsigned n, const std::vector<MorphismKind>& kinds) {
  std::map<Subset, SpaceDescriptor> nodes;
  std::map<CubicalDiagram::ArrowKey, MorphismDescriptor> arrows;
  for (Subset s = 0; s < (Subset{1} << n); ++s) {
    SpaceDescriptor space{"X" + subset_to_string(s), static_cast<int>(n - subset_size(s)), {}, true};
    space.components.push_back({"C", space.dimension});
    if (s & 1u) space.components.push_back({"D", 0});
    nodes[s] = space;
    for (unsigned j = 0; j < n; ++j) {
      if (s & (Subset{1} << j)) {
        MorphismDescriptor m{kinds[j], {}};
        if (kinds[j] == MorphismKind::closed_immersion) m.codim["C"] = 1;
        arrows[{s, s & ~(Subset{1} << j)}] = m;
      }
    }
  }
  return CubicalDiagram(n, std::move(nodes), std::move(arrows));
}

CubicalDiagram random_cube(std::mt19937_64& rng, unsigned n) {
  std::vector<MorphismKind> kinds;
  for (unsigned j = 0; j < n; ++j) kinds.push_back(kKinds[std::uniform_int_distribution<int>(0, 4)(rng)]);
  return directional_cube(n, kinds);
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// All strictly increasing maps [s] -> [r].
std::vector<std::vector<unsigned>> increasing_maps(unsigned s, unsigned r) {
  std::vector<std::vector<unsigned>> out;
  for (Subset m = 0; m < (Subset{1} << (r + 1)); ++m) {
    if (subset_size(m) == s + 1) out.push_back(subset_elements(m));
  }
  return out;
}

TEST(Subsets, TextForm) {
  EXPECT_EQ(subset_to_string(0), "{}");
  EXPECT_EQ(subset_to_string(0b101), "{0,2}");
  EXPECT_EQ(parse_subset("{0,2}"), 0b101u);
  EXPECT_EQ(parse_subset("{}"), 0u);
  for (const char* bad : {"", "{0,0}", "{1,}", "0,1", "{99}"}) EXPECT_THROW(parse_subset(bad), Error) << bad;
}

TEST(Morphisms, JoinTable) {
  EXPECT_EQ(join(MorphismKind::iso, MorphismKind::closed_immersion), MorphismKind::closed_immersion);
  EXPECT_EQ(join(MorphismKind::closed_immersion, MorphismKind::proper_modification), MorphismKind::proper);
  EXPECT_EQ(join(MorphismKind::proper, MorphismKind::other), MorphismKind::other);
  for (auto a : kKinds) {
    EXPECT_EQ(parse_morphism_kind(to_string(a)), a);
    for (auto b : kKinds) {
      EXPECT_EQ(join(a, b), join(b, a));
      for (auto c : kKinds) EXPECT_EQ(join(join(a, b), c), join(a, join(b, c)));
    }
  }
}

TEST(Diagram, CompositesAreJoinsAlongChains) {
  std::mt19937_64 rng(83);
  for (unsigned n = 1; n <= 4; ++n) {
    const auto d = random_cube(rng, n);
    for (Subset i = 0; i <= d.full(); ++i) {
      for (Subset k = 0; k <= d.full(); ++k) {
        if ((i & k) != k) continue;
        for (Subset j = 0; j <= d.full(); ++j) {
          if ((k & j) != j) continue;
          EXPECT_EQ(join(d.composite(i, k), d.composite(k, j)), d.composite(i, j));
        }
      }
      EXPECT_EQ(d.composite(i, i), MorphismKind::iso);
    }
  }
}

TEST(Diagram, RejectsInconsistentComposites) {
  auto d = directional_cube(2, {MorphismKind::iso, MorphismKind::iso});
  auto arrows = d.arrows();
  arrows[{0b11, 0b01}].kind = MorphismKind::other;
  EXPECT_THROW(CubicalDiagram(2, d.nodes(), arrows), Error);
  arrows.erase({0b11, 0b01});
  EXPECT_THROW(CubicalDiagram(2, d.nodes(), arrows), Error);
}

TEST(Diagram, JsonRoundTrip) {
  std::mt19937_64 rng(89);
  for (unsigned n = 0; n <= 4; ++n) {
    const auto d = random_cube(rng, n);
    EXPECT_EQ(diagram_from_json(diagram_to_json(d)), d);
  }
}

TEST(Semisimplicial, LevelCounts) {
  std::mt19937_64 rng(97);
  for (unsigned n = 1; n <= 6; ++n) {
    const auto d = random_cube(rng, n);
    const auto s = semisimplicialize(d);
    ASSERT_EQ(s.levels.size(), n);
    for (unsigned k = 0; k < n; ++k) {
      EXPECT_EQ(s.levels[k].blocks.size(), binomial(n, k + 1));
      std::size_t components = 0;
      for (Subset b : s.levels[k].blocks) {
        EXPECT_EQ(subset_size(b), k + 1);
        components += d.node(b).components.size();
      }
      EXPECT_EQ(s.levels[k].components.size(), components);
      EXPECT_TRUE(std::is_sorted(s.levels[k].blocks.begin(), s.levels[k].blocks.end(),
                                 [](Subset a, Subset b) { return subset_elements(a) < subset_elements(b); }));
    }
  }
  EXPECT_THROW(semisimplicialize(directional_cube(0, {})), Error);
}

TEST(Semisimplicial, FaceMapExample) {
  // I = {1,3,4}, beta = (0, 2): {i_0, i_2} = {1, 4}.
  EXPECT_EQ(SemisimplicialDiagram::face_target({0, 2}, 0b11010), 0b10010u);
  EXPECT_THROW(SemisimplicialDiagram::face_target({2, 1}, 0b111), Error);
  EXPECT_THROW(SemisimplicialDiagram::face_target({3}, 0b111), Error);
}

TEST(Semisimplicial, Functoriality) {
  std::mt19937_64 rng(101);
  for (unsigned n = 1; n <= 4; ++n) {
    const auto d = random_cube(rng, n);
    const auto s = semisimplicialize(d);
    for (unsigned r = 0; r < n; ++r) {
      for (Subset block : s.levels[r].blocks) {
        EXPECT_EQ(s.augmentation_label(block), d.composite(block, 0));
        for (unsigned sdim = 0; sdim <= r; ++sdim) {
          for (const auto& beta : increasing_maps(sdim, r)) {
            const Subset face = SemisimplicialDiagram::face_target(beta, block);
            EXPECT_EQ(s.face_label(beta, block), d.composite(block, face));
            for (unsigned t = 0; t <= sdim; ++t) {
              for (const auto& gamma : increasing_maps(t, sdim)) {
                std::vector<unsigned> composed;
                for (unsigned g : gamma) composed.push_back(beta[g]);
                EXPECT_EQ(SemisimplicialDiagram::face_target(composed, block),
                          SemisimplicialDiagram::face_target(gamma, face));
                EXPECT_EQ(s.face_label(composed, block),
                          join(s.face_label(beta, block), s.face_label(gamma, face)));
              }
            }
          }
        }
      }
    }
  }
}

TEST(Reshaping, MorphismOfCubesRoundTrip) {
  std::mt19937_64 rng(103);
  for (unsigned n = 1; n <= 5; ++n) {
    const auto d = random_cube(rng, n);
    const auto m = as_morphism_of_cubes(d);
    EXPECT_EQ(m.y.n(), n - 1);
    EXPECT_EQ(m.connecting.size(), std::size_t{1} << (n - 1));
    EXPECT_EQ(reassemble(m), d);
  }
}

TEST(Reshaping, TwoByTwoRoundTrip) {
  std::mt19937_64 rng(107);
  for (unsigned n = 2; n <= 5; ++n) {
    const auto d = random_cube(rng, n);
    const auto r = reshape_2x2(d);
    ASSERT_EQ(r.nodes.size(), 4u);
    EXPECT_EQ(r.arrows.size(), 4u);
    EXPECT_EQ(r.nodes[0b11].node(0).name, d.node(Subset{0b11} << (n - 2)).name);
    EXPECT_EQ(reassemble(r), d);
  }
  EXPECT_THROW(reshape_2x2(directional_cube(1, {MorphismKind::iso})), Error);
}

struct GysinInputs {
  CubicalDiagram dx, dy, sx, sy;
  EmbeddingData emb;
};

GysinInputs load_gysin(const std::string& dir) {
  auto load = [&](const std::string& f) { return testing::load_json("gysin/" + dir + "/" + f + ".json"); };
  return {diagram_from_json(load("dx")), diagram_from_json(load("dy")), diagram_from_json(load("sx")),
          diagram_from_json(load("sy")), embeddings_from_json(load("embeddings"))};
}

TEST(Gysin, EqualMultiplicityFixture) {
  const auto g = load_gysin("equal");
  const auto v = check_gysin_hypotheses(g.dx, g.dy, g.sx, g.sy, g.emb, 2, 0);
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.c, 0u);
  EXPECT_EQ(v.valid_from, 2);
  EXPECT_TRUE(v.surjection_at_dim_y);
}

TEST(Gysin, DistinctMultiplicityFixture) {
  const auto g = load_gysin("distinct");
  const auto v = check_gysin_hypotheses(g.dx, g.dy, g.sx, g.sy, g.emb, 2, 0);
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.c, 0u);
}

TEST(Gysin, MutantFailsTheFirstHypothesis) {
  const auto g = load_gysin("mutant");
  const auto v = check_gysin_hypotheses(g.dx, g.dy, g.sx, g.sy, g.emb, 2, 0);
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.failed_hypothesis, "I");
  EXPECT_NE(v.witness.find("codim 2"), std::string::npos);
}

TEST(Gysin, SecondHypothesis) {
  const auto g = load_gysin("equal");
  // Sigma codimension outside {0, 1}.
  EmbeddingData mixed = g.emb;
  mixed.sigma.begin()->second.begin()->second.codim = 2;
  const auto v = check_gysin_hypotheses(g.dx, g.dy, g.sx, g.sy, mixed, 2, 0);
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.failed_hypothesis, "II");
}

TEST(Gysin, MissingAndUnknownData) {
  auto g = load_gysin("equal");
  EmbeddingData missing = g.emb;
  missing.d.begin()->second.clear();
  try {
    check_gysin_hypotheses(g.dx, g.dy, g.sx, g.sy, missing, 2, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::missing_datum);
  }
  EmbeddingData unknown = g.emb;
  unknown.d.begin()->second.begin()->second.host = "nowhere";
  try {
    check_gysin_hypotheses(g.dx, g.dy, g.sx, g.sy, unknown, 2, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unknown_reference);
  }
}

TEST(Gysin, RangeGrowsWithSigma) {
  const auto g = load_gysin("equal");
  int previous = -1;
  for (int dim_sigma = 0; dim_sigma <= 4; ++dim_sigma) {
    const auto v = check_gysin_hypotheses(g.dx, g.dy, g.sx, g.sy, g.emb, 2, dim_sigma);
    EXPECT_GE(v.valid_from, previous);
    EXPECT_EQ(v.valid_from, 2 * dim_sigma + 2);
    previous = v.valid_from;
  }
}

}  // namespace
}  // namespace linarr
