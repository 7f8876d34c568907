#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace linarr {

/// Subsets of {0, ..., n-1} as bit masks.
using Subset = std::uint32_t;

inline constexpr unsigned kMaxCubeIndex = 16;

std::string subset_to_string(Subset s);  // "{0,2}", "{}" for the empty set
Subset parse_subset(std::string_view text);
std::vector<unsigned> subset_elements(Subset s);
unsigned subset_size(Subset s);

struct Component {
  std::string name;
  int dimension = 0;

  friend bool operator==(const Component&, const Component&) = default;
};

/// Dimension -1 with no components is the empty space.
struct SpaceDescriptor {
  std::string name;
  int dimension = -1;
  std::vector<Component> components;
  bool smooth = true;

  void validate() const;
  const Component* find(std::string_view component) const;

  friend bool operator==(const SpaceDescriptor&, const SpaceDescriptor&) = default;
};

/// Ordered by generality; closed_immersion and proper_modification are
/// incomparable and join to proper.
enum class MorphismKind { iso, closed_immersion, proper_modification, proper, other };

std::string_view to_string(MorphismKind kind);
MorphismKind parse_morphism_kind(std::string_view text);
/// Label of a composite.
MorphismKind join(MorphismKind a, MorphismKind b);

struct MorphismDescriptor {
  MorphismKind kind = MorphismKind::other;
  std::map<std::string, unsigned> codim;  // only for closed immersions

  friend bool operator==(const MorphismDescriptor&, const MorphismDescriptor&) = default;
};

/// Contravariant functor on the subsets of [n-1]: one node per subset and
/// one arrow X_{I + j} -> X_I per covering pair, keyed (I + j, I).
class CubicalDiagram {
 public:
  using ArrowKey = std::pair<Subset, Subset>;

  /// Validates nodes, arrows and the consistency of composites.
  CubicalDiagram(unsigned n, std::map<Subset, SpaceDescriptor> nodes,
                 std::map<ArrowKey, MorphismDescriptor> arrows);

  unsigned n() const noexcept { return n_; }
  Subset full() const noexcept { return (Subset{1} << n_) - 1; }
  const std::map<Subset, SpaceDescriptor>& nodes() const noexcept { return nodes_; }
  const std::map<ArrowKey, MorphismDescriptor>& arrows() const noexcept { return arrows_; }
  const SpaceDescriptor& node(Subset s) const;
  const MorphismDescriptor& arrow(Subset source, Subset target) const;
  /// Label of the unique morphism X_source -> X_target, target subset of source.
  MorphismKind composite(Subset source, Subset target) const;

  friend bool operator==(const CubicalDiagram& a, const CubicalDiagram& b) {
    return a.n_ == b.n_ && a.nodes_ == b.nodes_ && a.arrows_ == b.arrows_;
  }

 private:
  unsigned n_ = 0;
  std::map<Subset, SpaceDescriptor> nodes_;
  std::map<ArrowKey, MorphismDescriptor> arrows_;
  std::map<ArrowKey, MorphismKind> composites_;
};

/// X_k is the disjoint union of X_I over |I| = k + 1, blocks in
/// lexicographic order of the sorted elements of I.
struct SemisimplicialLevel {
  std::vector<Subset> blocks;
  std::vector<Component> components;
};

struct SemisimplicialDiagram {
  const CubicalDiagram* source = nullptr;
  std::vector<SemisimplicialLevel> levels;

  /// beta(I) = {i_beta(0), ..., i_beta(s)} for I = {i_0 < ... < i_r} and a
  /// strictly increasing beta: [s] -> [r].
  static Subset face_target(const std::vector<unsigned>& beta, Subset block);
  /// Label of the face map restricted to the block X_I.
  MorphismKind face_label(const std::vector<unsigned>& beta, Subset block) const;
  /// Label of the augmentation X_I -> X_empty.
  MorphismKind augmentation_label(Subset block) const;
};

/// n >= 1. The diagram must outlive the result.
SemisimplicialDiagram semisimplicialize(const CubicalDiagram& diagram);

/// Reading of an (n+1)-cube as a morphism Y -> Z of n-cubes, Z_I = X_I and
/// Y_I = X_{I + n}.
struct CubeMorphism {
  CubicalDiagram y;
  CubicalDiagram z;
  std::map<Subset, MorphismDescriptor> connecting;  // Y_I -> Z_I
};

CubeMorphism as_morphism_of_cubes(const CubicalDiagram& diagram);
CubicalDiagram reassemble(const CubeMorphism& morphism);

/// A 2-cube of (m-2)-cubes, splitting on the indices m-2 (bit 0 of S) and
/// m-1 (bit 1 of S).
struct Reshaped2x2 {
  std::vector<CubicalDiagram> nodes;  // indexed by S in {0, 1, 2, 3}
  std::map<CubicalDiagram::ArrowKey, std::map<Subset, MorphismDescriptor>> arrows;
};

Reshaped2x2 reshape_2x2(const CubicalDiagram& diagram);
CubicalDiagram reassemble(const Reshaped2x2& reshaped);

struct ComponentEmbedding {
  std::string host;  // component of the X-side node
  unsigned codim = 0;
};

/// For each nonempty index, the embedding of each Y-side component.
using EmbeddingMap = std::map<Subset, std::map<std::string, ComponentEmbedding>>;

struct EmbeddingData {
  EmbeddingMap d;
  EmbeddingMap sigma;
};

struct GysinVerdict {
  bool holds = false;
  std::optional<unsigned> c;
  std::string failed_hypothesis;  // "I" or "II" when !holds
  std::string witness;
  int dim_y = 0;
  /// Gysin maps exist for k >= valid_from (0 when c = 1).
  int valid_from = 0;
  bool surjection_at_dim_y = false;
  std::string gysin;
};

/// Checks the codimension hypotheses on the declared embeddings. Throws
/// missing_datum when a Y-side component has no embedding entry.
GysinVerdict check_gysin_hypotheses(const CubicalDiagram& dx, const CubicalDiagram& dy,
                               const CubicalDiagram& sx, const CubicalDiagram& sy,
                               const EmbeddingData& embeddings, int dim_y, int dim_sigma_x);

}  // namespace linarr
