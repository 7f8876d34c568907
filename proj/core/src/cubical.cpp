#include "linarr/cubical.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <set>

#include "linarr/error.hpp"

namespace linarr {

std::string subset_to_string(Subset s) {
  std::string out = "{";
  bool first = true;
  for (const unsigned e : subset_elements(s)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

Subset parse_subset(std::string_view text) {
  auto bad = [&] { return Error(ErrorKind::parse, "malformed subset '" + std::string(text) + "'"); };
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') throw bad();
  const std::string_view body = text.substr(1, text.size() - 2);
  Subset s = 0;
  if (body.empty()) return s;
  std::size_t pos = 0;
  while (true) {
    const std::size_t start = pos;
    while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos]))) ++pos;
    if (start == pos || pos - start > 2) throw bad();
    const unsigned e = static_cast<unsigned>(std::stoul(std::string(body.substr(start, pos - start))));
    if (e >= kMaxCubeIndex || (s >> e) & 1u) throw bad();
    s |= Subset{1} << e;
    if (pos == body.size()) return s;
    if (body[pos] != ',') throw bad();
    ++pos;
  }
}

std::vector<unsigned> subset_elements(Subset s) {
  std::vector<unsigned> out;
  for (unsigned i = 0; s != 0; ++i, s >>= 1) {
    if (s & 1u) out.push_back(i);
  }
  return out;
}

unsigned subset_size(Subset s) { return static_cast<unsigned>(std::popcount(s)); }

void SpaceDescriptor::validate() const {
  if (components.empty()) {
    if (dimension != -1) {
      throw Error(ErrorKind::invalid_argument, "space " + name + " has no components but dimension " +
                                                   std::to_string(dimension));
    }
    return;
  }
  int top = -1;
  std::set<std::string> names;
  for (const auto& c : components) {
    if (c.name.empty()) throw Error(ErrorKind::invalid_argument, "unnamed component in " + name);
    if (c.dimension < 0) {
      throw Error(ErrorKind::invalid_argument, "component " + c.name + " has negative dimension");
    }
    if (!names.insert(c.name).second) {
      throw Error(ErrorKind::invalid_argument, "component " + c.name + " repeated in " + name);
    }
    top = std::max(top, c.dimension);
  }
  if (dimension != top) {
    throw Error(ErrorKind::invalid_argument,
                "space " + name + " dimension differs from its components' maximum");
  }
}

const Component* SpaceDescriptor::find(std::string_view component) const {
  for (const auto& c : components) {
    if (c.name == component) return &c;
  }
  return nullptr;
}

std::string_view to_string(MorphismKind kind) {
  switch (kind) {
    case MorphismKind::iso: return "iso";
    case MorphismKind::closed_immersion: return "closed-immersion";
    case MorphismKind::proper_modification: return "proper-modification";
    case MorphismKind::proper: return "proper";
    case MorphismKind::other: return "other";
  }
  return "other";
}

MorphismKind parse_morphism_kind(std::string_view text) {
  for (const auto kind : {MorphismKind::iso, MorphismKind::closed_immersion,
                          MorphismKind::proper_modification, MorphismKind::proper,
                          MorphismKind::other}) {
    if (to_string(kind) == text) return kind;
  }
  throw Error(ErrorKind::parse, "unknown morphism kind '" + std::string(text) + "'");
}

MorphismKind join(MorphismKind a, MorphismKind b) {
  if (a == b || b == MorphismKind::iso) return a;
  if (a == MorphismKind::iso) return b;
  if (a == MorphismKind::other || b == MorphismKind::other) return MorphismKind::other;
  return MorphismKind::proper;
}

CubicalDiagram::CubicalDiagram(unsigned n, std::map<Subset, SpaceDescriptor> nodes,
                               std::map<ArrowKey, MorphismDescriptor> arrows)
    : n_(n), nodes_(std::move(nodes)), arrows_(std::move(arrows)) {
  if (n_ > kMaxCubeIndex) throw Error(ErrorKind::invalid_argument, "cube index too large");
  const Subset count = Subset{1} << n_;
  if (nodes_.size() != count) {
    throw Error(ErrorKind::invalid_argument, "a " + std::to_string(n_) + "-cube needs " +
                                                 std::to_string(count) + " nodes");
  }
  for (const auto& [s, space] : nodes_) {
    if (s >= count) throw Error(ErrorKind::invalid_argument, "node " + subset_to_string(s) + " out of range");
    space.validate();
  }
  for (const auto& [key, arrow] : arrows_) {
    const auto [source, target] = key;
    const std::string name = subset_to_string(source) + "->" + subset_to_string(target);
    if (source >= count || (source & target) != target || subset_size(source ^ target) != 1) {
      throw Error(ErrorKind::invalid_argument, "arrow " + name + " is not a covering pair");
    }
    if (!arrow.codim.empty() && arrow.kind != MorphismKind::closed_immersion) {
      throw Error(ErrorKind::invalid_argument, "codimension on non-immersion arrow " + name);
    }
    for (const auto& [component, codim] : arrow.codim) {
      if (!nodes_.at(source).find(component)) {
        throw Error(ErrorKind::unknown_reference,
                    "arrow " + name + " names unknown component " + component);
      }
    }
  }
  if (arrows_.size() != static_cast<std::size_t>(n_) * (count / 2)) {
    throw Error(ErrorKind::invalid_argument, "missing arrows in " + std::to_string(n_) + "-cube");
  }
  // Singleton hom-sets: every chain of covering arrows from J down to I
  // must compose to the same label.
  for (unsigned gap = 0; gap <= n_; ++gap) {
    for (Subset source = 0; source < count; ++source) {
      for (Subset target = source;; target = (target - 1) & source) {
        if (subset_size(source ^ target) == gap) {
          std::optional<MorphismKind> label;
          if (gap == 0) label = MorphismKind::iso;
          for (const unsigned j : subset_elements(source ^ target)) {
            const Subset mid = source & ~(Subset{1} << j);
            const MorphismKind k = join(arrows_.at({source, mid}).kind, composites_.at({mid, target}));
            if (label && *label != k) {
              throw Error(ErrorKind::invalid_argument,
                          "composites " + subset_to_string(source) + "->" +
                              subset_to_string(target) + " disagree: " +
                              std::string(to_string(*label)) + " vs " + std::string(to_string(k)));
            }
            label = k;
          }
          composites_[{source, target}] = *label;
        }
        if (target == 0) break;
      }
    }
  }
}

const SpaceDescriptor& CubicalDiagram::node(Subset s) const {
  const auto it = nodes_.find(s);
  if (it == nodes_.end()) throw Error(ErrorKind::unknown_reference, "no node " + subset_to_string(s));
  return it->second;
}

const MorphismDescriptor& CubicalDiagram::arrow(Subset source, Subset target) const {
  const auto it = arrows_.find({source, target});
  if (it == arrows_.end()) {
    throw Error(ErrorKind::unknown_reference,
                "no arrow " + subset_to_string(source) + "->" + subset_to_string(target));
  }
  return it->second;
}

MorphismKind CubicalDiagram::composite(Subset source, Subset target) const {
  const auto it = composites_.find({source, target});
  if (it == composites_.end()) {
    throw Error(ErrorKind::unknown_reference,
                "no morphism " + subset_to_string(source) + "->" + subset_to_string(target));
  }
  return it->second;
}

Subset SemisimplicialDiagram::face_target(const std::vector<unsigned>& beta, Subset block) {
  const auto elements = subset_elements(block);
  if (beta.empty()) throw Error(ErrorKind::invalid_argument, "face map needs a nonempty source");
  Subset out = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (beta[i] >= elements.size() || (i > 0 && beta[i] <= beta[i - 1])) {
      throw Error(ErrorKind::invalid_argument, "beta is not strictly increasing into the block");
    }
    out |= Subset{1} << elements[beta[i]];
  }
  return out;
}

MorphismKind SemisimplicialDiagram::face_label(const std::vector<unsigned>& beta, Subset block) const {
  return source->composite(block, face_target(beta, block));
}

MorphismKind SemisimplicialDiagram::augmentation_label(Subset block) const {
  return source->composite(block, 0);
}

SemisimplicialDiagram semisimplicialize(const CubicalDiagram& diagram) {
  if (diagram.n() == 0) throw Error(ErrorKind::invalid_argument, "semisimplicialize needs n >= 1");
  SemisimplicialDiagram out;
  out.source = &diagram;
  out.levels.resize(diagram.n());
  std::vector<Subset> subsets;
  for (Subset s = 1; s <= diagram.full(); ++s) subsets.push_back(s);
  std::sort(subsets.begin(), subsets.end(), [](Subset a, Subset b) {
    return subset_elements(a) < subset_elements(b);
  });
  for (const Subset s : subsets) {
    auto& level = out.levels[subset_size(s) - 1];
    level.blocks.push_back(s);
    const auto& components = diagram.node(s).components;
    level.components.insert(level.components.end(), components.begin(), components.end());
  }
  return out;
}

CubeMorphism as_morphism_of_cubes(const CubicalDiagram& diagram) {
  if (diagram.n() == 0) throw Error(ErrorKind::invalid_argument, "need a cube of index >= 1");
  const unsigned n = diagram.n() - 1;
  const Subset top = Subset{1} << n;
  std::map<Subset, SpaceDescriptor> y_nodes;
  std::map<Subset, SpaceDescriptor> z_nodes;
  std::map<CubicalDiagram::ArrowKey, MorphismDescriptor> y_arrows;
  std::map<CubicalDiagram::ArrowKey, MorphismDescriptor> z_arrows;
  std::map<Subset, MorphismDescriptor> connecting;
  for (Subset s = 0; s < top; ++s) {
    z_nodes.emplace(s, diagram.node(s));
    y_nodes.emplace(s, diagram.node(s | top));
    connecting.emplace(s, diagram.arrow(s | top, s));
    for (const unsigned j : subset_elements(s)) {
      const Subset below = s & ~(Subset{1} << j);
      z_arrows.emplace(CubicalDiagram::ArrowKey{s, below}, diagram.arrow(s, below));
      y_arrows.emplace(CubicalDiagram::ArrowKey{s, below}, diagram.arrow(s | top, below | top));
    }
  }
  return CubeMorphism{CubicalDiagram(n, std::move(y_nodes), std::move(y_arrows)),
                      CubicalDiagram(n, std::move(z_nodes), std::move(z_arrows)),
                      std::move(connecting)};
}

CubicalDiagram reassemble(const CubeMorphism& morphism) {
  if (morphism.y.n() != morphism.z.n()) {
    throw Error(ErrorKind::invalid_argument, "source and target cubes differ in index");
  }
  const unsigned n = morphism.y.n();
  const Subset top = Subset{1} << n;
  std::map<Subset, SpaceDescriptor> nodes;
  std::map<CubicalDiagram::ArrowKey, MorphismDescriptor> arrows;
  for (const auto& [s, space] : morphism.z.nodes()) nodes.emplace(s, space);
  for (const auto& [s, space] : morphism.y.nodes()) nodes.emplace(s | top, space);
  for (const auto& [key, arrow] : morphism.z.arrows()) arrows.emplace(key, arrow);
  for (const auto& [key, arrow] : morphism.y.arrows()) {
    arrows.emplace(CubicalDiagram::ArrowKey{key.first | top, key.second | top}, arrow);
  }
  for (const auto& [s, arrow] : morphism.connecting) {
    arrows.emplace(CubicalDiagram::ArrowKey{s | top, s}, arrow);
  }
  return CubicalDiagram(n + 1, std::move(nodes), std::move(arrows));
}

namespace {

Subset lift(Subset s, unsigned m) {
  Subset out = 0;
  if (s & 1u) out |= Subset{1} << (m - 2);
  if (s & 2u) out |= Subset{1} << (m - 1);
  return out;
}

}  // namespace

Reshaped2x2 reshape_2x2(const CubicalDiagram& diagram) {
  const unsigned m = diagram.n();
  if (m < 2) throw Error(ErrorKind::invalid_argument, "reshape_2x2 needs a cube of index >= 2");
  const Subset inner = Subset{1} << (m - 2);
  Reshaped2x2 out;
  for (Subset s = 0; s < 4; ++s) {
    const Subset offset = lift(s, m);
    std::map<Subset, SpaceDescriptor> nodes;
    std::map<CubicalDiagram::ArrowKey, MorphismDescriptor> arrows;
    for (Subset j = 0; j < inner; ++j) {
      nodes.emplace(j, diagram.node(j | offset));
      for (const unsigned e : subset_elements(j)) {
        const Subset below = j & ~(Subset{1} << e);
        arrows.emplace(CubicalDiagram::ArrowKey{j, below}, diagram.arrow(j | offset, below | offset));
      }
    }
    out.nodes.emplace_back(m - 2, std::move(nodes), std::move(arrows));
    for (const unsigned b : subset_elements(s)) {
      const Subset t = s & ~(Subset{1} << b);
      auto& level = out.arrows[{s, t}];
      for (Subset j = 0; j < inner; ++j) level.emplace(j, diagram.arrow(j | offset, j | lift(t, m)));
    }
  }
  return out;
}

CubicalDiagram reassemble(const Reshaped2x2& reshaped) {
  if (reshaped.nodes.size() != 4) throw Error(ErrorKind::invalid_argument, "need four nodes");
  const unsigned m = reshaped.nodes[0].n() + 2;
  std::map<Subset, SpaceDescriptor> nodes;
  std::map<CubicalDiagram::ArrowKey, MorphismDescriptor> arrows;
  for (Subset s = 0; s < 4; ++s) {
    const auto& cube = reshaped.nodes[s];
    if (cube.n() + 2 != m) throw Error(ErrorKind::invalid_argument, "inner cubes differ in index");
    const Subset offset = lift(s, m);
    for (const auto& [j, space] : cube.nodes()) nodes.emplace(j | offset, space);
    for (const auto& [key, arrow] : cube.arrows()) {
      arrows.emplace(CubicalDiagram::ArrowKey{key.first | offset, key.second | offset}, arrow);
    }
  }
  for (const auto& [key, level] : reshaped.arrows) {
    for (const auto& [j, arrow] : level) {
      arrows.emplace(CubicalDiagram::ArrowKey{j | lift(key.first, m), j | lift(key.second, m)}, arrow);
    }
  }
  return CubicalDiagram(m, std::move(nodes), std::move(arrows));
}

namespace {

struct EmbeddedComponent {
  std::string witness;
  unsigned codim = 0;
};

std::vector<EmbeddedComponent> collect(const CubicalDiagram& x, const CubicalDiagram& y,
                                       const EmbeddingMap& map, const std::string& label) {
  for (const auto& [s, entries] : map) {
    if (s == 0 || s > y.full()) {
      throw Error(ErrorKind::unknown_reference, label + " embedding at invalid index " + subset_to_string(s));
    }
    for (const auto& [component, embedding] : entries) {
      if (!y.node(s).find(component)) {
        throw Error(ErrorKind::unknown_reference, label + "_Y" + subset_to_string(s) +
                                                      " has no component " + component);
      }
    }
  }
  std::vector<EmbeddedComponent> out;
  for (Subset s = 1; s <= y.full(); ++s) {
    for (const auto& component : y.node(s).components) {
      const std::string where = label + "_Y" + subset_to_string(s) + ":" + component.name;
      const auto it = map.find(s);
      if (it == map.end() || !it->second.count(component.name)) {
        throw Error(ErrorKind::missing_datum, "no codimension datum for " + where);
      }
      const ComponentEmbedding& e = it->second.at(component.name);
      if (!x.node(s).find(e.host)) {
        throw Error(ErrorKind::unknown_reference, where + " embeds into unknown component " + e.host);
      }
      out.push_back({where + " -> " + e.host + " codim " + std::to_string(e.codim), e.codim});
    }
  }
  return out;
}

}  // namespace

GysinVerdict check_gysin_hypotheses(const CubicalDiagram& dx, const CubicalDiagram& dy,
                               const CubicalDiagram& sx, const CubicalDiagram& sy,
                               const EmbeddingData& embeddings, int dim_y, int dim_sigma_x) {
  if (dx.n() != dy.n()) throw Error(ErrorKind::invalid_argument, "D_X and D_Y differ in cube index");
  if (sx.n() != sy.n()) {
    throw Error(ErrorKind::invalid_argument, "Sigma_X and Sigma_Y differ in cube index");
  }
  if (dim_y < 0 || dim_sigma_x < -1) throw Error(ErrorKind::invalid_argument, "bad dimensions");

  GysinVerdict verdict;
  verdict.dim_y = dim_y;
  const auto d = collect(dx, dy, embeddings.d, "D");
  const auto sigma = collect(sx, sy, embeddings.sigma, "Sigma");

  for (const auto& e : d) {
    if (e.codim != 1) {
      verdict.failed_hypothesis = "I";
      verdict.witness = e.witness;
      return verdict;
    }
  }
  unsigned c = 1;
  if (!sigma.empty()) {
    c = sigma.front().codim;
    for (const auto& e : sigma) {
      if (e.codim > 1 || e.codim != c) {
        verdict.failed_hypothesis = "II";
        verdict.witness = e.witness;
        return verdict;
      }
    }
  }

  verdict.holds = true;
  verdict.c = c;
  verdict.valid_from = c == 1 ? 0 : 2 * dim_sigma_x + 2;
  verdict.surjection_at_dim_y = dim_y >= verdict.valid_from;
  const std::string dy_text = std::to_string(dim_y);
  const int iso_above = std::max(dim_y, verdict.valid_from - 1);
  verdict.gysin = "H^k(Y) -> H^{k+2}(X): iso for k>" + std::to_string(iso_above);
  if (verdict.surjection_at_dim_y) verdict.gysin += ", surjection at k=" + dy_text;
  if (c == 0) verdict.gysin += ", valid for k>" + std::to_string(2 * dim_sigma_x + 1);
  return verdict;
}

}  // namespace linarr
