#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "linarr/alexander.hpp"
#include "linarr/arrangement.hpp"
#include "linarr/cubical.hpp"
#include "linarr/graded.hpp"
#include "linarr/lattice.hpp"
#include "linarr/multinet.hpp"
#include "linarr/resonance.hpp"
#include "linarr/spectrum.hpp"

namespace linarr {

using Json = nlohmann::ordered_json;

/// One of the three accepted arrangement files:
///   {"lines": [[a, b, c], ...]}
///   {"bipencil": {"lambdas": [...], "mus": [...]}}
///   {"lattice": {"lines": N, "points": [[i, j, ...], ...]}}
/// Coefficients are integers or "n/d" strings.
struct ArrangementInput {
  std::string form;  // "lines", "bipencil" or "lattice"
  std::optional<Arrangement> arrangement;
  std::optional<BiPencil> bipencil;
  Lattice lattice;
};

ArrangementInput arrangement_from_json(const Json& j);
Json arrangement_to_json(const Arrangement& arrangement);
Json bipencil_to_json(const BiPencil& bipencil);
Json lattice_to_json(const Lattice& lattice);

/// Parses an integer or a "n/d" string.
Rational rational_from_json(const Json& j);
Json rational_to_json(const Rational& r);
Json triple_to_json(const Triple& t);

Json flats_to_json(const Arrangement& arrangement);
Json verdict_to_json(const MultinetVerdict& verdict);
Json candidate_to_json(const MultinetCandidate& candidate);
Json betti_to_json(const AomotoBettiReport& report);
Json graded_to_json(const GradedQuotientReport& report);
Json spectrum_to_json(const std::vector<SpectrumEntry>& entries);

/// {"<degree>": {"<exponent>": multiplicity, ...}, ...}
Json table_to_json(const MonodromyTable& table);
MonodromyTable table_from_json(const Json& j);

Json cyclo_to_json(const CycloPoly& poly);
Json alexander_to_json(const AlexanderReport& report);
Json conjectural_to_json(const ConjecturalReport& report);
Json singular_locus_to_json(const SingularLocusReport& report);

/// {"n": N, "nodes": {"{0,1}": {...}}, "arrows": {"{0,1}->{0}": {...}}}
CubicalDiagram diagram_from_json(const Json& j);
Json diagram_to_json(const CubicalDiagram& diagram);
/// {"d": {"{0}": {"F": {"host": "E", "codim": 1}}}, "sigma": {...}}
EmbeddingData embeddings_from_json(const Json& j);
Json gysin_to_json(const GysinVerdict& verdict);

}  // namespace linarr
