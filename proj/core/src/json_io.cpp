#include "linarr/json_io.hpp"

#include "linarr/error.hpp"

namespace linarr {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorKind::parse, what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t index_from_json(const Json& j) {
  if (!j.is_number_unsigned()) schema("expected a nonnegative integer index");
  return j.get<std::size_t>();
}

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) schema("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

Json component_list(const std::vector<Component>& components) {
  Json out = Json::array();
  for (const auto& c : components) out.push_back({{"name", c.name}, {"dimension", c.dimension}});
  return out;
}

SpaceDescriptor space_from_json(const Json& j) {
  SpaceDescriptor s;
  s.name = member(j, "name").get<std::string>();
  s.dimension = member(j, "dimension").get<int>();
  if (j.contains("smooth")) s.smooth = j.at("smooth").get<bool>();
  if (j.contains("components")) {
    for (const auto& c : j.at("components")) {
      s.components.push_back({member(c, "name").get<std::string>(), member(c, "dimension").get<int>()});
    }
  }
  return s;
}

EmbeddingMap embedding_map_from_json(const Json& j) {
  EmbeddingMap out;
  if (!j.is_object()) schema("embedding data must be an object");
  for (const auto& [key, entries] : j.items()) {
    auto& level = out[parse_subset(key)];
    for (const auto& [component, e] : entries.items()) {
      const int codim = member(e, "codim").get<int>();
      if (codim < 0) schema("negative codimension for " + component);
      level[component] = {member(e, "host").get<std::string>(), static_cast<unsigned>(codim)};
    }
  }
  return out;
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  schema("expected an integer or a \"n/d\" string, got " + j.dump());
}

Json rational_to_json(const Rational& r) { return to_fraction_string(r); }

Json triple_to_json(const Triple& t) {
  return Json::array({rational_to_json(t[0]), rational_to_json(t[1]), rational_to_json(t[2])});
}

ArrangementInput arrangement_from_json(const Json& j) {
  if (!j.is_object()) schema("arrangement file must be a JSON object");
  const int forms = static_cast<int>(j.contains("lines")) + static_cast<int>(j.contains("bipencil")) +
                    static_cast<int>(j.contains("lattice"));
  if (forms != 1) schema("arrangement needs exactly one of 'lines', 'bipencil', 'lattice'");

  if (j.contains("lines")) {
    const Json& lines = j.at("lines");
    if (!lines.is_array()) schema("'lines' must be an array");
    std::vector<Line> parsed;
    for (const auto& l : lines) {
      if (!l.is_array() || l.size() != 3) schema("each line needs three coefficients");
      parsed.emplace_back(rational_from_json(l[0]), rational_from_json(l[1]), rational_from_json(l[2]));
    }
    Arrangement a(std::move(parsed));
    Lattice lattice = Lattice::from_arrangement(a);
    return {"lines", std::move(a), std::nullopt, std::move(lattice)};
  }
  if (j.contains("bipencil")) {
    const Json& b = j.at("bipencil");
    BiPencil pencil = BiPencil::make(rationals_from_json(member(b, "lambdas")),
                                     rationals_from_json(member(b, "mus")));
    Arrangement a = pencil.to_arrangement();
    Lattice lattice = Lattice::from_arrangement(a);
    return {"bipencil", std::move(a), std::move(pencil), std::move(lattice)};
  }
  const Json& l = j.at("lattice");
  std::vector<std::vector<std::size_t>> points;
  const Json& listed = member(l, "points");
  if (!listed.is_array()) schema("'points' must be an array");
  for (const auto& p : listed) {
    if (!p.is_array()) schema("each point must be an array of line indices");
    std::vector<std::size_t> incident;
    for (const auto& i : p) incident.push_back(index_from_json(i));
    points.push_back(std::move(incident));
  }
  return {"lattice", std::nullopt, std::nullopt,
          Lattice::from_points(index_from_json(member(l, "lines")), std::move(points))};
}

Json arrangement_to_json(const Arrangement& arrangement) {
  Json lines = Json::array();
  for (const auto& line : arrangement.lines()) lines.push_back(triple_to_json(line.coeffs()));
  return {{"lines", lines}};
}

Json bipencil_to_json(const BiPencil& bipencil) {
  Json lambdas = Json::array();
  Json mus = Json::array();
  for (const auto& l : bipencil.lambdas) lambdas.push_back(rational_to_json(l));
  for (const auto& m : bipencil.mus) mus.push_back(rational_to_json(m));
  return {{"p", bipencil.p()}, {"q", bipencil.q()}, {"lambdas", lambdas}, {"mus", mus}};
}

Json lattice_to_json(const Lattice& lattice) {
  Json points = Json::array();
  std::map<std::size_t, std::size_t> histogram;
  for (const auto& p : lattice.points()) {
    points.push_back({{"lines", p}, {"multiplicity", p.size()}});
    ++histogram[p.size()];
  }
  Json counts = Json::object();
  for (const auto& [m, c] : histogram) counts[std::to_string(m)] = c;
  return {{"lines", lattice.line_count()}, {"points", points}, {"multiplicity_counts", counts}};
}

Json flats_to_json(const Arrangement& arrangement) {
  Json out = Json::array();
  for (const auto& flat : intersection_points(arrangement)) {
    out.push_back({{"point", triple_to_json(flat.point.coords())},
                   {"lines", flat.incident},
                   {"multiplicity", flat.multiplicity()}});
  }
  return out;
}

Json candidate_to_json(const MultinetCandidate& candidate) {
  return {{"classes", candidate.classes},
          {"multiplicity", candidate.multiplicity},
          {"base_locus", candidate.base_locus}};
}

Json verdict_to_json(const MultinetVerdict& verdict) {
  Json violations = Json::array();
  for (const auto& v : verdict.violations) {
    violations.push_back({{"axiom", v.axiom}, {"witness", v.witness}});
  }
  return {{"level", std::string(to_string(verdict.level))},
          {"weight", verdict.weight},
          {"violations", violations}};
}

Json betti_to_json(const AomotoBettiReport& report) {
  return {{"prime", report.prime}, {"dim1", report.dim1}, {"dim2", report.dim2},
          {"rank", report.rank},   {"beta", report.beta}};
}

Json graded_to_json(const GradedQuotientReport& report) {
  return {{"f", report.f},
          {"k", report.k},
          {"dim_R_k", report.dim_rk},
          {"rank", report.rank},
          {"dim_quotient", report.dim_quotient},
          {"check_prime", report.check_prime},
          {"check_rank", report.check_rank}};
}

Json spectrum_to_json(const std::vector<SpectrumEntry>& entries) {
  Json out = Json::array();
  for (const auto& e : entries) out.push_back({{"alpha", rational_to_json(e.alpha)}, {"nu", e.nu}});
  return out;
}

Json table_to_json(const MonodromyTable& table) {
  Json out = Json::object();
  for (const auto& [degree, spaces] : table.degrees()) {
    Json level = Json::object();
    for (const auto& [exponent, mult] : spaces) level[to_fraction_string(exponent)] = mult;
    out[std::to_string(degree)] = level;
  }
  return out;
}

MonodromyTable table_from_json(const Json& j) {
  if (!j.is_object()) schema("monodromy table must be an object");
  MonodromyTable table;
  for (const auto& [degree, spaces] : j.items()) {
    if (degree.empty() || degree.find_first_not_of("0123456789") != std::string::npos ||
        degree.size() > 4) {
      schema("malformed degree key '" + degree + "'");
    }
    if (!spaces.is_object()) schema("degree entry must be an object");
    for (const auto& [exponent, mult] : spaces.items()) {
      if (!mult.is_number_unsigned()) schema("multiplicity must be a nonnegative integer");
      table.add(static_cast<unsigned>(std::stoul(degree)), parse_rational(exponent),
                mult.get<unsigned>());
    }
  }
  return table;
}

Json cyclo_to_json(const CycloPoly& poly) {
  Json cyclotomic = Json::object();
  for (const auto& [k, e] : poly.cyclotomic) cyclotomic[std::to_string(k)] = e;
  Json coefficients = Json::array();
  for (const auto& c : poly.expand()) coefficients.push_back(c.get_str());
  return {{"factored", poly.factored_string()},
          {"trivial_exponent", poly.trivial_exponent},
          {"cyclotomic", cyclotomic},
          {"expanded", to_string(poly.expand())},
          {"coefficients", coefficients}};
}

Json alexander_to_json(const AlexanderReport& report) {
  Json out;
  out["pencil"] = bipencil_to_json(report.pencil);
  if (report.change) {
    Json rows = Json::array();
    for (const auto& row : *report.change) rows.push_back(triple_to_json(row));
    out["coordinate_change"] = rows;
  }
  out["s"] = rational_to_json(report.s);
  out["fiber_polynomial"] = report.fiber.to_string();
  Json dims = Json::array();
  for (const auto& d : report.invariant_dims) dims.push_back(graded_to_json(d));
  out["invariant_graded_dims"] = dims;
  Json counts = Json::object();
  for (std::size_t t = 0; t < report.counts.size(); ++t) {
    counts[std::to_string(t + 1)] = {{"count", report.counts[t].count},
                                     {"negative_degree", report.counts[t].negative_degree}};
  }
  out["invariant_counts"] = counts;
  out["bound"] = report.bound;
  out["join_table"] = table_to_json(report.join);
  out["epsilon0"] = report.epsilon0;
  out["fixed_part"] = report.fixed_part;
  out["epsilon"] = report.epsilon ? Json(*report.epsilon) : Json("inconclusive: n = 2");
  out["alexander"] = cyclo_to_json(report.result);
  return out;
}

Json conjectural_to_json(const ConjecturalReport& report) {
  return {{"label", "conjectural"},
          {"beta2", report.beta2},
          {"beta3", report.beta3},
          {"polynomial", cyclo_to_json(report.polynomial)}};
}

Json singular_locus_to_json(const SingularLocusReport& report) {
  Json components = Json::array();
  for (const auto& c : report.components) {
    Json span = Json::array();
    for (const auto& point : c.span) {
      Json coords = Json::array();
      for (const auto& x : point) coords.push_back(rational_to_json(x));
      span.push_back(coords);
    }
    components.push_back({{"label", c.label}, {"span", span}, {"type", c.type}});
  }
  return {{"surface", report.surface}, {"components", components}};
}

CubicalDiagram diagram_from_json(const Json& j) {
  const int n = member(j, "n").get<int>();
  if (n < 0) schema("cube index must be nonnegative");
  std::map<Subset, SpaceDescriptor> nodes;
  for (const auto& [key, value] : member(j, "nodes").items()) {
    if (!nodes.emplace(parse_subset(key), space_from_json(value)).second) {
      schema("node " + key + " listed twice");
    }
  }
  std::map<CubicalDiagram::ArrowKey, MorphismDescriptor> arrows;
  if (j.contains("arrows")) {
    for (const auto& [key, value] : j.at("arrows").items()) {
      const auto arrow = key.find("->");
      if (arrow == std::string::npos) schema("arrow key '" + key + "' needs '->'");
      MorphismDescriptor m;
      m.kind = parse_morphism_kind(member(value, "kind").get<std::string>());
      if (value.contains("codim")) {
        for (const auto& [component, c] : value.at("codim").items()) m.codim[component] = c.get<unsigned>();
      }
      arrows.emplace(CubicalDiagram::ArrowKey{parse_subset(key.substr(0, arrow)),
                                              parse_subset(key.substr(arrow + 2))},
                     std::move(m));
    }
  }
  return CubicalDiagram(static_cast<unsigned>(n), std::move(nodes), std::move(arrows));
}

Json diagram_to_json(const CubicalDiagram& diagram) {
  Json nodes = Json::object();
  for (const auto& [s, space] : diagram.nodes()) {
    nodes[subset_to_string(s)] = {{"name", space.name},
                                  {"dimension", space.dimension},
                                  {"components", component_list(space.components)},
                                  {"smooth", space.smooth}};
  }
  Json arrows = Json::object();
  for (const auto& [key, m] : diagram.arrows()) {
    Json entry = {{"kind", std::string(to_string(m.kind))}};
    if (!m.codim.empty()) entry["codim"] = m.codim;
    arrows[subset_to_string(key.first) + "->" + subset_to_string(key.second)] = entry;
  }
  return {{"n", diagram.n()}, {"nodes", nodes}, {"arrows", arrows}};
}

EmbeddingData embeddings_from_json(const Json& j) {
  return {embedding_map_from_json(member(j, "d")), embedding_map_from_json(member(j, "sigma"))};
}

Json gysin_to_json(const GysinVerdict& verdict) {
  Json out;
  out["holds"] = verdict.holds;
  if (verdict.holds) {
    out["c"] = *verdict.c;
    out["valid_from"] = verdict.valid_from;
    out["surjection_at_dim_y"] = verdict.surjection_at_dim_y;
    out["dim_y"] = verdict.dim_y;
    out["gysin"] = verdict.gysin;
  } else {
    out["failed_hypothesis"] = verdict.failed_hypothesis;
    out["witness"] = verdict.witness;
  }
  return out;
}

}  // namespace linarr
