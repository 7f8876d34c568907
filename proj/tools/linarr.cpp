// linarr: command-line front end. Prints one JSON report per run.
#include <openssl/evp.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "linarr/alexander.hpp"
#include "linarr/error.hpp"
#include "linarr/graded.hpp"
#include "linarr/json_io.hpp"
#include "linarr/multinet.hpp"
#include "linarr/resonance.hpp"
#include "linarr/spectrum.hpp"

namespace {

using linarr::Json;

constexpr const char* kVersion = "linarr/0.1.0";

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Session {
 public:
  explicit Session(std::string command) : command_(std::move(command)) { digest_input_ = command_; }

  std::string read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    digest_input_ += '\0';
    digest_input_ += buf.str();
    return buf.str();
  }

  Json read_json(const std::string& path) {
    const std::string text = read(path);
    try {
      return Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw linarr::Error(linarr::ErrorKind::parse, path + ": " + e.what());
    }
  }

  Json report(Json results) const {
    Json out;
    out["command"] = command_;
    out["input_digest"] = "sha256:" + sha256(digest_input_);
    out["version"] = kVersion;
    out["results"] = std::move(results);
    return out;
  }

 private:
  static std::string sha256(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < len; ++i) {
      out += hex[md[i] >> 4];
      out += hex[md[i] & 15];
    }
    return out;
  }

  std::string command_;
  std::string digest_input_;
};

std::vector<std::string> split_vars(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw linarr::Error(linarr::ErrorKind::parse, "empty variable name");
    out.push_back(item);
  }
  return out;
}

std::uint64_t search_cap() {
  const char* env = std::getenv("LINARR_SEARCH_CAP");
  if (!env || !*env) return linarr::kDefaultSearchCap;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (*end != '\0' || value == 0) {
    throw linarr::Error(linarr::ErrorKind::invalid_argument, "LINARR_SEARCH_CAP must be a positive integer");
  }
  return value;
}

Json lattice_command(Session& s, const std::string& file) {
  const auto input = linarr::arrangement_from_json(s.read_json(file));
  Json out;
  out["form"] = input.form;
  if (input.arrangement) {
    out["arrangement"] = linarr::arrangement_to_json(*input.arrangement);
    out["flats"] = linarr::flats_to_json(*input.arrangement);
    const auto cover = linarr::is_bipencil(*input.arrangement);
    out["bipencil"] = cover ? Json{{"P1", linarr::triple_to_json(cover->p1.point.coords())},
                                   {"P2", linarr::triple_to_json(cover->p2.point.coords())},
                                   {"p", cover->p},
                                   {"q", cover->q}}
                            : Json(nullptr);
  }
  out["lattice"] = linarr::lattice_to_json(input.lattice);
  return out;
}

Json multinet_command(Session& s, const std::string& file, std::size_t k, unsigned mmax) {
  const auto input = linarr::arrangement_from_json(s.read_json(file));
  const auto matches = linarr::search_multinets(input.lattice, k, mmax, search_cap());
  Json list = Json::array();
  for (const auto& m : matches) {
    list.push_back({{"candidate", linarr::candidate_to_json(m.candidate)},
                    {"verdict", linarr::verdict_to_json(m.verdict)}});
  }
  return {{"k", k}, {"max_multiplicity", mmax}, {"count", matches.size()}, {"multinets", list}};
}

Json betti_command(Session& s, const std::string& file, std::uint64_t p) {
  const auto input = linarr::arrangement_from_json(s.read_json(file));
  return linarr::betti_to_json(linarr::aomoto_betti(input.lattice, p));
}

Json milnor_command(const std::string& poly, const std::string& vars, unsigned degree,
                    const std::vector<unsigned>& weights) {
  const linarr::Poly f = linarr::parse_poly(poly, split_vars(vars));
  linarr::GradedQuotientOptions options;
  options.weights = weights;
  return linarr::graded_to_json(linarr::graded_quotient_dim(f, degree, options));
}

Json spectrum_command(const std::string& poly, const std::string& vars,
                      std::vector<unsigned> weights, unsigned degree) {
  const linarr::Poly f = linarr::parse_poly(poly, split_vars(vars));
  if (weights.empty()) weights.assign(f.variable_count(), 1);
  if (degree == 0) {
    const auto d = f.weighted_degree(weights);
    if (!d) {
      throw linarr::Error(linarr::ErrorKind::invalid_argument, "polynomial is not weighted homogeneous");
    }
    degree = *d;
  }
  const auto entries = linarr::steenbrink_spectrum(f, degree, weights);
  const unsigned top = static_cast<unsigned>(f.variable_count()) - 1;
  return {{"degree", degree},
          {"weights", weights},
          {"spectrum", linarr::spectrum_to_json(entries)},
          {"table", linarr::table_to_json(linarr::spectrum_to_table(entries, top))}};
}

Json join_command(Session& s, const std::string& a, const std::string& b) {
  const auto ta = linarr::table_from_json(s.read_json(a));
  const auto tb = linarr::table_from_json(s.read_json(b));
  return {{"table", linarr::table_to_json(linarr::thom_sebastiani_join(ta, tb))}};
}

Json alexander_command(Session& s, const std::string& file) {
  const auto input = linarr::arrangement_from_json(s.read_json(file));
  if (!input.arrangement) {
    throw linarr::Error(linarr::ErrorKind::not_bipencil, "a combinatorial lattice carries no pencil data");
  }
  const auto report = input.bipencil ? linarr::alexander_bipencil(*input.bipencil)
                                     : linarr::alexander_bipencil(*input.arrangement);
  const linarr::PencilFamily family(report.pencil);
  Json loci = Json::array();
  loci.push_back(linarr::singular_locus_to_json(
      linarr::singular_locus(family, {linarr::LocusSelector::Kind::total_space, {}})));
  loci.push_back(linarr::singular_locus_to_json(
      linarr::singular_locus(family, {linarr::LocusSelector::Kind::fiber, report.s})));
  loci.push_back(linarr::singular_locus_to_json(
      linarr::singular_locus(family, {linarr::LocusSelector::Kind::fiber_at_infinity, {}})));
  Json special = Json::array();
  for (const auto& p : linarr::special_fibers(family)) special.push_back(p.to_string());

  Json out = linarr::alexander_to_json(report);
  out["special_fibers"] = special;
  out["singular_loci"] = loci;
  out["conjectural"] = linarr::conjectural_to_json(linarr::conjectural_alexander(input.lattice));
  return out;
}

struct CubeArgs {
  std::string dx, dy, sx, sy, embeddings;
  int dim_y = 0;
  int dim_sigma_x = 0;
};

Json cube_command(Session& s, const CubeArgs& a) {
  const auto dx = linarr::diagram_from_json(s.read_json(a.dx));
  const auto dy = linarr::diagram_from_json(s.read_json(a.dy));
  const auto sx = linarr::diagram_from_json(s.read_json(a.sx));
  const auto sy = linarr::diagram_from_json(s.read_json(a.sy));
  const auto emb = linarr::embeddings_from_json(s.read_json(a.embeddings));
  return linarr::gysin_to_json(linarr::check_gysin_hypotheses(dx, dy, sx, sy, emb, a.dim_y, a.dim_sigma_x));
}

Json error_object(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}, {"version", kVersion}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for line arrangements, Milnor fibers and cubical diagrams", "linarr"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string file, file_b, poly, vars;
  std::size_t k = 3;
  unsigned mmax = 1;
  std::uint64_t prime = 2;
  unsigned degree = 0;
  std::vector<unsigned> weights;
  CubeArgs cube;

  auto* lattice = app.add_subcommand("lattice", "Intersection lattice and bi-pencil detection");
  lattice->add_option("file", file, "Arrangement JSON")->required();

  auto* multinet = app.add_subcommand("multinet", "Exhaustive weak multinet search");
  multinet->add_option("file", file, "Arrangement JSON")->required();
  multinet->add_option("--k", k, "Number of classes")->check(CLI::Range(3, 64));
  multinet->add_option("--mmax", mmax, "Largest line multiplicity")->check(CLI::Range(1, 16));

  auto* betti = app.add_subcommand("betti", "Mod-p Aomoto-Betti number");
  betti->add_option("file", file, "Arrangement JSON")->required();
  betti->add_option("--p", prime, "Prime")->required();

  auto* milnor = app.add_subcommand("milnor", "Graded piece of the Milnor algebra");
  milnor->add_option("--poly", poly, "Polynomial")->required();
  milnor->add_option("--vars", vars, "Comma-separated variables")->required();
  milnor->add_option("--degree", degree, "Graded degree")->required();
  milnor->add_option("--weights", weights, "Variable weights")->delimiter(',');

  auto* spectrum = app.add_subcommand("spectrum", "Steenbrink spectrum of a weighted homogeneous polynomial");
  spectrum->add_option("--poly", poly, "Polynomial")->required();
  spectrum->add_option("--vars", vars, "Comma-separated variables")->required();
  spectrum->add_option("--weights", weights, "Variable weights")->delimiter(',');
  spectrum->add_option("--degree", degree, "Weighted degree (default: detected)");

  auto* join = app.add_subcommand("join", "Thom-Sebastiani join of two monodromy tables");
  join->add_option("a", file, "Table JSON file")->required();
  join->add_option("b", file_b, "Table JSON file")->required();

  auto* alexander = app.add_subcommand("alexander", "Alexander polynomial of a bi-pencil arrangement");
  alexander->add_option("file", file, "Arrangement JSON")->required();

  auto* cube_cmd = app.add_subcommand("cube", "Cubical diagram tools");
  cube_cmd->require_subcommand(1);
  auto* check = cube_cmd->add_subcommand("check", "Check the codimension hypotheses for Gysin maps");
  check->add_option("--dx", cube.dx)->required();
  check->add_option("--dy", cube.dy)->required();
  check->add_option("--sx", cube.sx)->required();
  check->add_option("--sy", cube.sy)->required();
  check->add_option("--embeddings", cube.embeddings)->required();
  check->add_option("--dim-y", cube.dim_y)->required();
  check->add_option("--dim-sigma-x", cube.dim_sigma_x)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::string command;
  for (int i = 1; i < argc; ++i) command += (i > 1 ? " " : "") + std::string(argv[i]);
  Session session(command);

  try {
    Json results;
    if (lattice->parsed()) results = lattice_command(session, file);
    else if (multinet->parsed()) results = multinet_command(session, file, k, mmax);
    else if (betti->parsed()) results = betti_command(session, file, prime);
    else if (milnor->parsed()) results = milnor_command(poly, vars, degree, weights);
    else if (spectrum->parsed()) results = spectrum_command(poly, vars, weights, degree);
    else if (join->parsed()) results = join_command(session, file, file_b);
    else if (alexander->parsed()) results = alexander_command(session, file);
    else results = cube_command(session, cube);
    std::cout << session.report(std::move(results)).dump(2) << '\n';
    return 0;
  } catch (const linarr::Error& e) {
    std::cout << error_object(std::string(linarr::to_string(e.kind())), e.what()).dump(2) << '\n';
  } catch (const IoError& e) {
    std::cout << error_object("io", e.what()).dump(2) << '\n';
  } catch (const nlohmann::json::exception& e) {
    std::cout << error_object("parse", e.what()).dump(2) << '\n';
  }
  return 1;
}
