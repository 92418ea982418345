// Command-line front end: parses codes, evaluates skein invariants, chord
// diagrams, Lie weights and Kontsevich integrals, and cross-validates them.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "vassiliev/chords.hpp"
#include "vassiliev/codes.hpp"
#include "vassiliev/error.hpp"
#include "vassiliev/fixtures.hpp"
#include "vassiliev/kontsevich.hpp"
#include "vassiliev/lie.hpp"
#include "vassiliev/samples.hpp"
#include "vassiliev/skein.hpp"

using namespace vassiliev;
using nlohmann::json;

namespace {

using Rows = std::vector<std::vector<std::string>>;

struct Result {
  json data;
  Rows csv;  // header row first; empty means "flatten the JSON"
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error("cli", "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  return text;
}

std::string number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string matching_text(const std::vector<int>& partner) {
  std::string out = "[";
  for (std::size_t k = 0; k < partner.size(); ++k) out += (k ? "," : "") + std::to_string(partner[k]);
  return out + "]";
}

json poly_json(const LaurentPoly& p) {
  json terms = json::object();
  for (const auto& [e, c] : p.terms()) terms[std::to_string(e)] = c;
  return {{"text", p.to_string()}, {"terms", terms}};
}

Quadrature quadrature(int steps, double epsilon, int threads) {
  Quadrature q;
  q.steps = steps;
  q.epsilon = epsilon;
  q.threads = threads;
  return q;
}

json quadrature_json(const Quadrature& q) {
  return {{"steps", q.steps}, {"coarse_steps", q.steps / 2}, {"epsilon", q.epsilon},
          {"cutoffs", {q.epsilon, q.epsilon / 2, q.epsilon / 4}}};
}

const ChordDiagram& crossed() {
  static const ChordDiagram d = ChordDiagram::from_word({0, 1, 0, 1});
  return d;
}

const ChordDiagram& parallel() {
  static const ChordDiagram d = ChordDiagram::from_word({0, 0, 1, 1});
  return d;
}

// ---- commands -------------------------------------------------------------------

Result cmd_parse(const std::string& input, bool literal) {
  std::string text = literal ? input : read_text(input);
  SingularDiagram d = parse_code(text);
  json data = {{"input", input}, {"diagram", to_json(d)}, {"gauss", to_gauss(d)}, {"pd", to_pd(d)},
               {"components", d.component_count()}, {"crossings", d.crossing_count()}, {"nodes", d.node_count()}};
  data["writhe"] = d.node_count() == 0 ? json(writhe(d)) : json(nullptr);
  return {data, {}};
}

Result cmd_conway(const std::string& input) {
  SingularDiagram d = parse_code(read_text(input));
  LaurentPoly p = conway(d);
  Result r{{{"input", input}, {"value", p.to_string()}, {"terms", poly_json(p)["terms"]}}, {{"exponent", "coefficient"}}};
  for (const auto& [e, c] : p.terms()) r.csv.push_back({std::to_string(e), std::to_string(c)});
  return r;
}

Result cmd_v2(const std::string& input) {
  SingularDiagram d = parse_code(read_text(input));
  std::int64_t v = v2(d);
  return {{{"input", input}, {"value", v}, {"v2", v}}, {}};
}

Result cmd_vassiliev_eval(const std::string& input, std::int64_t a, std::int64_t b, std::int64_t c,
                          const std::string& invariant) {
  SingularDiagram g = parse_code(read_text(input));
  json data = {{"input", input}, {"a", a}, {"b", b}, {"c", c}, {"invariant", invariant}, {"nodes", g.node_count()}};
  if (invariant == "conway") {
    Invariant<LaurentPoly> V = [](const SingularDiagram& d) { return conway(d); };
    auto report = extend_invariant<LaurentPoly>(V, a, b, c, g);
    data["value"] = report.value.to_string();
    data["terms"] = poly_json(report.value)["terms"];
    data["resolutions"] = report.resolution_count;
  } else {
    Invariant<std::int64_t> V = [](const SingularDiagram& d) { return v2(d); };
    auto report = extend_invariant<std::int64_t>(V, a, b, c, g);
    data["value"] = report.value;
    data["resolutions"] = report.resolution_count;
  }
  return {data, {}};
}

Result cmd_chords_enumerate(int m) {
  auto e = enumerate_chord_diagrams(m);
  json raw = json::array(), classes = json::array();
  Result r;
  r.csv = {{"kind", "matching"}};
  for (const auto& p : raw_matchings(m)) {
    raw.push_back(p);
    r.csv.push_back({"raw", matching_text(p)});
  }
  for (const auto& d : e.classes) {
    classes.push_back(d.partner());
    r.csv.push_back({"class", matching_text(d.partner())});
  }
  r.data = {{"degree", m}, {"raw_count", e.raw_count}, {"raw", raw}, {"classes", classes}};
  return r;
}

Result cmd_chords_4t(int m) {
  auto rels = four_term_relations(m);
  json list = json::array();
  Result r;
  r.csv = {{"relation", "sign", "matching"}};
  for (std::size_t i = 0; i < rels.size(); ++i) {
    json terms = json::array();
    for (int k = 0; k < 4; ++k) {
      terms.push_back({{"sign", rels[i].signs[k]}, {"diagram", rels[i].diagrams[k].partner()}});
      r.csv.push_back({std::to_string(i), std::to_string(rels[i].signs[k]), matching_text(rels[i].diagrams[k].partner())});
    }
    list.push_back({{"terms", terms}});
  }
  r.data = {{"degree", m}, {"count", rels.size()}, {"relations", list}};
  return r;
}

Result cmd_weights(const std::string& algebra, int degree) {
  LieAlgebraData lie = lie_algebra_by_name(algebra);
  WeightSystem ws = weight_system(lie, degree);
  json weights = json::object();
  Result r;
  r.csv = {{"diagram", "re", "im"}};
  for (const auto& [d, w] : ws.table) {
    weights[matching_text(d.partner())] = {{"re", w.real()}, {"im", w.imag()}};
    r.csv.push_back({matching_text(d.partner()), number(w.real()), number(w.imag())});
  }
  auto check = satisfies_4T([&](const ChordDiagram& d) { return ws.table.at(d); }, degree >= 2 ? degree : 2);
  r.data = {{"algebra", lie.name}, {"dimension", lie.dimension}, {"representation", lie.representation},
            {"degree", degree}, {"weights", weights}};
  r.data["four_term"] = degree >= 2 ? json(check.satisfied) : json(nullptr);
  return r;
}

Result table_result(const std::string& input, const MorseKnot& mk, const CoefficientTable& table) {
  Result r;
  r.data = to_json(table);
  r.data["input"] = input;
  r.data["morse"] = mk.summary();
  r.csv = {{"diagram", "circle_sizes", "degree", "re", "im", "error", "converged", "placements"}};
  for (const auto& [d, e] : table.entries)
    r.csv.push_back({matching_text(d.partner()), matching_text(d.circle_sizes()), std::to_string(d.degree()),
                     number(e.value.real()), number(e.value.imag()), number(e.error), e.converged ? "true" : "false",
                     std::to_string(e.placements)});
  return r;
}

Result cmd_kontsevich(const std::string& input, int degree, const Quadrature& q, bool raw) {
  MorseKnot mk(load_curve(input));
  CoefficientTable table = degree_coefficients(mk, degree, q);
  if (!raw) table = hump_normalize(table);
  return table_result(input, mk, table);
}

Result cmd_compare(const std::string& curve_path, const std::string& code_path, int degree, const Quadrature& q) {
  if (degree != 2) throw Error("cli", "compare supports degree 2 (the v2 cross-check)");
  SingularDiagram knot = parse_code(read_text(code_path));
  std::int64_t skein = v2(knot);

  MorseKnot mk(load_curve(curve_path));
  if (mk.component_count() != 1) throw Error("cli", "compare needs a one-component curve");
  auto table = hump_normalize(degree_coefficients(mk, 2, q));
  MorseKnot round(round_circle());
  auto base = hump_normalize(degree_coefficients(round, 2, q));

  Complex dx = table.coefficient(crossed()) - base.coefficient(crossed());
  double integral_error = table.error(crossed()) + base.error(crossed());

  // The v2 weight system read off singular knots realizing each degree-2 diagram.
  Invariant<std::int64_t> V = [](const SingularDiagram& d) { return v2(d); };
  auto realize_crossed = parse_gauss("N1+N2+O3+N1+N2+U3+");
  auto realize_parallel = parse_gauss("N1+N1+N2+N2+");
  std::int64_t w_crossed = vassiliev_eval<std::int64_t>(V, realize_crossed);
  std::int64_t w_parallel = vassiliev_eval<std::int64_t>(V, realize_parallel);
  Complex dp = table.coefficient(parallel()) - base.coefficient(parallel());
  Complex pairing = static_cast<double>(w_crossed) * dx + static_cast<double>(w_parallel) * dp;
  double pairing_error =
      std::abs(w_crossed) * integral_error + std::abs(w_parallel) * (table.error(parallel()) + base.error(parallel()));

  const double tolerance = 5e-2;
  Result r;
  r.data = {{"curve", curve_path},
            {"code", code_path},
            {"degree", degree},
            {"skein_v2", skein},
            {"integral", {{"re", dx.real()}, {"im", dx.imag()}, {"error", integral_error}}},
            {"weight_system", {{"crossed", w_crossed}, {"parallel", w_parallel}}},
            {"pairing", {{"re", pairing.real()}, {"im", pairing.imag()}, {"error", pairing_error}}},
            {"difference", std::abs(dx - Complex(static_cast<double>(skein), 0))},
            {"tolerance", tolerance},
            {"agree", std::abs(dx - Complex(static_cast<double>(skein), 0)) < tolerance &&
                          std::abs(pairing - Complex(static_cast<double>(skein), 0)) < tolerance},
            {"converged", table.converged() && base.converged()},
            {"maxima", mk.maxima()},
            {"quadrature", quadrature_json(q)}};
  r.csv = {{"quantity", "re", "im", "error"},
           {"skein_v2", std::to_string(skein), "0", "0"},
           {"integral", number(dx.real()), number(dx.imag()), number(integral_error)},
           {"pairing", number(pairing.real()), number(pairing.imag()), number(pairing_error)}};
  return r;
}

Result cmd_fixture(const std::string& name, int samples) {
  return {curve_to_json(fixture_by_name(name, samples)), {}};
}

Result cmd_samples(std::uint64_t seed, int nodes, int count, int max_letters) {
  auto diagrams = random_singular_knots(seed, static_cast<std::size_t>(count), {nodes, max_letters, 2, 4});
  json list = json::array();
  Result r;
  r.csv = {{"index", "gauss"}};
  for (std::size_t i = 0; i < diagrams.size(); ++i) {
    list.push_back(to_gauss(diagrams[i]));
    r.csv.push_back({std::to_string(i), to_gauss(diagrams[i])});
  }
  r.data = {{"seed", seed}, {"nodes", nodes}, {"max_letters", max_letters}, {"samples", list}};
  return r;
}

// ---- output ---------------------------------------------------------------------

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string to_csv(const Result& r) {
  Rows rows = r.csv;
  if (rows.empty()) {
    rows.push_back({"key", "value"});
    for (const auto& [k, v] : r.data.items()) rows.push_back({k, v.is_string() ? v.get<std::string>() : v.dump()});
  }
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) out += (k ? "," : "") + csv_field(row[k]);
    out += "\n";
  }
  return out;
}

void emit(const Result& r, const std::string& format, const std::string& output) {
  std::string text = format == "csv" ? to_csv(r) : r.data.dump(2) + "\n";
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output);
  if (!out) throw Error("cli", "cannot write '" + output + "'");
  out << text;
}

json error_json(const std::string& module, const std::string& message, std::optional<std::size_t> position) {
  return {{"error", {{"module", module}, {"message", message}, {"position", position ? json(*position) : json(nullptr)}}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-type knot invariants by skein recursion, Lie weight systems and Kontsevich integrals"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output, format = "json";
  std::uint64_t seed = 1;
  app.add_option("--output,-o", output, "Write the result to this file instead of stdout");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", seed, "Seed for random sample generators");

  std::string input, second;
  bool literal = false, raw = false;
  std::int64_t a = 1, b = -1, c = 0;
  std::string invariant = "conway", algebra = "su2", fixture;
  int degree = 2, steps = 2000, threads = 0, samples = 400, nodes = 1, count = 10, max_letters = 8, m = 2;
  double epsilon = 1e-3;

  auto* parse = app.add_subcommand("parse", "Parse a Gauss or PD code and print the diagram");
  parse->add_option("input", input, "Code file, '-' for stdin, or the code itself with --code")->required();
  parse->add_flag("--code", literal, "Treat the argument as the code text");

  auto* conway_cmd = app.add_subcommand("conway", "Conway polynomial by skein recursion");
  conway_cmd->add_option("input", input, "Code file")->required();

  auto* v2_cmd = app.add_subcommand("v2", "Coefficient of z^2 of the Conway polynomial of a knot");
  v2_cmd->add_option("input", input, "Code file")->required();

  auto* eval = app.add_subcommand("vassiliev-eval", "Sum over node resolutions weighted by a, b, c");
  eval->add_option("input", input, "Code file")->required();
  eval->add_option("--a", a, "Weight of positive resolutions");
  eval->add_option("--b", b, "Weight of negative resolutions");
  eval->add_option("--c", c, "Weight of smoothings");
  eval->add_option("--invariant", invariant, "Base invariant")->check(CLI::IsMember({"conway", "v2"}));

  auto* chords = app.add_subcommand("chords", "Chord diagram enumeration and four-term relations");
  chords->require_subcommand(1);
  auto* enumerate = chords->add_subcommand("enumerate", "All chord diagrams of degree m");
  enumerate->add_option("m", m, "Degree")->required()->check(CLI::Range(0, 8));
  auto* fourt = chords->add_subcommand("4t", "Four-term relations of degree m");
  fourt->add_option("m", m, "Degree")->required()->check(CLI::Range(0, 6));

  auto* weights = app.add_subcommand("weights", "Lie-algebra weight system");
  weights->add_option("--algebra", algebra, "su2 or glN");
  weights->add_option("--degree", degree, "Degree")->check(CLI::Range(0, 4));

  auto* kont = app.add_subcommand("kontsevich", "Kontsevich integral coefficients of a curve");
  kont->add_option("file", input, "Curve JSON file")->required()->check(CLI::ExistingFile);
  kont->add_option("--degree", degree, "Maximum degree")->check(CLI::Range(0, 3));
  kont->add_option("--steps", steps, "Midpoint nodes per slab")->check(CLI::Range(16, 1000000));
  kont->add_option("--epsilon", epsilon, "Cutoff relative to the slab height")->check(CLI::Range(1e-9, 0.2));
  kont->add_option("--threads", threads, "Worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  kont->add_flag("--raw", raw, "Skip the hump normalization");

  auto* compare = app.add_subcommand("compare", "Cross-validate v2: skein, integral and weight-system pairing");
  compare->add_option("curve", input, "Curve JSON file")->required()->check(CLI::ExistingFile);
  compare->add_option("code", second, "Knot code file")->required()->check(CLI::ExistingFile);
  compare->add_option("--degree", degree, "Degree (2)");
  compare->add_option("--steps", steps, "Midpoint nodes per slab")->check(CLI::Range(16, 1000000));
  compare->add_option("--epsilon", epsilon, "Cutoff relative to the slab height")->check(CLI::Range(1e-9, 0.2));
  compare->add_option("--threads", threads, "Worker threads (0: all cores)")->check(CLI::NonNegativeNumber);

  auto* fixture_cmd = app.add_subcommand("fixture", "Write a built-in curve fixture as JSON");
  fixture_cmd->add_option("name", fixture, "Fixture name")->required()->check(CLI::IsMember(fixture_names()));
  fixture_cmd->add_option("--samples", samples, "Samples per component")->check(CLI::Range(8, 100000));

  auto* samples_cmd = app.add_subcommand("samples", "Random singular knot diagrams (braid closures)");
  samples_cmd->add_option("--nodes", nodes, "Nodes per diagram")->check(CLI::Range(0, 8));
  samples_cmd->add_option("--count", count, "Number of diagrams")->check(CLI::Range(1, 100000));
  samples_cmd->add_option("--max-letters", max_letters, "Crossings plus nodes")->check(CLI::Range(1, 16));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << error_json("cli", e.what(), std::nullopt).dump(2) << "\n";
    return 2;
  }

  try {
    Quadrature q = quadrature(steps, epsilon, threads);
    Result result;
    if (*parse) result = cmd_parse(input, literal);
    else if (*conway_cmd) result = cmd_conway(input);
    else if (*v2_cmd) result = cmd_v2(input);
    else if (*eval) result = cmd_vassiliev_eval(input, a, b, c, invariant);
    else if (*enumerate) result = cmd_chords_enumerate(m);
    else if (*fourt) result = cmd_chords_4t(m);
    else if (*weights) result = cmd_weights(algebra, degree);
    else if (*kont) result = cmd_kontsevich(input, degree, q, raw);
    else if (*compare) result = cmd_compare(input, second, degree, q);
    else if (*fixture_cmd) result = cmd_fixture(fixture, samples);
    else if (*samples_cmd) result = cmd_samples(seed, nodes, count, max_letters);
    emit(result, format, output);
  } catch (const Error& e) {
    std::cout << error_json(e.module(), e.what(), e.position()).dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cout << error_json("cli", e.what(), std::nullopt).dump(2) << "\n";
    return 1;
  }
  return 0;
}
