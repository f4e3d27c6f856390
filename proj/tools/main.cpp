#include "supconv/averageable.hpp"
#include "supconv/combinatorics.hpp"
#include "supconv/cover.hpp"
#include "supconv/envelope.hpp"
#include "supconv/error.hpp"
#include "supconv/function_io.hpp"
#include "supconv/generators.hpp"
#include "supconv/harness.hpp"
#include "supconv/subdivision.hpp"
#include "supconv/sup_convolution.hpp"
#include "supconv/svg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace supconv;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFail = 2;

struct Globals {
  std::string format = "json";
  std::uint64_t seed = 1;
  std::string out;
};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(g.out, std::ios::binary);
  if (!file) fail(ErrorKind::InvalidInput, "cannot write " + g.out);
  file << text;
}

std::string csv(const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << '\n';
  }
  return out.str();
}

std::string joined(const Composition& c, char sep = ' ') {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? std::string(1, sep) : "") + std::to_string(c[i]);
  return out;
}

std::string opt_text(const std::optional<Rational>& r) { return r ? to_string(*r) : ""; }
Json opt_json(const std::optional<Rational>& r) { return r ? Json(to_string(*r)) : Json(nullptr); }

BaryPoint parse_point(const std::string& text) {
  RationalVector coords;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) coords.push_back(parse_rational(part));
  require(coords.size() >= 2, ErrorKind::InvalidInput, "point needs at least two coordinates");
  return BaryPoint(std::move(coords));
}

int constants_cmd(const Globals& g, int k, int n) {
  const ConstantReport c = constant_c(k, n);
  const ExtremalProfile p = extremal_profile(k, n);
  if (g.format == "csv") {
    emit(g, csv({{"k", "n", "c_sharp", "c_hypersimplex_sum", "c_power_sum", "extremal_ratio", "asymptotic_lower",
                  "constant_kind"},
                 {std::to_string(k), std::to_string(n), opt_text(c.c_sharp), to_string(c.c_hypersimplex_sum),
                  to_string(c.c_power_sum), to_string(p.ratio), opt_text(c.asymptotic_lower),
                  c.conjectural() ? "conjectural" : "sharp"}}));
    return kExitPass;
  }
  Json j;
  j["k"] = k;
  j["n"] = n;
  j["c_sharp"] = opt_json(c.c_sharp);
  j["c_hypersimplex_sum"] = to_string(c.c_hypersimplex_sum);
  j["c_power_sum"] = to_string(c.c_power_sum);
  j["extremal_ratio"] = to_string(p.ratio);
  j["asymptotic_lower"] = opt_json(c.asymptotic_lower);
  j["constant_kind"] = c.conjectural() ? "conjectural" : "sharp";
  j["value_approx"] = to_double(c.value());
  emit(g, j.dump(2) + "\n");
  return kExitPass;
}

int subdivide_cmd(const Globals& g, int k, int n, bool svg) {
  if (svg) {
    emit(g, emit_subdivision_svg(k, n));
    return kExitPass;
  }
  const auto cells = subdivide(k, n);
  if (g.format == "csv") {
    std::vector<std::vector<std::string>> rows{{"m", "v", "relative_volume", "value_on_cell"}};
    for (const auto& c : cells)
      rows.push_back({std::to_string(c.m), joined(c.v), to_string(cell_relative_volume(k, n, c)),
                      to_string(c.value_on_cell)});
    emit(g, csv(rows));
    return kExitPass;
  }
  Json j;
  j["k"] = k;
  j["n"] = n;
  j["cell_count"] = cells.size();
  Json list = Json::array();
  for (const auto& c : cells) {
    Json cell;
    cell["m"] = c.m;
    cell["v"] = c.v;
    cell["relative_volume"] = to_string(cell_relative_volume(k, n, c));
    cell["value_on_cell"] = to_string(c.value_on_cell);
    list.push_back(cell);
  }
  j["cells"] = list;
  emit(g, j.dump(2) + "\n");
  return kExitPass;
}

int classify_cmd(const Globals& g, int n, const std::string& point) {
  const BaryPoint z = parse_point(point);
  const Classification c = classify_point(z.dim(), n, z);
  if (g.format == "csv") {
    emit(g, csv({{"m", "v", "vertex_usage", "on_boundary"},
                 {std::to_string(c.m), joined(c.v), std::to_string(c.vertex_usage), c.on_boundary ? "true" : "false"}}));
    return kExitPass;
  }
  Json j;
  j["m"] = c.m;
  j["v"] = c.v;
  j["vertex_usage"] = c.vertex_usage;
  j["on_boundary"] = c.on_boundary;
  emit(g, j.dump(2) + "\n");
  return kExitPass;
}

std::string function_table_csv(const SampledFunction& f) {
  std::vector<std::vector<std::string>> rows{{"point", "value"}};
  for (std::size_t i = 0; i < f.size(); ++i) rows.push_back({joined(f.lattice().composition(i)), to_string(f[i])});
  return csv(rows);
}

void emit_function(const Globals& g, const SampledFunction& f) {
  emit(g, g.format == "csv" ? function_table_csv(f) : format_function(f));
}

int envelope_cmd(const Globals& g, const std::string& input, bool normalize) {
  SampledFunction f = read_function_file(input);
  if (normalize) f = normalize_to_simplex_form(f);
  const EnvelopeResult r = concave_envelope(f);
  if (!certificates_valid(f, r)) throw std::logic_error("envelope certificates failed to verify");
  emit_function(g, r.envelope);
  return kExitPass;
}

int supconv_cmd(const Globals& g, const std::string& input, const std::string& second, int n) {
  const SampledFunction f = read_function_file(input);
  if (!second.empty()) {
    emit_function(g, sup_convolve_pair(f, read_function_file(second)));
  } else {
    emit_function(g, sup_convolve_n(f, n));
  }
  return kExitPass;
}

int report_cmd(const Globals& g, InequalityReport r) {
  emit(g, g.format == "csv" ? report_csv_header() + report_csv_row(r) : report_json(r));
  return r.passed() ? kExitPass : kExitFail;
}

Tolerance tolerance_from(const std::string& rel, const std::string& abs) {
  Tolerance t;
  t.rel = parse_rational(rel);
  t.abs = parse_rational(abs);
  return t;
}

int averageable_cmd(const Globals& g, int k, int m, bool medial, int trials) {
  const AverageabilityCertificate cert = medial ? build_medial_example() : build_maps(k, m);
  FunctionalCheckOptions options;
  options.seed = g.seed;
  options.trials = trials;
  const VerificationReport report = verify_certificate(cert, options);
  if (g.format == "csv") {
    std::vector<std::vector<std::string>> rows{{"check", "passed", "detail"}};
    for (const auto& c : report.checks) rows.push_back({c.name, c.passed ? "true" : "false", "\"" + c.detail + "\""});
    emit(g, csv(rows));
  } else {
    Json j;
    j["k"] = cert.k;
    j["m"] = cert.m;
    j["target"] = cert.target.description;
    j["jacobian"] = to_string(cert.jacobian);
    j["target_relative_volume"] = to_string(cert.target.relative_volume());
    Json images = Json::array();
    for (const auto& s : cert.image_pieces) images.push_back(to_string(relative_volume(s)));
    j["image_piece_volumes"] = images;
    Json checks = Json::array();
    for (const auto& c : report.checks) {
      Json item;
      item["name"] = c.name;
      item["passed"] = c.passed;
      item["detail"] = c.detail;
      checks.push_back(item);
    }
    j["checks"] = checks;
    j["passed"] = report.passed;
    emit(g, j.dump(2) + "\n");
  }
  return report.passed ? kExitPass : kExitFail;
}

Json translate_json(const GoodClosure& closure, const GoodTranslate& t) {
  Json j;
  j["level"] = t.level;
  j["offset"] = t.offset;
  j["denominator"] = t.denominator.get_str();
  j["constant"] = to_string(t.constant);
  Json trace = Json::array();
  for (std::size_t id : closure.trace(t.node)) {
    const DerivationNode& node = closure.nodes[id];
    Json step;
    step["node"] = id;
    step["level"] = node.level;
    step["offset"] = node.offset;
    step["constant"] = to_string(node.constant);
    switch (node.rule) {
      case GoodRule::Base:
        step["rule"] = "base";
        break;
      case GoodRule::Vertex:
        step["rule"] = "vertex";
        step["vertex"] = node.vertex;
        step["parent"] = node.first;
        break;
      case GoodRule::Combine:
        step["rule"] = "combine";
        step["parents"] = {node.first, node.second};
        break;
    }
    trace.push_back(step);
  }
  j["derivation"] = trace;
  return j;
}

int cover_cmd(const Globals& g, int k, int n, int max_level, const ClosureOptions& options) {
  const CoverSearch search = search_cover(k, n, max_level, options);
  const auto& cert = search.certificate;
  if (g.format == "csv") {
    std::vector<std::vector<std::string>> rows{{"level", "outcome"}};
    for (const auto& [level, outcome] : search.attempts) rows.push_back({std::to_string(level), "\"" + outcome + "\""});
    if (cert) {
      rows.push_back({"count", std::to_string(cert->count)});
      rows.push_back({"sum_constants", to_string(cert->sum_constants)});
      rows.push_back({"derived_constant", to_string(cert->derived_constant)});
    }
    emit(g, csv(rows));
    return cert ? kExitPass : kExitFail;
  }
  Json j;
  j["k"] = k;
  j["n"] = n;
  j["max_level"] = max_level;
  j["truncated"] = search.closure.truncated;
  j["rounds_exhausted"] = search.closure.rounds_exhausted;
  Json attempts = Json::array();
  for (const auto& [level, outcome] : search.attempts) attempts.push_back({{"level", level}, {"outcome", outcome}});
  j["attempts"] = attempts;
  if (cert) {
    Json c;
    c["level"] = cert->level;
    c["grid_denominator"] = cert->grid_denominator.get_str();
    c["count"] = cert->count;
    c["capacity"] = Integer(pow(Rational(n), static_cast<unsigned>(cert->level * (k + 1)))).get_str();
    c["sum_constants"] = to_string(cert->sum_constants);
    c["derived_constant"] = to_string(cert->derived_constant);
    c["derived_constant_approx"] = to_double(cert->derived_constant);
    c["sharp_constant"] = to_string(constant_c(k, n).value());
    c["cells_checked"] = cert->cells_checked;
    Json family = Json::array();
    for (const auto& t : cert->family) family.push_back(translate_json(search.closure, t));
    c["family"] = family;
    j["certificate"] = c;
  } else {
    j["certificate"] = nullptr;
  }
  emit(g, j.dump(2) + "\n");
  return cert ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact sup-convolution and concave-envelope toolkit on the simplex"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", g.seed, "Seed for every random draw");
  app.add_option("--out", g.out, "Write output to this file instead of stdout");

  int k = 2;
  int n = 2;
  int resolution = 12;
  int m = 1;
  int max_level = 3;
  int trials = 20;
  bool svg = false;
  bool medial = false;
  bool normalize = false;
  double roughness = 0.5;
  std::string input;
  std::string second;
  std::string point;
  std::string tol_rel = "1/20";
  std::string tol_abs = "1/1000000000";
  ClosureOptions closure;

  auto* constants = app.add_subcommand("constants", "All closed forms of c_{k,n}");
  constants->add_option("--k", k)->required();
  constants->add_option("--n", n)->required();

  auto* subdiv = app.add_subcommand("subdivide", "Cells of the hypersimplex subdivision of T");
  subdiv->add_option("--k", k)->required();
  subdiv->add_option("--n", n)->required();
  subdiv->add_flag("--svg", svg, "Draw the subdivision (k = 2)");

  auto* classify = app.add_subcommand("classify", "Cell containing a point, by the floor rule");
  classify->add_option("--n", n)->required();
  classify->add_option("--point", point, "Comma separated barycentric coordinates, e.g. 1/3,1/6,1/2")->required();

  auto* envelope = app.add_subcommand("envelope", "Discrete concave envelope of a function file");
  envelope->add_option("--input", input)->required()->check(CLI::ExistingFile);
  envelope->add_flag("--normalize", normalize, "Subtract the affine part first");

  auto* conv = app.add_subcommand("supconv", "Discrete n-fold or pairwise sup-convolution");
  conv->add_option("--input", input)->required()->check(CLI::ExistingFile);
  conv->add_option("--with", second, "Second function for the pairwise operation")->check(CLI::ExistingFile);
  conv->add_option("--n", n);

  auto* t1 = app.add_subcommand("verify-t1", "Check the n-fold inequality on a function file");
  t1->add_option("--input", input)->required()->check(CLI::ExistingFile);
  t1->add_option("--n", n)->required();
  t1->add_option("--tol-rel", tol_rel);
  t1->add_option("--tol-abs", tol_abs);

  auto* t4 = app.add_subcommand("verify-t4", "Check the two-function inequality");
  t4->add_option("--f", input)->required()->check(CLI::ExistingFile);
  t4->add_option("--g", second)->required()->check(CLI::ExistingFile);
  t4->add_option("--tol-rel", tol_rel);
  t4->add_option("--tol-abs", tol_abs);

  auto* avg = app.add_subcommand("averageable", "Build and verify an averageability certificate");
  avg->add_option("--k", k);
  avg->add_option("--m", m);
  avg->add_flag("--medial", medial, "The medial-triangle example in dimension 3");
  avg->add_option("--trials", trials, "Random functions in the integral check");

  auto* cover = app.add_subcommand("cover", "Search for a cover by good translates");
  cover->add_option("--k", k)->required();
  cover->add_option("--n", n)->required();
  cover->add_option("--max-level", max_level);
  cover->add_option("--grid-extra", closure.grid_extra);
  cover->add_option("--node-budget", closure.node_budget);
  cover->add_option("--combine-rounds", closure.combine_rounds);

  auto* extremal = app.add_subcommand("extremal", "Write the normalized vertex indicator");
  extremal->add_option("--k", k)->required();
  extremal->add_option("--N", resolution)->required();

  auto* random = app.add_subcommand("random", "Write a seeded random function");
  random->add_option("--k", k)->required();
  random->add_option("--N", resolution)->required();
  random->add_option("--roughness", roughness)->check(CLI::Range(0.0, 1.0));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*constants) return constants_cmd(g, k, n);
    if (*subdiv) return subdivide_cmd(g, k, n, svg);
    if (*classify) return classify_cmd(g, n, point);
    if (*envelope) return envelope_cmd(g, input, normalize);
    if (*conv) return supconv_cmd(g, input, second, n);
    if (*t1) {
      InequalityReport r = verify_n_fold(read_function_file(input), n, tolerance_from(tol_rel, tol_abs));
      return report_cmd(g, r);
    }
    if (*t4) {
      InequalityReport r =
          verify_pair(read_function_file(input), read_function_file(second), tolerance_from(tol_rel, tol_abs));
      return report_cmd(g, r);
    }
    if (*avg) return averageable_cmd(g, k, m, medial, trials);
    if (*cover) return cover_cmd(g, k, n, max_level, closure);
    if (*extremal) {
      emit_function(g, make_extremal(k, resolution));
      return kExitPass;
    }
    if (*random) {
      emit_function(g, make_random(k, resolution, g.seed, roughness));
      return kExitPass;
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
