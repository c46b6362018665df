#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include "asg/acceptance.hpp"
#include "asg/automaton_format.hpp"
#include "asg/bundled.hpp"
#include "asg/covering.hpp"
#include "asg/model_inflation.hpp"
#include "asg/poly_json.hpp"
#include "asg/replacement_product.hpp"
#include "asg/schreier.hpp"
#include "asg/zeta.hpp"

namespace {

using namespace asg;
using nlohmann::json;

enum Exit : int { kOk = 0, kInvalid = 1, kUnsupported = 2, kVerificationFailed = 3 };

struct Options {
  std::string automaton;
  int n = 1;
  int r = 1;
  int upper = -1;
  std::string dot;
  std::string json_path;
  std::size_t limit = kDefaultVertexLimit;
  bool verify = false;
  bool tile = false;
  bool verbose = false;
  std::string method = "bass";
};

/// A readable file, or a bundled name with an optional ".atm" suffix.
Automaton load(const std::string& source) {
  if (std::filesystem::is_regular_file(source)) return load_automaton_file(source);
  std::string name = std::filesystem::path(source).filename().string();
  if (name.size() > 4 && name.ends_with(".atm")) name.resize(name.size() - 4);
  const auto names = bundled_names();
  if (std::find(names.begin(), names.end(), name) != names.end()) return bundled_automaton(name);
  throw ValidationError("no automaton file or bundled automaton named '" + source + "'");
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) return;
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << text;
}

void write_json(const Options& o, const json& j) { write_text(o.json_path, j.dump(2) + "\n"); }

json stats_json(const GraphStats& s) {
  return {{"vertices", s.vertex_count},     {"edges", s.edge_count}, {"regular_edges", s.regular_edges},
          {"loops", s.loops},               {"half_loops", s.half_loops},
          {"rank_minus_one", s.rank_minus_one}};
}

json graph_json(const RotationGraph& g) {
  json vertices = json::array();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) vertices.push_back(g.label(v));
  json edges = json::array();
  for (const auto& e : g.edges()) {
    json item = {{"from", g.label(e.from)}, {"to", g.label(e.to)}, {"color", g.color_name(e.color)}, {"kind", to_string(e.kind)}};
    if (g.edge_class(e.first) != EdgeClass::None) item["class"] = to_string(g.edge_class(e.first));
    edges.push_back(item);
  }
  return {{"colors", g.color_names()}, {"vertices", vertices}, {"edges", edges}, {"stats", stats_json(graph_stats(g))}};
}

void print_stats(const std::string& what, const RotationGraph& g) {
  const GraphStats s = graph_stats(g);
  std::cout << what << ": " << s.vertex_count << " vertices, " << s.edge_count << " edges (" << s.regular_edges << " regular, " << s.loops
            << " loops, " << s.half_loops << " half-loops), connected " << (is_connected(g) ? "yes" : "no") << "\n";
}

std::string permutation_text(const std::vector<int>& p) { return cycle_notation(p); }

int cmd_validate(const Options& o) {
  const Automaton aut = load(o.automaton);
  std::cout << "valid: alphabet " << aut.alphabet_size() << ", " << aut.state_count() << " states, generators";
  for (State g : aut.generators()) std::cout << " " << aut.name(g);
  std::cout << "\n";
  if (o.verbose) std::cout << serialize_automaton(aut);
  json gens = json::array();
  for (State g : aut.generators()) gens.push_back(aut.name(g));
  write_json(o, {{"valid", true}, {"alphabet", aut.alphabet_size()}, {"states", aut.state_count()}, {"generators", gens}});
  return kOk;
}

int cmd_classify(const Options& o) {
  const Automaton aut = load(o.automaton);
  const Activity act = activity_class(aut);
  const PermutationGroup psi = root_permutation_group(aut);
  json transitive = json::array();
  std::cout << "activity: " << to_string(act) << "\n";
  std::cout << "root permutation group order: " << psi.order() << " (alphabet size " << aut.alphabet_size() << ")\n";
  std::cout << "level-transitive:";
  for (int k = 1; k <= o.n; ++k) {
    const bool t = is_level_transitive(aut, k, o.limit);
    transitive.push_back(t);
    std::cout << " " << k << (t ? ":yes" : ":no");
  }
  std::cout << "\ninvolutions:";
  json involutions = json::array();
  for (State g : aut.generators()) {
    if (aut.is_involution(g)) {
      std::cout << " " << aut.name(g);
      involutions.push_back(aut.name(g));
    }
  }
  std::cout << "\n";
  write_json(o, {{"activity", to_string(act)},
                 {"bounded", act.kind == ActivityKind::Bounded},
                 {"root_group_order", psi.order()},
                 {"level_transitive", transitive},
                 {"involutions", involutions}});
  return kOk;
}

int cmd_graph(const Options& o, bool tile) {
  const Automaton aut = load(o.automaton);
  const RotationGraph g = tile ? build_tile(aut, o.n, o.limit) : build_schreier(aut, o.n, o.limit);
  const std::string name = std::string(tile ? "tile" : "schreier") + "_" + std::to_string(o.n);
  print_stats(name, g);
  write_text(o.dot, export_dot(g, name));
  write_json(o, graph_json(g));
  return kOk;
}

int cmd_postcritical(const Options& o) {
  const Automaton aut = load(o.automaton);
  const int d = aut.alphabet_size();
  const auto p = post_critical_sequences(aut);
  json seqs = json::array();
  std::cout << "post-critical sequences:\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::cout << "  p#" << i << " " << p[i].to_string(d) << "\n";
    seqs.push_back(p[i].to_string(d));
  }
  json verts = json::array();
  std::cout << "post-critical vertices at level " << o.n << ":\n";
  for (const auto& v : post_critical_vertices(p, o.n)) {
    std::cout << "  " << word_label(v.vertex, d) << " from";
    json src = json::array();
    for (std::size_t s : v.sources) {
      std::cout << " p#" << s;
      src.push_back(s);
    }
    std::cout << "\n";
    verts.push_back({{"vertex", word_label(v.vertex, d)}, {"sources", src}});
  }
  write_json(o, {{"sequences", seqs}, {"vertices", verts}});
  return kOk;
}

int cmd_model(const Options& o) {
  const Automaton aut = load(o.automaton);
  const ModelGraph m = model_graph(aut, o.n, o.limit);
  const int d = aut.alphabet_size();
  std::cout << "model graph of order " << o.n << ": " << m.vertex_count() << " vertices, " << m.edges.size() << " edges\n";
  json edges = json::array();
  for (const auto& e : m.edges) {
    std::cout << "  {" << m.vertex_label(e.p, e.x) << ", " << m.vertex_label(e.q, e.y) << "} via " << aut.name(e.witness) << "\n";
    edges.push_back({{"from", m.vertex_label(e.p, e.x)}, {"to", m.vertex_label(e.q, e.y)}, {"color", aut.name(e.witness)}});
  }
  json seqs = json::array();
  for (const auto& p : m.sequences) seqs.push_back(p.to_string(d));
  write_text(o.dot, export_model_dot(m));
  write_json(o, {{"order", o.n}, {"sequences", seqs}, {"edges", edges}});
  return kOk;
}

int cmd_inflate(const Options& o) {
  const Automaton aut = load(o.automaton);
  const RotationGraph g = inflate(build_tile(aut, o.r, o.limit), model_graph(aut, o.n, o.limit), o.limit);
  const std::string name = "inflated_" + std::to_string(o.r) + "_" + std::to_string(o.n);
  print_stats(name, g);
  write_text(o.dot, export_dot(g, name));
  json j = graph_json(g);
  int code = kOk;
  if (o.verify) {
    const InflationReport rep = verify_inflation(aut, o.r, o.n, o.limit);
    std::cout << "inflation equals tile graph of level " << o.r + o.n << ": " << (rep.pass ? "PASS" : "FAIL") << "\n";
    for (const auto& line : rep.differences) std::cout << "  " << line << "\n";
    j["verify"] = {{"pass", rep.pass}, {"differences", rep.differences}};
    if (!rep.pass) code = kVerificationFailed;
  }
  write_json(o, j);
  return code;
}

int cmd_replace(const Options& o) {
  const Automaton aut = load(o.automaton);
  const ProductGraph p = gen_replacement(aut, o.n, o.r, o.limit);
  const std::string name = "replacement_" + std::to_string(o.n) + "_" + std::to_string(o.r);
  print_stats(name, p.graph);
  std::map<std::string, std::size_t> classes;
  for (const auto& e : p.graph.edges()) ++classes[to_string(p.graph.edge_class(e.first))];
  for (const auto& [cls, count] : classes) std::cout << "  " << cls << " edges: " << count << "\n";
  write_text(o.dot, export_dot(p.graph, name));
  json j = graph_json(p.graph);
  int code = kOk;
  if (o.verify) {
    const IsoReport rep = verify_iso_to_schreier(p, aut, o.limit);
    std::cout << "(v,u) -> uv is an isomorphism onto level " << o.n + o.r << ": " << (rep.pass ? "PASS" : "FAIL") << "\n";
    for (const auto& line : rep.differences) std::cout << "  " << line << "\n";
    j["verify_iso"] = {{"pass", rep.pass}, {"differences", rep.differences}};
    if (!rep.pass) code = kVerificationFailed;
  }
  write_json(o, j);
  return code;
}

int cmd_cover(const Options& o) {
  const Automaton aut = load(o.automaton);
  const int upper = o.upper < 0 ? o.n + 1 : o.upper;
  const CoveringMap c = level_covering(aut, upper, o.n, o.limit);
  const std::size_t sheets = check_unramified(c);
  const std::size_t psi = root_permutation_group(aut).order();
  std::cout << "level " << upper << " over level " << o.n << ": unramified, " << sheets << " sheets\n";
  json j = {{"upper", upper}, {"lower", o.n}, {"sheets", sheets}, {"root_group_order", psi}};
  if (!is_connected(c.total)) {
    std::cout << "total graph is disconnected; deck group not computed\n";
    j["connected"] = false;
    write_json(o, j);
    return kOk;
  }
  const DeckGroup g = deck_group(c);
  const bool normal = g.order() == sheets;
  std::cout << (normal ? "normal" : "non-normal") << ", deck order " << g.order() << ", root permutation group order " << psi << "\n";
  j["connected"] = true;
  j["deck_order"] = g.order();
  j["normal"] = normal;
  j["abelian"] = g.is_abelian();
  if (upper == o.n + 1) {
    try {
      json action = json::array();
      for (const auto& p : last_letter_action(c, g, aut.alphabet_size())) {
        std::cout << "  deck element acts on the last letter as " << permutation_text(p) << "\n";
        action.push_back(p);
      }
      j["last_letter_action"] = action;
    } catch (const ValidationError& e) {
      std::cout << "  " << e.what() << "\n";
    }
  }
  write_json(o, j);
  return kOk;
}

int cmd_galois(const Options& o) {
  const Automaton aut = load(o.automaton);
  const GaloisReport r = verify_galois_theorem(aut, o.n, o.limit);
  std::cout << format_galois_report(r);
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"edge", row.edge}, {"restriction", row.restriction}, {"element", row.element}, {"permutation", row.permutation}, {"expected", row.expected}});
  }
  write_json(o, {{"verdict", to_string(r.verdict)},
                 {"level", r.level},
                 {"root_group_order", r.root_group_order},
                 {"sheets", r.sheets},
                 {"deck_order", r.deck_order},
                 {"normal", r.normal},
                 {"deck_action", r.deck_action},
                 {"frobenius", rows},
                 {"notes", r.notes}});
  switch (r.verdict) {
    case GaloisVerdict::Pass:
      return kOk;
    case GaloisVerdict::HypothesisNotMet:
      return kUnsupported;
    case GaloisVerdict::Fail:
      break;
  }
  return kVerificationFailed;
}

int cmd_zeta(const Options& o) {
  const Automaton aut = load(o.automaton);
  const RotationGraph g = o.tile ? build_tile(aut, o.n, o.limit) : build_schreier(aut, o.n, o.limit);
  IntPoly p;
  if (o.method == "bass") {
    p = ihara_zeta_reciprocal(g);
  } else if (o.method == "hashimoto") {
    p = hashimoto_zeta_reciprocal(g);
  } else {
    throw ValidationError("unknown method '" + o.method + "' (bass or hashimoto)");
  }
  std::cout << "1/zeta = " << p << "\n";
  json j = poly_to_json(p);
  std::cout << j.dump() << "\n";
  write_json(o, j);
  return kOk;
}

int cmd_lfun(const Options& o) {
  const Automaton aut = load(o.automaton);
  const CoveringMap c = level_covering(aut, o.n + 1, o.n, o.limit);
  const std::size_t sheets = check_unramified(c);
  const DeckGroup g = deck_group(c);
  if (g.order() != sheets) throw NotNormal("covering is not normal: " + std::to_string(g.order()) + " deck transformations, " + std::to_string(sheets) + " sheets");
  const CharacterTable chars = character_table(g);
  const SheetLabeling labels = label_sheets(c, g, spanning_tree(c.base));
  const ABundle ab = a_matrices(c, g, labels);
  json factors = json::array();
  for (std::size_t chi = 0; chi < chars.size(); ++chi) {
    const CycPoly l = artin_l_reciprocal(ab, chars, chi);
    const int e = l_exponent(ab, chi == 0);
    std::cout << "character " << chi << ": exponent " << e << "\n  1/L = " << l << "\n";
    factors.push_back({{"character", chi}, {"exponent", e}, {"reciprocal", poly_to_json(l, chars.value_order)}});
  }
  json j = {{"sheets", sheets}, {"character_order", chars.value_order}, {"factors", factors}};
  int code = kOk;
  if (o.verify) {
    const ProductReport rep = verify_product_formula(c);
    std::cout << "product of L-functions equals 1/zeta of level " << o.n + 1 << ": " << (rep.pass ? "PASS" : "FAIL") << "\n";
    for (const auto& note : rep.notes) std::cout << "  " << note << "\n";
    j["factor_check"] = {{"pass", rep.pass}, {"product", poly_to_json(rep.product)}, {"cover_zeta", poly_to_json(rep.cover_zeta)}};
    if (!rep.pass) code = kVerificationFailed;
  }
  write_json(o, j);
  return code;
}

int cmd_verify_all(const Options& o) {
  bool all = true;
  json results = json::array();
  for (int id = 1; id <= kCriterionCount; ++id) {
    const CriterionResult r = run_criterion(id);
    std::cout << format_criterion(r, o.verbose);
    std::cout.flush();
    results.push_back({{"criterion", r.id}, {"title", r.title}, {"pass", r.pass}, {"details", r.details}});
    all &= r.pass;
  }
  write_json(o, {{"pass", all}, {"criteria", results}});
  return all ? kOk : kVerificationFailed;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const NotBounded*>(&e) || dynamic_cast<const NonAbelianUnsupported*>(&e) || dynamic_cast<const LoopsUnsupported*>(&e) ||
      dynamic_cast<const NotNormal*>(&e) || dynamic_cast<const NotLevelTransitive*>(&e) || dynamic_cast<const DisconnectedGraph*>(&e)) {
    return kUnsupported;
  }
  return kInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schreier graphs, coverings and zeta functions of automaton groups"};
  app.require_subcommand(1);
  Options o;
  int code = kOk;

  auto add = [&](const std::string& name, const std::string& help, std::function<int()> run) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&code, run] { code = run(); });
    return sub;
  };
  auto with_file = [&](CLI::App* sub) {
    sub->add_option("automaton", o.automaton, "automaton file or bundled name")->required();
    sub->add_option("--json", o.json_path, "write JSON output to this path (- for stdout)");
    sub->add_option("--limit", o.limit, "maximum number of vertices");
    return sub;
  };
  auto with_n = [&](CLI::App* sub) { sub->add_option("-n", o.n, "level")->check(CLI::NonNegativeNumber); };
  auto with_r = [&](CLI::App* sub) { sub->add_option("-r", o.r, "second level")->check(CLI::NonNegativeNumber); };
  auto with_dot = [&](CLI::App* sub) { sub->add_option("--dot", o.dot, "write DOT output to this path (- for stdout)"); };

  auto* validate = with_file(add("validate", "parse and validate an automaton", [&] { return cmd_validate(o); }));
  validate->add_flag("-v,--verbose", o.verbose, "print the normalized document");
  auto* classify = with_file(add("classify", "activity class, root permutation group, transitivity", [&] { return cmd_classify(o); }));
  with_n(classify);
  for (bool tile : {false, true}) {
    auto* sub = with_file(add(tile ? "tile" : "schreier", tile ? "tile graph of level n" : "Schreier graph of level n",
                              [&, tile] { return cmd_graph(o, tile); }));
    with_n(sub);
    with_dot(sub);
  }
  auto* postcritical = with_file(add("postcritical", "post-critical sequences and their level-n vertices", [&] { return cmd_postcritical(o); }));
  with_n(postcritical);
  auto* model = with_file(add("model", "iterated model graph of order n", [&] { return cmd_model(o); }));
  with_n(model);
  with_dot(model);
  auto* inflate_cmd = with_file(add("inflate", "tile graph of level r inflated by the model graph of order n", [&] { return cmd_inflate(o); }));
  with_n(inflate_cmd);
  with_r(inflate_cmd);
  with_dot(inflate_cmd);
  inflate_cmd->add_flag("--verify", o.verify, "compare with the tile graph of level r + n");
  auto* replace = with_file(add("replace", "replacement product of levels n and r", [&] { return cmd_replace(o); }));
  with_n(replace);
  with_r(replace);
  with_dot(replace);
  replace->add_flag("--verify-iso", o.verify, "check the isomorphism onto level n + r");
  auto* cover = with_file(add("cover", "covering of level n by level m (default n + 1)", [&] { return cmd_cover(o); }));
  with_n(cover);
  cover->add_option("-m", o.upper, "upper level");
  auto* galois = with_file(add("galois-check", "Galois covering of level n by level n + 1", [&] { return cmd_galois(o); }));
  with_n(galois);
  auto* zeta = with_file(add("zeta", "reciprocal Ihara zeta function of level n", [&] { return cmd_zeta(o); }));
  with_n(zeta);
  zeta->add_option("--method", o.method, "bass or hashimoto");
  zeta->add_flag("--tile", o.tile, "use the tile graph");
  auto* lfun = with_file(add("lfun", "Artin L-functions of level n + 1 over level n", [&] { return cmd_lfun(o); }));
  with_n(lfun);
  lfun->add_flag("--factor-check", o.verify, "check the product formula");
  auto* verify_all = add("verify-all", "run the acceptance suite", [&] { return cmd_verify_all(o); });
  verify_all->add_flag("-v,--verbose", o.verbose, "print every check");
  verify_all->add_option("--json", o.json_path, "write JSON output to this path (- for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return code;
}
