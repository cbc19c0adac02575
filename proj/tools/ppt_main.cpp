// ppt: command-line front end for pointed pseudo-triangulations and the
// polytopes of constrained expansions.
//
// Exit codes: 0 success, 1 an invariant failed, 2 malformed input or a
// violated precondition. Artifacts (JSON, DOT, SVG) go to --out or stdout;
// one-line summaries go to stderr unless --quiet.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "ppt/assoc1d.hpp"
#include "ppt/cone.hpp"
#include "ppt/errors.hpp"
#include "ppt/io.hpp"
#include "ppt/mechanism.hpp"
#include "ppt/polytope.hpp"
#include "ppt/render.hpp"
#include "ppt/secondary.hpp"
#include "ppt/verify.hpp"

namespace {

using ppt::io::json;

struct Common {
  std::string out;
  std::string format = "json";
  bool quiet = false;
};

struct SchemeFlags {
  std::string scheme = "det";
  std::string a, b, norm;
};

Common common;
SchemeFlags scheme_flags;

void summary(const std::string& line) {
  if (!common.quiet) std::cerr << line << '\n';
}

void emit(const std::string& text) {
  if (common.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(common.out);
  if (!file) throw ppt::InputError("cannot write " + common.out);
  file << text;
}

void emit(const json& j) { emit(j.dump(2) + "\n"); }

std::size_t max_n() {
  const char* env = std::getenv("PPT_MAX_N");
  if (env == nullptr || *env == '\0') return 10;
  try {
    return std::stoul(env);
  } catch (const std::exception&) {
    throw ppt::InputError("PPT_MAX_N must be a positive integer");
  }
}

ppt::PointSet load_points(const std::string& path, bool capped = true) {
  ppt::PointSet ps = ppt::io::point_set_from_json(ppt::io::read_json_file(path));
  if (capped && ps.size() > max_n())
    throw ppt::PreconditionError(std::to_string(ps.size()) + " points exceed PPT_MAX_N=" + std::to_string(max_n()));
  return ps;
}

std::pair<std::string, std::string> split_pair(const std::string& text, const char* what) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ppt::InputError(std::string(what) + " expects two comma-separated values");
  return {text.substr(0, comma), text.substr(comma + 1)};
}

ppt::Point parse_point(const std::string& text) {
  const auto [x, y] = split_pair(text, "point");
  return {ppt::parse_rational(x), ppt::parse_rational(y)};
}

ppt::Edge parse_index_pair(const std::string& text) {
  const auto [i, j] = split_pair(text, "index pair");
  try {
    return ppt::Edge(std::stoul(i), std::stoul(j));
  } catch (const std::logic_error&) {
    throw ppt::InputError("malformed index pair '" + text + "'");
  }
}

ppt::FScheme make_scheme(const ppt::PointSet& ps) {
  const std::string& s = scheme_flags.scheme;
  if (s == "det") {
    const ppt::Point c = ppt::centroid(ps);
    return ppt::DetProduct{scheme_flags.a.empty() ? c : parse_point(scheme_flags.a),
                           scheme_flags.b.empty() ? c : parse_point(scheme_flags.b)};
  }
  if (!scheme_flags.a.empty() || !scheme_flags.b.empty())
    throw ppt::InputError("--a/--b only apply to --scheme det");
  if (s == "norm") return ppt::NormHeuristic{};
  if (s.rfind("file=", 0) == 0) {
    const json j = ppt::io::read_json_file(s.substr(5));
    const json& values = j.contains("f") ? j.at("f") : j;
    ppt::PerturbationTable f(ps.size());
    const ppt::StrainVector table = ppt::io::strains_from_json(values);
    if (table.size() != ps.size() * (ps.size() - 1) / 2) throw ppt::InputError("f table must list every pair");
    for (const auto& [e, value] : table) {
      if (e.j >= ps.size()) throw ppt::InputError("f table pair " + ppt::to_string(e) + " out of range");
      f[e] = value;
    }
    return ppt::ExplicitTable{f};
  }
  throw ppt::InputError("unknown scheme '" + s + "'; use det, norm or file=PATH");
}

ppt::Normalization make_norm(const ppt::PointSet& ps) {
  if (scheme_flags.norm.empty()) return ppt::Normalization::for_points(ps);
  const auto [a, b] = split_pair(scheme_flags.norm, "--norm");
  try {
    return ppt::Normalization::with_anchors(ps, std::stoul(a), std::stoul(b));
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const ppt::PreconditionError*>(&e)) throw;
    throw ppt::InputError("malformed --norm '" + scheme_flags.norm + "'");
  }
}

void add_output(CLI::App* cmd, bool formats) {
  cmd->add_option("--out", common.out, "Write the artifact to this file instead of stdout");
  cmd->add_flag("--quiet", common.quiet, "Suppress the summary on stderr");
  if (formats) cmd->add_option("--format", common.format, "Artifact format")->check(CLI::IsMember({"json", "dot", "svg"}));
}

void add_scheme(CLI::App* cmd) {
  cmd->add_option("--scheme", scheme_flags.scheme, "Perturbation: det, norm or file=PATH");
  cmd->add_option("--a", scheme_flags.a, "Point a of the det scheme, as X,Y");
  cmd->add_option("--b", scheme_flags.b, "Point b of the det scheme, as X,Y");
  cmd->add_option("--norm", scheme_flags.norm, "Normalization anchors, as I,J");
}

void require_format(std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (common.format == f) return;
  throw ppt::InputError("format '" + common.format + "' is not available for this command");
}

int run_enumerate(const std::string& points) {
  require_format({"json", "dot"});
  const ppt::PointSet ps = load_points(points);
  const ppt::FlipGraph fg = ppt::enumerate_ppts(ps);
  std::cout << fg.size() << '\n';
  summary(std::to_string(fg.edge_count()) + " flips");
  if (common.format == "dot") {
    emit(ppt::io::to_dot(fg));
  } else if (!common.out.empty()) {
    emit(ppt::io::to_json(fg));
  }
  return 0;
}

int run_polytope(const std::string& points) {
  require_format({"json"});
  const ppt::PointSet ps = load_points(points);
  const ppt::PerturbationTable f = ppt::make_f(ps, make_scheme(ps));
  const ppt::ValidityReport validity = ppt::check_validity(ps, f);
  if (!validity.valid)
    throw ppt::InvalidPerturbation("perturbation is not valid on " + std::to_string(validity.failures().size()) +
                                   " quadruples");
  const ppt::RealizedPolytope poly = ppt::realize_polytope(ps, f, make_norm(ps));
  summary(std::to_string(poly.vertices.size()) + " vertices, " + std::to_string(poly.bounded_edges.size()) +
          " bounded edges, " + std::to_string(poly.rays.size()) + " rays");
  emit(ppt::io::to_json(poly));
  return 0;
}

int run_cone_rays(const std::string& points, bool oracle) {
  require_format({"json"});
  const ppt::PointSet ps = load_points(points);
  const ppt::Normalization norm = make_norm(ps);
  const auto rays = ppt::cone_extreme_rays(ps, norm);
  json out = json::array();
  for (const auto& r : rays) out.push_back(ppt::io::to_json(r));
  summary(std::to_string(rays.size()) + " extreme rays");
  if (oracle && !ppt::same_rays(rays, ppt::brute_force_rays(ps, norm)))
    throw ppt::InvariantViolation("brute-force oracle disagrees with the collapsed mechanisms");
  if (oracle) summary("brute-force oracle agrees");
  emit(out);
  return 0;
}

int run_verify(const std::string& points, std::uint64_t seed) {
  require_format({"json"});
  const ppt::PointSet ps = load_points(points);
  ppt::VerifyOptions options = ppt::default_verify_options(ps);
  options.scheme = make_scheme(ps);
  options.norm = make_norm(ps);
  options.seed = seed;
  const ppt::VerifyReport report = ppt::run_verify(ps, options);
  json entries = json::array();
  for (const auto& e : report.entries) {
    entries.push_back({{"anchor", e.anchor}, {"passed", e.passed}, {"detail", e.detail}});
    summary(std::string(e.passed ? "PASS " : "FAIL ") + e.anchor + ": " + e.detail);
  }
  emit(json{{"passed", report.all_passed()}, {"failed", report.failed_anchors()}, {"entries", entries}});
  return report.all_passed() ? 0 : 1;
}

int run_render(const std::string& points, const std::string& graph, const std::string& mechanism,
               const std::string& hull_edge) {
  if (common.format == "json") common.format = "svg";
  require_format({"svg"});
  const ppt::PointSet ps = load_points(points, false);
  ppt::EmbeddedGraph g = ppt::io::graph_from_json(ppt::io::read_json_file(graph), ps.size());
  ppt::RenderOptions options;
  if (!hull_edge.empty()) {
    const ppt::Ppt t = ppt::Ppt::from_graph(ps, g);
    const ppt::PteMechanism m = ppt::pte_mechanism(ps, t, parse_index_pair(hull_edge), make_norm(ps));
    g = m.graph;
    options.shaded = ppt::rigid_components(ps, m);
  }
  if (!mechanism.empty()) {
    const ppt::Motion v = ppt::io::motion_from_json(ppt::io::read_json_file(mechanism));
    if (v.size() != ps.size()) throw ppt::InputError("motion length does not match the point count");
    options.shaded = ppt::rigid_subsets(ps, v);
  }
  std::erase_if(options.shaded, [](const auto& s) { return s.size() < 3; });
  summary(std::to_string(g.edge_count()) + " edges, " + std::to_string(options.shaded.size()) + " shaded regions");
  emit(ppt::render_svg(ps, g, options));
  return 0;
}

int run_assoc1d(std::optional<std::size_t> n, const std::string& gfile) {
  namespace a1 = ppt::assoc1d;
  require_format({"json"});
  if (n.has_value() == !gfile.empty()) throw ppt::InputError("give exactly one of --n or --g");
  const a1::GTable g = n ? a1::GTable::square(*n) : ppt::io::gtable_from_json(ppt::io::read_json_file(gfile));
  if (g.n() > max_n()) throw ppt::PreconditionError("n exceeds PPT_MAX_N=" + std::to_string(max_n()));
  const a1::GValidityReport validity = a1::check_g_validity(g);
  json violations = json::array();
  for (const auto& v : validity.violations) {
    const bool crossing = v.kind == a1::GViolation::Kind::Crossing;
    json idx = json::array({v.indices[0], v.indices[1], v.indices[2]});
    if (crossing) idx.push_back(v.indices[3]);
    violations.push_back({{"kind", crossing ? "crossing" : "transitive"}, {"indices", idx}});
  }
  if (!validity.valid) {
    summary("g is invalid: " + std::to_string(validity.violations.size()) + " violated inequalities");
    emit(json{{"g", ppt::io::to_json(g)}, {"valid", false}, {"violations", violations}});
    return 1;
  }
  const a1::Realization1D r = a1::realize(g);
  json trees = json::array();
  for (const auto& v : r.vertices) {
    json t = ppt::io::to_json(v.tree);
    t["binary"] = a1::tree_to_binary(v.tree).shape();
    json coords = json::array();
    for (const auto& x : v.v) coords.push_back(ppt::io::to_json(x));
    t["v"] = coords;
    trees.push_back(t);
  }
  json flips = json::array();
  for (const auto& e : r.edges)
    flips.push_back({{"from", e.from}, {"to", e.to}, {"out", ppt::to_string(e.out)}, {"in", ppt::to_string(e.in)}});
  json rays = json::array();
  for (const auto& ray : a1::cone_rays_1d(g.n())) {
    json d = json::array();
    for (const auto& x : ray) d.push_back(ppt::io::to_json(x));
    rays.push_back(d);
  }
  json parallel = json::array();
  if (g.n() >= 3)
    for (const auto& p : a1::facet_parallel_report(g))
      parallel.push_back({{"i", p.i}, {"facets", {ppt::to_string(p.first), ppt::to_string(p.second)}}});
  summary(std::to_string(r.vertices.size()) + " trees, " + std::to_string(r.edges.size()) + " flips");
  emit(json{{"g", ppt::io::to_json(g)},
            {"valid", true},
            {"trees", trees},
            {"flips", flips},
            {"cone_rays", rays},
            {"parallel_facets", parallel}});
  return 0;
}

int run_secondary(const std::string& points) {
  require_format({"json"});
  const ppt::PointSet input = load_points(points);
  const ppt::ConvexReindex re = ppt::to_ccw_convex(input);
  const ppt::PointSet& ps = re.points;
  const ppt::PerturbationTable f = ppt::make_f(ps, make_scheme(ps));
  const ppt::AffineMapReport report = ppt::affine_map_check(ps, f);
  const ppt::FlipGraph fg = ppt::enumerate_ppts(ps);
  json triangulations = json::array();
  for (std::size_t k = 0; k < fg.size(); ++k) {
    json gkz = json::array();
    for (const auto& a : ppt::gkz_vector(ps, fg.nodes[k])) gkz.push_back(ppt::to_string(a));
    triangulations.push_back({{"triangulation", ppt::io::edges_to_json(fg.nodes[k].key())}, {"gkz", gkz}});
  }
  summary(std::to_string(fg.size()) + " triangulations; affine map " + (report.ok ? "exact" : "MISMATCH"));
  emit(json{{"original_index", re.original_index},
            {"points", ppt::io::to_json(ps)["points"]},
            {"triangulations", triangulations},
            {"affine_map_ok", report.ok}});
  return report.ok ? 0 : 1;
}

int run_expand(const std::string& points, const std::string& graph) {
  require_format({"json"});
  const ppt::PointSet ps = load_points(points, false);
  const ppt::EmbeddedGraph g = ppt::io::graph_from_json(ppt::io::read_json_file(graph), ps.size());
  const auto m = ppt::expansive_flex(ps, g, make_norm(ps));
  if (!m) {
    summary("graph contains every hull edge: no expansive flex");
    emit(json{{"motion", nullptr}});
    return 0;
  }
  const auto strains = ppt::all_strains(ps, *m);
  std::size_t positive = 0;
  for (const auto& [e, s] : strains) positive += sgn(s) > 0;
  summary(std::to_string(positive) + " of " + std::to_string(strains.size()) + " pairs strictly expanding");
  json missing = json::array();
  for (const auto& h : ppt::hull_edges(ps))
    if (!g.contains(h)) missing.push_back(ppt::to_string(h));
  emit(json{{"motion", ppt::io::to_json(*m)}, {"strains", ppt::io::strains_to_json(strains)}, {"missing_hull_edges", missing}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pointed pseudo-triangulations and polytopes of constrained expansions"};
  app.require_subcommand(1);

  std::string points, graph, mechanism, hull_edge, gfile;
  std::optional<std::size_t> n;
  std::uint64_t seed = 1;
  bool oracle = false;

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate pointed pseudo-triangulations and their flips");
  enumerate->add_option("points", points, "Point-set JSON file")->required();
  add_output(enumerate, true);

  auto* polytope = app.add_subcommand("polytope", "Realize the polyhedron of constrained expansions");
  polytope->add_option("points", points, "Point-set JSON file")->required();
  add_scheme(polytope);
  add_output(polytope, true);

  auto* cone = app.add_subcommand("cone-rays", "Extreme rays of the expansion cone");
  cone->add_option("points", points, "Point-set JSON file")->required();
  cone->add_option("--norm", scheme_flags.norm, "Normalization anchors, as I,J");
  cone->add_flag("--oracle", oracle, "Cross-check against brute force (n <= 6)");
  add_output(cone, true);

  auto* verify = app.add_subcommand("verify", "Run every structural check on a point set");
  verify->add_option("points", points, "Point-set JSON file")->required();
  verify->add_option("--seed", seed, "Seed for randomized checks");
  add_scheme(verify);
  add_output(verify, true);

  auto* render = app.add_subcommand("render", "Draw a graph as SVG");
  render->add_option("points", points, "Point-set JSON file")->required();
  render->add_option("graph", graph, "Graph JSON file")->required();
  render->add_option("--mechanism", mechanism, "Motion JSON file; its rigid subsets are shaded");
  render->add_option("--hull-edge", hull_edge, "Treat the graph as a ppt and release this hull edge, as I,J");
  render->add_option("--norm", scheme_flags.norm, "Normalization anchors, as I,J");
  add_output(render, true);

  auto* assoc = app.add_subcommand("assoc1d", "One-dimensional constrained expansions");
  assoc->add_option("--n", n, "Use g_ij = (i-j)^2 on n points");
  assoc->add_option("--g", gfile, "g-table JSON file");
  add_output(assoc, true);

  auto* secondary = app.add_subcommand("secondary", "Secondary-polytope coordinates for convex position");
  secondary->add_option("points", points, "Point-set JSON file")->required();
  add_scheme(secondary);
  add_output(secondary, true);

  auto* expand = app.add_subcommand("expand", "Expansive flex of a pointed non-crossing graph");
  expand->add_option("points", points, "Point-set JSON file")->required();
  expand->add_option("graph", graph, "Graph JSON file")->required();
  expand->add_option("--norm", scheme_flags.norm, "Normalization anchors, as I,J");
  add_output(expand, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*enumerate) return run_enumerate(points);
    if (*polytope) return run_polytope(points);
    if (*cone) return run_cone_rays(points, oracle);
    if (*verify) return run_verify(points, seed);
    if (*render) return run_render(points, graph, mechanism, hull_edge);
    if (*assoc) return run_assoc1d(n, gfile);
    if (*secondary) return run_secondary(points);
    if (*expand) return run_expand(points, graph);
  } catch (const ppt::GeneralPositionError& e) {
    const auto& t = e.triple();
    std::cerr << "error: " << e.what() << " [indices " << t[0] << ' ' << t[1] << ' ' << t[2] << "]\n";
    return 2;
  } catch (const ppt::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ppt::PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ppt::InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
