#include "ppt/io.hpp"

#include <fstream>
#include <sstream>

#include "ppt/errors.hpp"

namespace ppt::io {

json to_json(const Rational& value) {
  Rational r = value;
  r.canonicalize();
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return json(static_cast<std::int64_t>(r.get_num().get_si()));
  return json(to_string(r));
}

Rational rational_from_json(const json& j) {
  // Integers may exceed 64 bits in principle; the decimal text is exact either way.
  if (j.is_number()) return parse_rational(j.dump());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("expected a rational number, got " + j.dump());
}

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t index_from_json(const json& j) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) throw InputError("expected a vertex index, got " + j.dump());
  return j.get<std::size_t>();
}

Point point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw InputError("expected a pair [x, y], got " + j.dump());
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

json point_to_json(const Point& p) { return json::array({to_json(p.x), to_json(p.y)}); }

json edge_to_json(Edge e) { return json::array({e.i, e.j}); }

}  // namespace

json to_json(const PointSet& ps) {
  json pts = json::array();
  for (const Point& p : ps) pts.push_back(point_to_json(p));
  return {{"points", pts}};
}

PointSet point_set_from_json(const json& j) {
  const json& pts = j.is_array() ? j : require(j, "points");
  if (!pts.is_array()) throw InputError("'points' must be an array");
  std::vector<Point> out;
  for (const json& p : pts) out.push_back(point_from_json(p));
  return PointSet(std::move(out));
}

json edges_to_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back(edge_to_json(e));
  return out;
}

std::vector<Edge> edges_from_json(const json& j) {
  if (!j.is_array()) throw InputError("edges must be an array");
  std::vector<Edge> out;
  for (const json& e : j) {
    if (e.is_string()) {
      out.push_back(parse_pair_key(e.get<std::string>()));
      continue;
    }
    if (!e.is_array() || e.size() != 2) throw InputError("expected an edge [i, j], got " + e.dump());
    out.emplace_back(index_from_json(e[0]), index_from_json(e[1]));
  }
  return out;
}

json to_json(const EmbeddedGraph& g) { return {{"edges", edges_to_json(g.edges())}}; }

EmbeddedGraph graph_from_json(const json& j, std::size_t vertex_count) {
  return EmbeddedGraph(vertex_count, edges_from_json(j.is_array() ? j : require(j, "edges")));
}

json to_json(const Motion& m) {
  json out = json::array();
  for (const Point& v : m.velocities) out.push_back(point_to_json(v));
  return out;
}

Motion motion_from_json(const json& j) {
  const json& arr = j.is_object() ? require(j, "motion") : j;
  if (!arr.is_array()) throw InputError("motion must be an array of [vx, vy]");
  Motion m;
  for (const json& v : arr) m.velocities.push_back(point_from_json(v));
  return m;
}

Edge parse_pair_key(const std::string& key) {
  const auto dash = key.find('-');
  if (dash == std::string::npos || dash == 0 || dash + 1 == key.size()) throw InputError("malformed pair key '" + key + "'");
  try {
    std::size_t used_a = 0, used_b = 0;
    const std::string a = key.substr(0, dash), b = key.substr(dash + 1);
    const unsigned long i = std::stoul(a, &used_a);
    const unsigned long jv = std::stoul(b, &used_b);
    if (used_a != a.size() || used_b != b.size() || i == jv) throw InputError("malformed pair key '" + key + "'");
    return Edge(i, jv);
  } catch (const std::logic_error&) {
    throw InputError("malformed pair key '" + key + "'");
  }
}

namespace {

json weights_to_json(const std::map<Edge, Rational>& w) {
  json out = json::object();
  for (const auto& [e, value] : w) out[to_string(e)] = to_json(value);
  return out;
}

std::map<Edge, Rational> weights_from_json(const json& j) {
  if (!j.is_object()) throw InputError("expected an object keyed by \"i-j\"");
  std::map<Edge, Rational> out;
  for (const auto& [key, value] : j.items())
    if (!out.emplace(parse_pair_key(key), rational_from_json(value)).second)
      throw InputError("duplicate pair key '" + key + "'");
  return out;
}

}  // namespace

json to_json(const Stress& w) { return weights_to_json(w.weights); }
Stress stress_from_json(const json& j) { return {weights_from_json(j)}; }
json strains_to_json(const StrainVector& s) { return weights_to_json(s); }
StrainVector strains_from_json(const json& j) { return weights_from_json(j); }

json to_json(const assoc1d::GTable& g) {
  json values = json::object();
  for (std::size_t i = 1; i <= g.n(); ++i)
    for (std::size_t k = i + 1; k <= g.n(); ++k) values[to_string(Edge(i, k))] = to_json(g(i, k));
  return {{"n", g.n()}, {"g", values}};
}

assoc1d::GTable gtable_from_json(const json& j) {
  if (!j.is_object()) throw InputError("g table must be a JSON object");
  try {
    if (j.contains("scheme")) {
      const std::string scheme = j.at("scheme").get<std::string>();
      if (scheme == "square") return assoc1d::GTable::square(index_from_json(require(j, "n")));
      if (scheme == "convex") {
        std::vector<Rational> t;
        for (const json& x : require(j, "t")) t.push_back(rational_from_json(x));
        unsigned power = 2;
        if (j.contains("h")) {
          const std::string h = j.at("h").get<std::string>();
          if (h.rfind("power:", 0) == 0) {
            power = static_cast<unsigned>(std::stoul(h.substr(6)));
          } else if (h != "square") {
            throw InputError("unknown h '" + h + "'; use \"square\" or \"power:k\"");
          }
        }
        return assoc1d::GTable::convex(t, power);
      }
      throw InputError("unknown g scheme '" + scheme + "'");
    }
    const std::size_t n = index_from_json(require(j, "n"));
    assoc1d::GTable g(n);
    const auto values = weights_from_json(require(j, "g"));
    if (values.size() != n * (n - 1) / 2) throw InputError("g table must list every pair i<j");
    for (const auto& [e, value] : values) g(e.i, e.j) = value;
    return g;
  } catch (const PreconditionError& e) {
    throw InputError(e.what());
  } catch (const json::exception& e) {
    throw InputError(e.what());
  } catch (const std::logic_error& e) {
    throw InputError(e.what());
  }
}

json to_json(const assoc1d::Tree1D& t) {
  json out = {{"n", t.n()}, {"edges", edges_to_json(t.edges())}};
  if (t.n() <= 26) out["bracketing"] = assoc1d::tree_to_bracketing(t);
  return out;
}

json to_json(const FlipGraph& fg) {
  json nodes = json::array();
  for (const Ppt& t : fg.nodes) nodes.push_back({{"key", t.key_string()}, {"edges", edges_to_json(t.key())}});
  json flips = json::array();
  for (std::size_t a = 0; a < fg.size(); ++a)
    for (const FlipArc& arc : fg.adjacency[a])
      if (a < arc.neighbor)
        flips.push_back(json::array({a, arc.neighbor, {{"out", to_string(arc.out)}, {"in", to_string(arc.in)}}}));
  return {{"nodes", nodes}, {"flips", flips}};
}

std::string to_dot(const FlipGraph& fg) {
  std::ostringstream out;
  out << "graph flips {\n";
  for (std::size_t a = 0; a < fg.size(); ++a) out << "  n" << a << " [label=\"" << fg.nodes[a].key_string() << "\"];\n";
  for (std::size_t a = 0; a < fg.size(); ++a)
    for (const FlipArc& arc : fg.adjacency[a])
      if (a < arc.neighbor)
        out << "  n" << a << " -- n" << arc.neighbor << " [label=\"-" << to_string(arc.out) << "/+"
            << to_string(arc.in) << "\"];\n";
  out << "}\n";
  return out.str();
}

json to_json(const RealizedPolytope& poly) {
  json vertices = json::array();
  for (const PolyhedronVertex& v : poly.vertices)
    vertices.push_back({{"ppt", edges_to_json(v.ppt.key())}, {"v", to_json(v.v)}, {"tight", edges_to_json(v.tight_edges)}});
  json edges = json::array();
  for (const BoundedEdge& e : poly.bounded_edges)
    edges.push_back({{"from", e.from}, {"to", e.to}, {"out", to_string(e.out)}, {"in", to_string(e.in)}});
  json rays = json::array();
  for (const PolytopeRay& r : poly.rays)
    rays.push_back({{"vertex", r.vertex},
                    {"hull_edge", to_string(r.hull_edge)},
                    {"direction", to_json(r.direction)},
                    {"tight", edges_to_json(r.tight)}});
  return {{"vertices", vertices}, {"edges", edges}, {"rays", rays}};
}

json to_json(const ExtremeRay& ray) {
  return {{"direction", to_json(ray.direction)},
          {"tight", edges_to_json(std::vector<Edge>(ray.tight_pairs.begin(), ray.tight_pairs.end()))}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace ppt::io
