#ifndef PPT_IO_HPP
#define PPT_IO_HPP

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "ppt/assoc1d.hpp"
#include "ppt/cone.hpp"
#include "ppt/flips.hpp"
#include "ppt/graph.hpp"
#include "ppt/polytope.hpp"
#include "ppt/rigidity.hpp"

// JSON encodings. Rationals are bare integers when integral (and within
// int64), otherwise "num/den" strings; parsing accepts both plus decimal
// strings. 2D indices are 0-based; 1D (assoc1d) labels are 1-based.
namespace ppt::io {

using json = nlohmann::json;

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

/// {"points": [[x, y], ...]}
json to_json(const PointSet& ps);
PointSet point_set_from_json(const json& j);

/// {"edges": [[i, j], ...]}
json to_json(const EmbeddedGraph& g);
EmbeddedGraph graph_from_json(const json& j, std::size_t vertex_count);

json edges_to_json(const std::vector<Edge>& edges);
std::vector<Edge> edges_from_json(const json& j);

/// [[vx, vy], ...]
json to_json(const Motion& m);
Motion motion_from_json(const json& j);

/// {"i-j": w, ...}
json to_json(const Stress& w);
Stress stress_from_json(const json& j);
json strains_to_json(const StrainVector& s);
StrainVector strains_from_json(const json& j);

Edge parse_pair_key(const std::string& key);

/// {"n": 4, "g": {"1-2": 1, ...}}; input also accepts {"n": 4, "scheme": "square"}
/// and {"scheme": "convex", "t": [...], "h": "square" | "power:k"}.
json to_json(const assoc1d::GTable& g);
assoc1d::GTable gtable_from_json(const json& j);

json to_json(const assoc1d::Tree1D& t);

/// {"nodes": [{"key": ..., "edges": ...}], "flips": [[a, b, {"out": e, "in": e'}], ...]}
json to_json(const FlipGraph& fg);
/// Nodes labelled by canonical key, arcs labelled "-i-j/+k-l"; each flip once.
std::string to_dot(const FlipGraph& fg);

/// {"vertices": [...], "edges": [...], "rays": [...]}
json to_json(const RealizedPolytope& poly);

json to_json(const ExtremeRay& ray);

/// Reads a whole file; throws InputError when it cannot be opened or parsed.
json read_json_file(const std::string& path);

}  // namespace ppt::io

#endif  // PPT_IO_HPP
