#include "ppt/graph.hpp"

#include <algorithm>
#include <map>

#include "ppt/errors.hpp"

namespace ppt {

EmbeddedGraph::EmbeddedGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (const Edge& e : edges_) {
    if (e.j >= vertex_count_)
      throw InputError("edge " + to_string(e) + " out of range for " + std::to_string(vertex_count_) + " vertices");
    if (e.i == e.j) throw InputError("self-loop at vertex " + std::to_string(e.i));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) throw InputError("duplicate edge");
}

bool EmbeddedGraph::contains(Edge e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

void EmbeddedGraph::add(Edge e) {
  if (e.j >= vertex_count_ || e.i == e.j) throw InputError("invalid edge " + to_string(e));
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) throw InputError("duplicate edge " + to_string(e));
  edges_.insert(it, e);
}

void EmbeddedGraph::remove(Edge e) {
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) throw InputError("edge " + to_string(e) + " not present");
  edges_.erase(it);
}

EmbeddedGraph EmbeddedGraph::with(Edge e) const {
  EmbeddedGraph g = *this;
  g.add(e);
  return g;
}

EmbeddedGraph EmbeddedGraph::without(Edge e) const {
  EmbeddedGraph g = *this;
  g.remove(e);
  return g;
}

std::vector<std::size_t> EmbeddedGraph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (const Edge& e : edges_)
    if (e.touches(v)) out.push_back(e.other(v));
  return out;
}

std::size_t EmbeddedGraph::degree(std::size_t v) const {
  return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [v](Edge e) { return e.touches(v); }));
}

EmbeddedGraph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return EmbeddedGraph(n, std::move(edges));
}

EmbeddedGraph hull_graph(const PointSet& ps) { return EmbeddedGraph(ps.size(), hull_edges(ps)); }

namespace {

// 0 for directions in [0, pi), 1 for [pi, 2 pi).
int half_plane(const Point& d) { return (sgn(d.y) > 0 || (sgn(d.y) == 0 && sgn(d.x) > 0)) ? 0 : 1; }

bool ccw_before(const Point& a, const Point& b) {
  const int ha = half_plane(a);
  const int hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return sgn(cross(a, b)) > 0;
}

}  // namespace

std::vector<std::size_t> ccw_neighbors(const PointSet& ps, const EmbeddedGraph& g, std::size_t v) {
  std::vector<std::size_t> nb = g.neighbors(v);
  std::sort(nb.begin(), nb.end(), [&](std::size_t a, std::size_t b) { return ccw_before(ps[a] - ps[v], ps[b] - ps[v]); });
  return nb;
}

bool is_pointed_at(const PointSet& ps, const EmbeddedGraph& g, std::size_t v) {
  const auto nb = ccw_neighbors(ps, g, v);
  if (nb.size() <= 2) return true;
  for (std::size_t k = 0; k < nb.size(); ++k) {
    const Point u = ps[nb[k]] - ps[v];
    const Point w = ps[nb[(k + 1) % nb.size()]] - ps[v];
    if (sgn(cross(u, w)) < 0) return true;  // ccw gap from u to w exceeds pi
  }
  return false;
}

bool is_pointed(const PointSet& ps, const EmbeddedGraph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (!is_pointed_at(ps, g, v)) return false;
  return true;
}

bool is_noncrossing(const PointSet& ps, const EmbeddedGraph& g) {
  const auto& edges = g.edges();
  for (std::size_t a = 0; a < edges.size(); ++a)
    for (std::size_t b = a + 1; b < edges.size(); ++b)
      if (segments_cross(edges[a], edges[b], ps)) return false;
  return true;
}

bool is_connected(const EmbeddedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<std::vector<std::size_t>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[e.i].push_back(e.j);
    adj[e.j].push_back(e.i);
  }
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

std::size_t FaceDecomposition::bounded_count() const {
  return static_cast<std::size_t>(std::count_if(faces.begin(), faces.end(), [](const Face& f) { return !f.is_outer; }));
}

std::size_t FaceDecomposition::outer_count() const { return faces.size() - bounded_count(); }

FaceDecomposition faces(const PointSet& ps, const EmbeddedGraph& g) {
  if (!is_noncrossing(ps, g)) throw PreconditionError("faces: graph has crossing edges");
  const std::size_t n = g.vertex_count();

  std::vector<std::vector<std::size_t>> rotation(n);
  std::vector<std::map<std::size_t, std::size_t>> position(n);
  for (std::size_t v = 0; v < n; ++v) {
    rotation[v] = ccw_neighbors(ps, g, v);
    for (std::size_t k = 0; k < rotation[v].size(); ++k) position[v][rotation[v][k]] = k;
  }

  std::map<std::pair<std::size_t, std::size_t>, bool> used;
  FaceDecomposition out;
  for (const Edge& e : g.edges()) {
    for (const auto& start : {std::pair{e.i, e.j}, std::pair{e.j, e.i}}) {
      if (used[start]) continue;
      Face face;
      std::pair<std::size_t, std::size_t> half = start;
      do {
        used[half] = true;
        face.cycle.push_back(half.first);
        const auto [u, v] = half;
        const auto& rot = rotation[v];
        const std::size_t k = position[v][u];
        half = {v, rot[(k + rot.size() - 1) % rot.size()]};  // next clockwise keeps the face on the left
      } while (half != start);

      Rational twice_area = 0;
      for (std::size_t k = 0; k < face.cycle.size(); ++k)
        twice_area += cross(ps[face.cycle[k]], ps[face.cycle[(k + 1) % face.cycle.size()]]);

      // Corners are counted on the boundary with dangling edges pruned: a
      // walk x, t, x up a spike and back does not bound the region.
      std::vector<std::size_t> shape = face.cycle;
      for (bool pruned = true; pruned && shape.size() > 2;) {
        pruned = false;
        const std::size_t m = shape.size();
        for (std::size_t k = 0; k < m; ++k)
          if (shape[(k + m - 1) % m] == shape[(k + 1) % m]) {
            const std::size_t a = std::max(k, (k + 1) % m), b = std::min(k, (k + 1) % m);
            shape.erase(shape.begin() + static_cast<std::ptrdiff_t>(a));
            shape.erase(shape.begin() + static_cast<std::ptrdiff_t>(b));
            pruned = true;
            break;
          }
      }
      const std::size_t m = shape.size();
      if (m >= 3)
        for (std::size_t k = 0; k < m; ++k)
          if (orientation(ps[shape[(k + m - 1) % m]], ps[shape[k]], ps[shape[(k + 1) % m]]) > 0) ++face.convex_corners;
      face.is_outer = sgn(twice_area) <= 0;
      out.faces.push_back(std::move(face));
    }
  }
  return out;
}

bool is_pseudo_triangulation(const PointSet& ps, const EmbeddedGraph& g) {
  if (g.vertex_count() != ps.size()) return false;
  if (!is_noncrossing(ps, g) || !is_connected(g)) return false;
  for (const Edge& h : hull_edges(ps))
    if (!g.contains(h)) return false;
  for (const Face& f : faces(ps, g).faces) {
    if (f.is_outer) continue;
    // A dangling edge inside a face shows up as a repeated vertex.
    std::vector<std::size_t> seen = f.cycle;
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
    if (f.convex_corners != 3) return false;
  }
  return true;
}

bool is_pointed_pseudo_triangulation(const PointSet& ps, const EmbeddedGraph& g) {
  const bool pointed = g.vertex_count() == ps.size() && is_pointed(ps, g);
  const bool by_faces = pointed && is_pseudo_triangulation(ps, g);
  const bool by_count = pointed && is_noncrossing(ps, g) && g.edge_count() == 2 * ps.size() - 3;
  if (by_faces != by_count)
    throw InvariantViolation("pseudo-triangulation tests disagree (face route " + std::to_string(by_faces) +
                             ", count route " + std::to_string(by_count) + ")");
  return by_faces;
}

bool can_add_edge(const PointSet& ps, const EmbeddedGraph& g, Edge e) {
  if (g.contains(e)) return false;
  for (const Edge& other : g.edges())
    if (segments_cross(e, other, ps)) return false;
  const EmbeddedGraph h = g.with(e);
  return is_pointed_at(ps, h, e.i) && is_pointed_at(ps, h, e.j);
}

EmbeddedGraph complete_to_ppt(const PointSet& ps, const EmbeddedGraph& g) {
  if (g.vertex_count() != ps.size()) throw PreconditionError("complete_to_ppt: vertex count mismatch");
  if (!is_pointed(ps, g) || !is_noncrossing(ps, g))
    throw PreconditionError("complete_to_ppt: input must be pointed and non-crossing");
  const std::size_t n = ps.size();
  const std::size_t target = 2 * n - 3;
  EmbeddedGraph out = g;
  bool changed = true;
  while (out.edge_count() < target && changed) {
    changed = false;
    for (std::size_t i = 0; i < n && out.edge_count() < target; ++i)
      for (std::size_t j = i + 1; j < n && out.edge_count() < target; ++j)
        if (can_add_edge(ps, out, Edge(i, j))) {
          out.add(Edge(i, j));
          changed = true;
        }
  }
  if (out.edge_count() != target)
    throw InvariantViolation("complete_to_ppt stalled at " + std::to_string(out.edge_count()) + " edges");
  return out;
}

}  // namespace ppt
