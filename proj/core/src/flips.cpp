#include "ppt/flips.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "ppt/errors.hpp"

namespace ppt {

Ppt Ppt::from_graph(const PointSet& ps, EmbeddedGraph g) {
  if (g.vertex_count() != ps.size()) throw PreconditionError("graph vertex count does not match point set");
  if (!is_pointed_pseudo_triangulation(ps, g))
    throw PreconditionError("graph is not a pointed pseudo-triangulation: " + ppt::key_string(g.edges()));
  return Ppt(std::move(g));
}

std::string Ppt::key_string() const { return ppt::key_string(key()); }

std::string key_string(const std::vector<Edge>& edges) {
  std::string out;
  for (const Edge& e : edges) {
    if (!out.empty()) out += ',';
    out += to_string(e);
  }
  return out;
}

std::vector<Edge> interior_edges(const PointSet& ps, const Ppt& t) {
  const auto hull = hull_edges(ps);
  std::vector<Edge> out;
  for (const Edge& e : t.graph().edges())
    if (!std::binary_search(hull.begin(), hull.end(), e)) out.push_back(e);
  return out;
}

FlipResult flip(const PointSet& ps, const Ppt& t, Edge interior_edge) {
  if (!t.graph().contains(interior_edge)) throw PreconditionError("flip: edge " + to_string(interior_edge) + " is absent");
  const auto hull = hull_edges(ps);
  if (std::binary_search(hull.begin(), hull.end(), interior_edge))
    throw PreconditionError("flip: edge " + to_string(interior_edge) + " is a hull edge");

  const EmbeddedGraph rest = t.graph().without(interior_edge);
  std::set<std::size_t> region;
  for (const Face& f : faces(ps, rest).faces) {
    if (f.is_outer) continue;
    const bool has_i = std::find(f.cycle.begin(), f.cycle.end(), interior_edge.i) != f.cycle.end();
    const bool has_j = std::find(f.cycle.begin(), f.cycle.end(), interior_edge.j) != f.cycle.end();
    if (!has_i || !has_j) continue;
    region.insert(f.cycle.begin(), f.cycle.end());
  }
  if (region.empty()) throw InvariantViolation("flip: no pseudo-quadrilateral around " + to_string(interior_edge));

  std::vector<Edge> candidates;
  for (auto a = region.begin(); a != region.end(); ++a)
    for (auto b = std::next(a); b != region.end(); ++b) {
      const Edge e(*a, *b);
      if (e == interior_edge || rest.contains(e)) continue;
      if (is_pointed_pseudo_triangulation(ps, rest.with(e))) candidates.push_back(e);
    }
  if (candidates.size() != 1)
    throw InvariantViolation("flip of " + to_string(interior_edge) + " has " + std::to_string(candidates.size()) +
                             " replacements");
  return {Ppt::from_graph(ps, rest.with(candidates.front())), candidates.front()};
}

std::size_t FlipGraph::edge_count() const {
  std::size_t arcs = 0;
  for (const auto& adj : adjacency) arcs += adj.size();
  return arcs / 2;
}

std::optional<std::size_t> FlipGraph::find(const std::vector<Edge>& key) const {
  for (std::size_t k = 0; k < nodes.size(); ++k)
    if (nodes[k].key() == key) return k;
  return std::nullopt;
}

FlipGraph enumerate_ppts(const PointSet& ps) {
  FlipGraph fg;
  std::map<std::vector<Edge>, std::size_t> index;
  std::deque<std::size_t> queue;

  auto intern = [&](Ppt t) {
    auto [it, fresh] = index.emplace(t.key(), fg.nodes.size());
    if (fresh) {
      fg.nodes.push_back(std::move(t));
      fg.adjacency.emplace_back();
      queue.push_back(it->second);
    }
    return it->second;
  };

  intern(Ppt::from_graph(ps, complete_to_ppt(ps, hull_graph(ps))));
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    const Ppt here = fg.nodes[cur];
    for (const Edge& e : interior_edges(ps, here)) {
      FlipResult r = flip(ps, here, e);
      const Edge inserted = r.inserted;
      const std::size_t nb = intern(std::move(r.ppt));
      fg.adjacency[cur].push_back({nb, e, inserted});
    }
  }
  return fg;
}

}  // namespace ppt
