#ifndef PPT_FLIPS_HPP
#define PPT_FLIPS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ppt/graph.hpp"

namespace ppt {

/// A pointed pseudo-triangulation. Only constructible from a graph that passes
/// is_pointed_pseudo_triangulation; its key is the sorted edge list.
class Ppt {
 public:
  /// Throws PreconditionError if g is not a pointed pseudo-triangulation.
  static Ppt from_graph(const PointSet& ps, EmbeddedGraph g);

  const EmbeddedGraph& graph() const noexcept { return graph_; }
  const std::vector<Edge>& key() const noexcept { return graph_.edges(); }
  /// "i-j,k-l,..." in key order.
  std::string key_string() const;

  friend bool operator==(const Ppt&, const Ppt&) = default;
  friend auto operator<=>(const Ppt& a, const Ppt& b) { return a.key() <=> b.key(); }

 private:
  explicit Ppt(EmbeddedGraph g) : graph_(std::move(g)) {}
  EmbeddedGraph graph_;
};

std::string key_string(const std::vector<Edge>& edges);

/// Interior edges of t (those not on the convex hull).
std::vector<Edge> interior_edges(const PointSet& ps, const Ppt& t);

struct FlipResult {
  Ppt ppt;
  Edge inserted;
};

/// Removes an interior edge and inserts the unique other edge that splits the
/// resulting pseudo-quadrilateral. Throws PreconditionError for hull or absent
/// edges and InvariantViolation if the replacement is not unique.
FlipResult flip(const PointSet& ps, const Ppt& t, Edge interior_edge);

struct FlipArc {
  std::size_t neighbor;
  Edge out;  // removed from this node
  Edge in;   // inserted to reach the neighbor
};

struct FlipGraph {
  std::vector<Ppt> nodes;                       // BFS discovery order
  std::vector<std::vector<FlipArc>> adjacency;  // arcs sorted by removed edge

  std::size_t size() const noexcept { return nodes.size(); }
  std::size_t edge_count() const;
  std::optional<std::size_t> find(const std::vector<Edge>& key) const;
};

/// Breadth-first search over interior-edge flips, seeded with the lexicographic
/// completion of the hull. Node order is deterministic.
FlipGraph enumerate_ppts(const PointSet& ps);

}  // namespace ppt

#endif  // PPT_FLIPS_HPP
