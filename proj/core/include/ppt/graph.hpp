#ifndef PPT_GRAPH_HPP
#define PPT_GRAPH_HPP

#include <cstddef>
#include <vector>

#include "ppt/geometry.hpp"

namespace ppt {

/// Straight-line graph on the points of a PointSet. Only the vertex count is
/// stored; geometric queries take the PointSet alongside. The edge list is
/// kept sorted, so two graphs compare equal iff their edge sets are equal.
class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;
  /// Throws InputError on out-of-range indices, self-loops or duplicates.
  explicit EmbeddedGraph(std::size_t vertex_count, std::vector<Edge> edges = {});

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool contains(Edge e) const;
  void add(Edge e);
  void remove(Edge e);
  EmbeddedGraph with(Edge e) const;
  EmbeddedGraph without(Edge e) const;

  std::vector<std::size_t> neighbors(std::size_t v) const;
  std::size_t degree(std::size_t v) const;

  friend bool operator==(const EmbeddedGraph&, const EmbeddedGraph&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
};

EmbeddedGraph complete_graph(std::size_t n);
EmbeddedGraph hull_graph(const PointSet& ps);

/// Neighbors of v sorted counter-clockwise by direction, starting from the
/// positive x-axis. Uses only orientation signs.
std::vector<std::size_t> ccw_neighbors(const PointSet& ps, const EmbeddedGraph& g, std::size_t v);

/// True iff all edge directions at v fit in an open half-plane, i.e. some
/// angle between consecutive edges exceeds pi.
bool is_pointed_at(const PointSet& ps, const EmbeddedGraph& g, std::size_t v);
bool is_pointed(const PointSet& ps, const EmbeddedGraph& g);
bool is_noncrossing(const PointSet& ps, const EmbeddedGraph& g);
bool is_connected(const EmbeddedGraph& g);

struct Face {
  std::vector<std::size_t> cycle;  // vertices in traversal order, face on the left
  bool is_outer = false;           // clockwise (or degenerate) boundary cycle
  std::size_t convex_corners = 0;  // angles < pi inside the face, dangling edges ignored
};

struct FaceDecomposition {
  std::vector<Face> faces;

  std::size_t bounded_count() const;
  std::size_t outer_count() const;
};

/// Face cycles of a non-crossing graph from its rotation system. For a
/// connected graph there is exactly one outer cycle. Throws
/// PreconditionError for crossing graphs.
FaceDecomposition faces(const PointSet& ps, const EmbeddedGraph& g);

/// Non-crossing, connected, contains every hull edge, and every bounded face
/// has exactly three convex corners.
bool is_pseudo_triangulation(const PointSet& ps, const EmbeddedGraph& g);

/// Pseudo-triangulation that is also pointed. Cross-checks against the
/// counting characterization (pointed, non-crossing, 2n-3 edges) and throws
/// InvariantViolation if the two disagree.
bool is_pointed_pseudo_triangulation(const PointSet& ps, const EmbeddedGraph& g);

/// True iff adding e keeps g pointed and non-crossing (g assumed so).
bool can_add_edge(const PointSet& ps, const EmbeddedGraph& g, Edge e);

/// Greedily adds edges in lexicographic order while the graph stays pointed
/// and non-crossing. Throws PreconditionError when g itself is not.
EmbeddedGraph complete_to_ppt(const PointSet& ps, const EmbeddedGraph& g);

}  // namespace ppt

#endif  // PPT_GRAPH_HPP
