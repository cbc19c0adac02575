#ifndef PPT_POLYTOPE_HPP
#define PPT_POLYTOPE_HPP

#include <cstddef>
#include <vector>

#include "ppt/flips.hpp"
#include "ppt/perturbation.hpp"
#include "ppt/rigidity.hpp"

namespace ppt {

/// Pairs whose constraint strain >= f holds with equality at m.
std::vector<Edge> tight_pairs(const PointSet& ps, const PerturbationTable& f, const Motion& m);
/// All constraints strain_ij >= f_ij hold.
bool is_feasible(const PointSet& ps, const PerturbationTable& f, const Motion& m);

struct PolyhedronVertex {
  Ppt ppt;
  Motion v;
  std::vector<Edge> tight_edges;  // equals the ppt's edges
};

/// Solves strain = f on the edges of t plus the normalization. Throws
/// InvalidPerturbation if the solution is not unique or some non-edge fails
/// to be strictly slack.
PolyhedronVertex vertex_for_ppt(const PointSet& ps, const PerturbationTable& f, const Ppt& t,
                                const Normalization& norm);

/// Flip between vertices `from` and `to` of the realized polytope.
struct BoundedEdge {
  std::size_t from;
  std::size_t to;
  Edge out;
  Edge in;
};

/// Ray leaving a vertex by releasing one of its hull edges.
struct PolytopeRay {
  std::size_t vertex;
  Edge hull_edge;
  Motion direction;
  std::vector<Edge> tight;  // tight set along the ray: the ppt minus hull_edge
};

struct RealizedPolytope {
  std::vector<PolyhedronVertex> vertices;  // same order as enumerate_ppts
  std::vector<BoundedEdge> bounded_edges;  // from < to
  std::vector<PolytopeRay> rays;
};

/// Vertices, bounded edges and rays of the constrained-expansion polyhedron,
/// each checked against the constraint system as it is built.
RealizedPolytope realize_polytope(const PointSet& ps, const PerturbationTable& f, const Normalization& norm);

}  // namespace ppt

#endif  // PPT_POLYTOPE_HPP
