#ifndef PPT_SECONDARY_HPP
#define PPT_SECONDARY_HPP

#include <cstddef>
#include <vector>

#include "ppt/flips.hpp"
#include "ppt/perturbation.hpp"
#include "ppt/polytope.hpp"

namespace ppt {

// Areas below are normalized: |det(p,q,r)|, twice the Euclidean area.

/// Points i = 0..n-1 are the vertices of a convex polygon in ccw order.
bool is_ccw_convex(const PointSet& ps);

struct ConvexReindex {
  PointSet points;                        // reordered ccw along the hull
  std::vector<std::size_t> original_index;  // original_index[new] = old
};

/// Reorders a convex-position set ccw starting from the hull's first vertex.
/// Throws PreconditionError when some point is not a hull vertex.
ConvexReindex to_ccw_convex(const PointSet& ps);

/// a_i = sum of normalized areas of the triangles of t at p_i. Throws
/// PreconditionError unless ps is ccw convex.
std::vector<Rational> gkz_vector(const PointSet& ps, const Ppt& t);

/// The secondary-polytope point read off a polytope vertex:
/// a_i = -d_{i-1,i+1} / det(p_{i-1},p_i,p_{i+1}) + det(p_{i-1},p_i,p_{i+1}).
std::vector<Rational> secondary_coordinates(const PointSet& ps, const PerturbationTable& f, const Motion& v);

/// Per index i, whether d_{i-1,i+1} = -D_i (Area_T(p_i) - D_i) holds, where
/// D_i = det(p_{i-1},p_i,p_{i+1}).
std::vector<bool> almost_hull_delta(const PointSet& ps, const Ppt& t, const PerturbationTable& f,
                                    const PolyhedronVertex& vertex);

struct AffineMapReport {
  bool ok = false;
  std::vector<std::vector<Rational>> gkz;  // per realized vertex
  std::size_t vertex_mismatches = 0;
  std::size_t midpoint_mismatches = 0;
};

/// Realizes the polytope and compares secondary_coordinates with gkz_vector
/// at every vertex and at the midpoint of every bounded edge.
AffineMapReport affine_map_check(const PointSet& ps, const PerturbationTable& f);

}  // namespace ppt

#endif  // PPT_SECONDARY_HPP
