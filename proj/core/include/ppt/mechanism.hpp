#ifndef PPT_MECHANISM_HPP
#define PPT_MECHANISM_HPP

#include <cstddef>
#include <set>
#include <vector>

#include "ppt/flips.hpp"
#include "ppt/rigidity.hpp"

namespace ppt {

/// A pointed pseudo-triangulation minus one hull edge, with its unique
/// normalized flex oriented to stretch the removed edge.
struct PteMechanism {
  EmbeddedGraph graph;
  Edge removed_hull_edge;
  Motion flex;
};

/// Throws PreconditionError unless hull_edge is a hull edge of t, and
/// InvariantViolation if the flex is not one-dimensional or not expansive.
PteMechanism pte_mechanism(const PointSet& ps, const Ppt& t, Edge hull_edge, const Normalization& norm);

/// All pairs left at zero strain by the mechanism's flex. Two mechanisms
/// collapse to the same object iff they induce the same extreme ray.
struct CollapsedMechanism {
  std::set<Edge> tight_pairs;

  friend bool operator==(const CollapsedMechanism&, const CollapsedMechanism&) = default;
};

/// Maximal vertex subsets that move rigidly (pairwise zero strain) under m.
/// Sorted; every vertex is covered. Throws PreconditionError when m has a
/// zero flex or the wrong edge count for a mechanism.
std::vector<std::vector<std::size_t>> rigid_components(const PointSet& ps, const PteMechanism& m);

/// Tight pairs of the flex, after checking that they are exactly the complete
/// graphs on rigid components plus the remaining mechanism edges, and that
/// every component of three or more points contains all points enclosed by
/// its hull. Violations throw InvariantViolation.
CollapsedMechanism collapse(const PointSet& ps, const PteMechanism& m);

/// Maximal cliques of the zero-strain graph of an arbitrary motion.
std::vector<std::vector<std::size_t>> rigid_subsets(const PointSet& ps, const Motion& m);

}  // namespace ppt

#endif  // PPT_MECHANISM_HPP
