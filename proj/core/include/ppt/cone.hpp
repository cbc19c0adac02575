#ifndef PPT_CONE_HPP
#define PPT_CONE_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ppt/mechanism.hpp"
#include "ppt/rigidity.hpp"

namespace ppt {

/// Extreme ray of the expansion cone {strain >= 0 on all pairs} under a
/// normalization, labelled by the pairs it keeps at zero strain.
struct ExtremeRay {
  Motion direction;
  std::set<Edge> tight_pairs;
};

/// One ray per distinct collapsed pte-mechanism. When two mechanisms collapse
/// to the same tight set their flexes are checked to be positive multiples.
std::vector<ExtremeRay> cone_extreme_rays(const PointSet& ps, const Normalization& norm);

/// Independent oracle: every set of 2n-4 cone constraints whose solution
/// space (with the normalization) is a line, kept when one of its two
/// directions is expansive. Larger tight sets contain such a basis, so sets
/// of exactly 2n-4 pairs suffice. Refuses n > 6.
std::vector<ExtremeRay> brute_force_rays(const PointSet& ps, const Normalization& norm);

/// Same tight sets, and each pair of matching directions positively parallel.
bool same_rays(const std::vector<ExtremeRay>& a, const std::vector<ExtremeRay>& b);

/// u = c v for some rational c > 0.
bool positively_parallel(const Motion& u, const Motion& v);

/// Closure properties any tight set of an expansive motion must have:
/// crossing tight pairs, non-pointed tight stars and tight convex polygons all
/// force the complete graph on the points involved (for polygons, including
/// enclosed points). Returns a description of each violation. The polygon
/// check enumerates vertex subsets and is skipped above 14 points.
std::vector<std::string> tight_closure_violations(const PointSet& ps, const std::set<Edge>& tight);

/// An expansive flex of a pointed non-crossing g that is strictly expansive on
/// every hull edge missing from g; std::nullopt iff g has all hull edges.
/// Throws PreconditionError if g is crossing or not pointed.
std::optional<Motion> expansive_flex(const PointSet& ps, const EmbeddedGraph& g, const Normalization& norm);

}  // namespace ppt

#endif  // PPT_CONE_HPP
