#ifndef PPT_DELTA_HPP
#define PPT_DELTA_HPP

#include <vector>

#include "ppt/perturbation.hpp"
#include "ppt/polytope.hpp"
#include "ppt/rigidity.hpp"

namespace ppt {

// Pair-space coordinates: a motion is described by its strains on all pairs.
// Such a vector is in the image of the rigidity map iff it pairs to zero with
// the four-point stress of every quadruple.

/// Strains of v on every pair.
StrainVector delta_of_motion(const PointSet& ps, const Motion& v);

struct QuadrupleResidual {
  Quadruple quad;
  Rational residual;  // sum w_ij delta_ij
};

/// One residual per quadruple. Throws InputError when delta misses a pair.
std::vector<QuadrupleResidual> check_quadruple_equations(const PointSet& ps, const StrainVector& delta);

/// The normalized motion whose strains are delta, built from the two anchors
/// outward. Throws NotInImage if some pair disagrees.
Motion reconstruct_motion(const PointSet& ps, const StrainVector& delta, const Normalization& norm);

/// Coordinates d_ij = f_ij - strain_ij at a polyhedron vertex.
StrainVector vertex_delta(const PointSet& ps, const PerturbationTable& f, const Motion& v);

/// d <= 0 on all pairs, d = 0 exactly on the ppt edges, and every quadruple
/// sums to 1 against the four-point stress.
bool delta_space_check(const PointSet& ps, const PerturbationTable& f, const PolyhedronVertex& vertex);

}  // namespace ppt

#endif  // PPT_DELTA_HPP
