#include "ppt/delta.hpp"

#include <algorithm>

#include "ppt/errors.hpp"

namespace ppt {

StrainVector delta_of_motion(const PointSet& ps, const Motion& v) { return all_strains(ps, v); }

namespace {

const Rational& lookup(const StrainVector& delta, Edge e) {
  const auto it = delta.find(e);
  if (it == delta.end()) throw InputError("strain vector is missing pair " + to_string(e));
  return it->second;
}

}  // namespace

std::vector<QuadrupleResidual> check_quadruple_equations(const PointSet& ps, const StrainVector& delta) {
  std::vector<QuadrupleResidual> out;
  for (const Quadruple& q : all_quadruples(ps.size()))
    out.push_back({q, stress_pairing(ps, q, [&](Edge e) { return lookup(delta, e); })});
  return out;
}

Motion reconstruct_motion(const PointSet& ps, const StrainVector& delta, const Normalization& norm) {
  const std::size_t a = norm.anchor_a;
  const std::size_t b = norm.anchor_b;
  Motion v(ps.size());
  // v_a = 0 and v_b = (0, t): the strain of ab is -(y_a - y_b) t.
  v[b].y = -lookup(delta, Edge(a, b)) / (ps[a].y - ps[b].y);
  for (std::size_t k = 0; k < ps.size(); ++k) {
    if (k == a || k == b) continue;
    const Point ra = ps[k] - ps[a];
    const Point rb = ps[k] - ps[b];
    const Rational ca = lookup(delta, Edge(k, a)) + dot(ra, v[a]);
    const Rational cb = lookup(delta, Edge(k, b)) + dot(rb, v[b]);
    const Rational det = cross(ra, rb);
    v[k] = {(ca * rb.y - cb * ra.y) / det, (ra.x * cb - rb.x * ca) / det};
  }
  for (const Edge& e : all_pairs(ps.size()))
    if (strain(ps, v, e) != lookup(delta, e))
      throw NotInImage("strain vector is not realized by any motion (pair " + to_string(e) + ")");
  return v;
}

StrainVector vertex_delta(const PointSet& ps, const PerturbationTable& f, const Motion& v) {
  StrainVector d;
  for (const Edge& e : all_pairs(ps.size())) d.emplace(e, f[e] - strain(ps, v, e));
  return d;
}

bool delta_space_check(const PointSet& ps, const PerturbationTable& f, const PolyhedronVertex& vertex) {
  const StrainVector d = vertex_delta(ps, f, vertex.v);
  for (const auto& [e, value] : d) {
    if (sgn(value) > 0) return false;
    if ((sgn(value) == 0) != vertex.ppt.graph().contains(e)) return false;
  }
  for (const Quadruple& q : all_quadruples(ps.size())) {
    if (stress_pairing(ps, q, [&](Edge e) { return d.at(e); }) != 1) return false;
  }
  return true;
}

}  // namespace ppt
