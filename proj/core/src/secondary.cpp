#include "ppt/secondary.hpp"

#include <algorithm>

#include "ppt/errors.hpp"

namespace ppt {

bool is_ccw_convex(const PointSet& ps) {
  const auto hull = convex_hull(ps);
  const std::size_t n = ps.size();
  if (hull.size() != n) return false;
  const auto start = std::find(hull.begin(), hull.end(), std::size_t{0});
  const std::size_t offset = static_cast<std::size_t>(start - hull.begin());
  for (std::size_t k = 0; k < n; ++k)
    if (hull[(offset + k) % n] != k) return false;
  return true;
}

ConvexReindex to_ccw_convex(const PointSet& ps) {
  const auto hull = convex_hull(ps);
  if (hull.size() != ps.size()) throw PreconditionError("points are not in convex position");
  std::vector<Point> pts;
  for (std::size_t i : hull) pts.push_back(ps[i]);
  return {PointSet(std::move(pts)), hull};
}

namespace {

Rational corner_det(const PointSet& ps, std::size_t i) {
  const std::size_t n = ps.size();
  return ps.det((i + n - 1) % n, i, (i + 1) % n);
}

Rational d_almost_hull(const PointSet& ps, const PerturbationTable& f, const Motion& v, std::size_t i) {
  const std::size_t n = ps.size();
  const Edge e((i + n - 1) % n, (i + 1) % n);
  return f[e] - strain(ps, v, e);
}

}  // namespace

std::vector<Rational> gkz_vector(const PointSet& ps, const Ppt& t) {
  if (!is_ccw_convex(ps)) throw PreconditionError("gkz_vector: points must be in ccw convex position");
  const std::size_t n = ps.size();
  std::vector<Rational> a(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> nb = t.graph().neighbors(i);
    std::sort(nb.begin(), nb.end(), [&](std::size_t x, std::size_t y) { return (x + n - i) % n < (y + n - i) % n; });
    for (std::size_t l = 0; l + 1 < nb.size(); ++l) a[i] += ps.det(i, nb[l], nb[l + 1]);
  }
  return a;
}

std::vector<Rational> secondary_coordinates(const PointSet& ps, const PerturbationTable& f, const Motion& v) {
  std::vector<Rational> a;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const Rational d = corner_det(ps, i);
    a.push_back(-d_almost_hull(ps, f, v, i) / d + d);
  }
  return a;
}

std::vector<bool> almost_hull_delta(const PointSet& ps, const Ppt& t, const PerturbationTable& f,
                                    const PolyhedronVertex& vertex) {
  const std::vector<Rational> area = gkz_vector(ps, t);
  std::vector<bool> ok;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const Rational d = corner_det(ps, i);
    ok.push_back(d_almost_hull(ps, f, vertex.v, i) == -d * (area[i] - d));
  }
  return ok;
}

AffineMapReport affine_map_check(const PointSet& ps, const PerturbationTable& f) {
  if (!is_ccw_convex(ps)) throw PreconditionError("affine_map_check: points must be in ccw convex position");
  const Normalization norm = Normalization::for_points(ps);
  const RealizedPolytope poly = realize_polytope(ps, f, norm);
  AffineMapReport report;
  for (const PolyhedronVertex& vx : poly.vertices) {
    report.gkz.push_back(gkz_vector(ps, vx.ppt));
    if (secondary_coordinates(ps, f, vx.v) != report.gkz.back()) ++report.vertex_mismatches;
  }
  for (const BoundedEdge& e : poly.bounded_edges) {
    const Motion mid = Rational(1, 2) * (poly.vertices[e.from].v + poly.vertices[e.to].v);
    std::vector<Rational> expected;
    for (std::size_t i = 0; i < ps.size(); ++i) expected.push_back((report.gkz[e.from][i] + report.gkz[e.to][i]) / 2);
    if (secondary_coordinates(ps, f, mid) != expected) ++report.midpoint_mismatches;
  }
  report.ok = report.vertex_mismatches == 0 && report.midpoint_mismatches == 0;
  return report;
}

}  // namespace ppt
