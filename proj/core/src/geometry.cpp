#include "ppt/geometry.hpp"

#include <algorithm>
#include <numeric>

#include "ppt/errors.hpp"

namespace ppt {

Rational det3(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

int orientation(const Point& a, const Point& b, const Point& c) { return sgn(det3(a, b, c)); }

std::string to_string(Edge e) { return std::to_string(e.i) + "-" + std::to_string(e.j); }

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  const std::size_t n = points_.size();
  if (n < 3) throw InputError("a planar point set needs at least 3 points, got " + std::to_string(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (points_[a] == points_[b])
        throw GeneralPositionError("points " + std::to_string(a) + " and " + std::to_string(b) + " coincide",
                                   {a, b, b});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        if (orientation(points_[a], points_[b], points_[c]) == 0)
          throw GeneralPositionError("points " + std::to_string(a) + ", " + std::to_string(b) + ", " +
                                         std::to_string(c) + " are collinear",
                                     {a, b, c});
}

bool segments_cross(Edge e1, Edge e2, const PointSet& ps) {
  if (e1.touches(e2.i) || e1.touches(e2.j)) return false;
  const Point& a = ps[e1.i];
  const Point& b = ps[e1.j];
  const Point& c = ps[e2.i];
  const Point& d = ps[e2.j];
  return orientation(a, b, c) * orientation(a, b, d) < 0 && orientation(c, d, a) * orientation(c, d, b) < 0;
}

std::vector<std::size_t> convex_hull(const PointSet& ps) {
  const std::size_t n = ps.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t u, std::size_t v) {
    return ps[u].x < ps[v].x || (ps[u].x == ps[v].x && ps[u].y < ps[v].y);
  });

  // Andrew's monotone chain; general position means no collinear triples.
  std::vector<std::size_t> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t idx : order) {
    while (k >= 2 && orientation(ps[hull[k - 2]], ps[hull[k - 1]], ps[idx]) <= 0) --k;
    hull[k++] = idx;
  }
  for (std::size_t t = n - 1, lower = k + 1; t-- > 0;) {
    const std::size_t idx = order[t];
    while (k >= lower && orientation(ps[hull[k - 2]], ps[hull[k - 1]], ps[idx]) <= 0) --k;
    hull[k++] = idx;
  }
  hull.resize(k - 1);
  return hull;
}

std::vector<Edge> hull_edges(const PointSet& ps) {
  const auto hull = convex_hull(ps);
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < hull.size(); ++k) edges.emplace_back(hull[k], hull[(k + 1) % hull.size()]);
  std::sort(edges.begin(), edges.end());
  return edges;
}

bool strictly_inside(const PointSet& ps, const std::vector<std::size_t>& ccw_polygon, std::size_t q) {
  const std::size_t m = ccw_polygon.size();
  if (m < 3) return false;
  for (std::size_t k = 0; k < m; ++k)
    if (orientation(ps[ccw_polygon[k]], ps[ccw_polygon[(k + 1) % m]], ps[q]) <= 0) return false;
  return true;
}

}  // namespace ppt
