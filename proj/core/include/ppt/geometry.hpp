#ifndef PPT_GEOMETRY_HPP
#define PPT_GEOMETRY_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "ppt/rational.hpp"

namespace ppt {

/// A point or a planar vector with exact coordinates.
struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(const Rational& s, const Point& a) { return {s * a.x, s * a.y}; }
inline Rational dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }
inline Rational cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
/// Counter-clockwise quarter turn.
inline Point perp(const Point& u) { return {-u.y, u.x}; }

/// det of the 3x3 matrix with columns (a,1), (b,1), (c,1); equals (b-a) x (c-a).
Rational det3(const Point& a, const Point& b, const Point& c);

/// Sign of det3: +1 for a left turn a->b->c, -1 for a right turn, 0 if collinear.
int orientation(const Point& a, const Point& b, const Point& c);

/// An unordered pair of point indices, stored with i < j.
struct Edge {
  std::size_t i = 0;
  std::size_t j = 0;

  Edge() = default;
  constexpr Edge(std::size_t a, std::size_t b) : i(a < b ? a : b), j(a < b ? b : a) {}

  bool touches(std::size_t v) const { return i == v || j == v; }
  std::size_t other(std::size_t v) const { return v == i ? j : i; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// "i-j" with the indices as stored.
std::string to_string(Edge e);

/// Finite planar point set, validated to be in general position: all points
/// distinct and no three collinear.
class PointSet {
 public:
  PointSet() = default;
  /// Throws GeneralPositionError naming the offending indices, or InputError
  /// when fewer than three points are given.
  explicit PointSet(std::vector<Point> points);

  std::size_t size() const noexcept { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const noexcept { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  Rational det(std::size_t a, std::size_t b, std::size_t c) const {
    return det3(points_[a], points_[b], points_[c]);
  }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<Point> points_;
};

/// True iff the open segments of e1 and e2 properly intersect. Segments
/// sharing an endpoint never cross under general position.
bool segments_cross(Edge e1, Edge e2, const PointSet& ps);

/// Counter-clockwise hull cycle starting at the lexicographically smallest point.
std::vector<std::size_t> convex_hull(const PointSet& ps);

/// Consecutive pairs of convex_hull(ps).
std::vector<Edge> hull_edges(const PointSet& ps);

/// True iff q lies strictly inside the convex polygon given as a ccw cycle.
bool strictly_inside(const PointSet& ps, const std::vector<std::size_t>& ccw_polygon, std::size_t q);

}  // namespace ppt

#endif  // PPT_GEOMETRY_HPP
