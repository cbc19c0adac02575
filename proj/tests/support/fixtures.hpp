#ifndef PPT_TESTS_FIXTURES_HPP
#define PPT_TESTS_FIXTURES_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "ppt/errors.hpp"
#include "ppt/geometry.hpp"
#include "ppt/rigidity.hpp"

namespace fixtures {

using ppt::Point;
using ppt::PointSet;
using ppt::Rational;

inline Point P(long x, long y) { return {Rational(x), Rational(y)}; }

inline PointSet triangle() { return PointSet({P(0, 0), P(4, 0), P(1, 3)}); }
inline PointSet unit_square() { return PointSet({P(0, 0), P(1, 0), P(1, 1), P(0, 1)}); }
// Triangle with one point inside.
inline PointSet triangle_plus_one() { return PointSet({P(0, 0), P(6, 0), P(2, 5), P(3, 2)}); }
inline PointSet convex_pentagon() { return PointSet({P(0, 0), P(4, 0), P(5, 3), P(2, 5), P(-1, 3)}); }
// Quadrilateral with one interior point: the order type with 20 extreme rays.
inline PointSet quad_plus_one() { return PointSet({P(0, 0), P(6, 0), P(6, 6), P(0, 6), P(2, 3)}); }
inline PointSet triangle_plus_two() { return PointSet({P(0, 0), P(6, 0), P(3, 6), P(2, 2), P(3, 1)}); }
inline PointSet six_mixed() { return PointSet({P(0, 0), P(7, 1), P(9, 6), P(3, 8), P(4, 3), P(2, 5)}); }
inline PointSet seven_mixed() {
  return PointSet({P(0, 0), P(10, 0), P(12, 7), P(5, 11), P(-2, 6), P(4, 2), P(6, 6)});
}

/// Convex n-gon in counter-clockwise order: points (i, i^2) on a parabola.
inline PointSet convex_polygon(std::size_t n) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i) {
    const long x = static_cast<long>(i);
    pts.push_back(P(x, x * x));
  }
  return PointSet(std::move(pts));
}

/// Random general-position set with coordinates in [-range, range].
inline PointSet random_points(std::size_t n, std::mt19937_64& rng, long range = 12) {
  std::uniform_int_distribution<long> coord(-range, range);
  while (true) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back(P(coord(rng), coord(rng)));
    try {
      return PointSet(std::move(pts));
    } catch (const ppt::GeneralPositionError&) {
    }
  }
}

/// Random rational in [-range, range] with denominator up to maxden.
inline Rational random_rational(std::mt19937_64& rng, long range = 10, long maxden = 6) {
  std::uniform_int_distribution<long> num(-range * maxden, range * maxden);
  std::uniform_int_distribution<long> den(1, maxden);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

/// Random general-position set with rational coordinates.
inline PointSet random_rational_points(std::size_t n, std::mt19937_64& rng) {
  while (true) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back({random_rational(rng), random_rational(rng)});
    try {
      return PointSet(std::move(pts));
    } catch (const ppt::GeneralPositionError&) {
    }
  }
}

inline ppt::Motion random_motion(std::size_t n, std::mt19937_64& rng) {
  ppt::Motion m(n);
  for (auto& v : m.velocities) v = {random_rational(rng), random_rational(rng)};
  return m;
}

}  // namespace fixtures

#endif  // PPT_TESTS_FIXTURES_HPP
