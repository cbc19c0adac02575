#ifndef PPT_RIGIDITY_HPP
#define PPT_RIGIDITY_HPP

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "ppt/geometry.hpp"
#include "ppt/graph.hpp"
#include "ppt/matrix.hpp"

namespace ppt {

/// Infinitesimal motion: one velocity per point.
struct Motion {
  std::vector<Point> velocities;

  Motion() = default;
  explicit Motion(std::size_t n) : velocities(n, Point{0, 0}) {}
  explicit Motion(std::vector<Point> v) : velocities(std::move(v)) {}

  std::size_t size() const noexcept { return velocities.size(); }
  Point& operator[](std::size_t i) { return velocities[i]; }
  const Point& operator[](std::size_t i) const { return velocities[i]; }

  /// Interleaved coordinates (x0, y0, x1, y1, ...).
  Column to_column() const;
  static Motion from_column(std::span<const Rational> column);

  bool is_zero() const;

  friend bool operator==(const Motion&, const Motion&) = default;
};

Motion operator+(const Motion& a, const Motion& b);
Motion operator-(const Motion& a, const Motion& b);
Motion operator*(const Rational& s, const Motion& m);

/// Pins the trivial motions: v_a = (0,0) and the x-velocity of b is zero.
/// Requires the two anchors to have different y-coordinates.
struct Normalization {
  std::size_t anchor_a = 0;
  std::size_t anchor_b = 1;

  /// Lowest index, and the lowest index whose y differs from it.
  static Normalization for_points(const PointSet& ps);
  /// Throws PreconditionError on invalid anchors.
  static Normalization with_anchors(const PointSet& ps, std::size_t a, std::size_t b);

  bool holds(const Motion& m) const;
};

using StrainVector = std::map<Edge, Rational>;

/// Edge weights; a self-stress when in equilibrium at every vertex.
struct Stress {
  std::map<Edge, Rational> weights;

  Rational operator[](Edge e) const;
  bool is_zero() const;
  friend bool operator==(const Stress&, const Stress&) = default;
};

/// |E| x 2n; the row for ij holds p_i - p_j at i's columns and p_j - p_i at j's.
Matrix rigidity_matrix(const PointSet& ps, const EmbeddedGraph& g);

/// <p_i - p_j, v_i - v_j>.
Rational strain(const PointSet& ps, const Motion& m, Edge e);
StrainVector strains(const PointSet& ps, const EmbeddedGraph& g, const Motion& m);
StrainVector all_strains(const PointSet& ps, const Motion& m);

/// The three rows v_a^x = v_a^y = v_b^x = 0 as a 3 x 2n matrix.
Matrix normalization_rows(std::size_t n, const Normalization& norm);

/// Basis of the normalized flexes; its size is the degree of freedom.
std::vector<Motion> flex_space(const PointSet& ps, const EmbeddedGraph& g, const Normalization& norm);

/// Basis of the self-stresses (left nullspace of the rigidity matrix).
std::vector<Stress> stress_space(const PointSet& ps, const EmbeddedGraph& g);

bool is_equilibrium(const PointSet& ps, const Stress& w);

/// w_ij = alpha_i alpha_j on the complete graph. Throws PreconditionError
/// unless sum alpha_i p_i = 0 and sum alpha_i = 0.
Stress stress_from_affine_dependence(std::span<const Rational> alpha, const PointSet& ps);

/// w_ij = 1 / (det(p_i,p_j,p_k) det(p_i,p_j,p_l)) on the six pairs of the
/// quadruple, keyed by the original indices. Positive on boundary pairs of
/// the quadruple, negative on interior ones.
Stress four_point_stress(const PointSet& ps, std::array<std::size_t, 4> quad);

/// 2n-3 edges and every induced subgraph on k >= 2 vertices has at most
/// 2k-3 edges. Exhaustive over vertex subsets; refuses n > 20.
bool is_laman(const EmbeddedGraph& g);

/// Subtracts the trivial motion that makes m satisfy the normalization.
Motion normalize_motion(const PointSet& ps, const Motion& m, const Normalization& norm);

Motion translation(std::size_t n, const Point& t);
Motion rotation_about(const PointSet& ps, const Point& center);
Motion dilation(const PointSet& ps);

}  // namespace ppt

#endif  // PPT_RIGIDITY_HPP
