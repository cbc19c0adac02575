#include "ppt/rigidity.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "ppt/errors.hpp"

namespace ppt {

Column Motion::to_column() const {
  Column c;
  c.reserve(2 * velocities.size());
  for (const Point& v : velocities) {
    c.push_back(v.x);
    c.push_back(v.y);
  }
  return c;
}

Motion Motion::from_column(std::span<const Rational> column) {
  if (column.size() % 2 != 0) throw InputError("motion column must have even length");
  Motion m(column.size() / 2);
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = {column[2 * i], column[2 * i + 1]};
  return m;
}

bool Motion::is_zero() const {
  return std::all_of(velocities.begin(), velocities.end(), [](const Point& v) { return sgn(v.x) == 0 && sgn(v.y) == 0; });
}

Motion operator+(const Motion& a, const Motion& b) {
  if (a.size() != b.size()) throw InputError("motion sizes differ");
  Motion m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] + b[i];
  return m;
}

Motion operator-(const Motion& a, const Motion& b) {
  if (a.size() != b.size()) throw InputError("motion sizes differ");
  Motion m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] - b[i];
  return m;
}

Motion operator*(const Rational& s, const Motion& m) {
  Motion out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = s * m[i];
  return out;
}

Normalization Normalization::for_points(const PointSet& ps) {
  for (std::size_t b = 1; b < ps.size(); ++b)
    if (ps[b].y != ps[0].y) return {0, b};
  throw PreconditionError("normalization: all points share one y-coordinate");
}

Normalization Normalization::with_anchors(const PointSet& ps, std::size_t a, std::size_t b) {
  if (a >= ps.size() || b >= ps.size() || a == b) throw PreconditionError("normalization: invalid anchor indices");
  if (ps[a].y == ps[b].y) throw PreconditionError("normalization: anchors must have different y-coordinates");
  return {a, b};
}

bool Normalization::holds(const Motion& m) const {
  return sgn(m[anchor_a].x) == 0 && sgn(m[anchor_a].y) == 0 && sgn(m[anchor_b].x) == 0;
}

Rational Stress::operator[](Edge e) const {
  const auto it = weights.find(e);
  return it == weights.end() ? Rational(0) : it->second;
}

bool Stress::is_zero() const {
  return std::all_of(weights.begin(), weights.end(), [](const auto& kv) { return sgn(kv.second) == 0; });
}

Matrix rigidity_matrix(const PointSet& ps, const EmbeddedGraph& g) {
  const std::size_t n = ps.size();
  Matrix m(g.edge_count(), 2 * n);
  std::size_t r = 0;
  for (const Edge& e : g.edges()) {
    const Point d = ps[e.i] - ps[e.j];
    m(r, 2 * e.i) = d.x;
    m(r, 2 * e.i + 1) = d.y;
    m(r, 2 * e.j) = -d.x;
    m(r, 2 * e.j + 1) = -d.y;
    ++r;
  }
  return m;
}

Rational strain(const PointSet& ps, const Motion& m, Edge e) {
  return dot(ps[e.i] - ps[e.j], m[e.i] - m[e.j]);
}

StrainVector strains(const PointSet& ps, const EmbeddedGraph& g, const Motion& m) {
  if (m.size() != ps.size()) throw PreconditionError("strains: motion length does not match point count");
  StrainVector out;
  for (const Edge& e : g.edges()) out.emplace(e, strain(ps, m, e));
  return out;
}

StrainVector all_strains(const PointSet& ps, const Motion& m) { return strains(ps, complete_graph(ps.size()), m); }

Matrix normalization_rows(std::size_t n, const Normalization& norm) {
  Matrix m(3, 2 * n);
  m(0, 2 * norm.anchor_a) = 1;
  m(1, 2 * norm.anchor_a + 1) = 1;
  m(2, 2 * norm.anchor_b) = 1;
  return m;
}

std::vector<Motion> flex_space(const PointSet& ps, const EmbeddedGraph& g, const Normalization& norm) {
  Matrix system = rigidity_matrix(ps, g);
  if (system.rows() == 0) system = Matrix(0, 2 * ps.size());
  system.append_rows(normalization_rows(ps.size(), norm));
  std::vector<Motion> basis;
  for (const Column& c : nullspace(system)) basis.push_back(Motion::from_column(c));
  return basis;
}

std::vector<Stress> stress_space(const PointSet& ps, const EmbeddedGraph& g) {
  std::vector<Stress> basis;
  if (g.edge_count() == 0) return basis;
  for (const Column& c : nullspace(rigidity_matrix(ps, g).transpose())) {
    Stress w;
    for (std::size_t k = 0; k < g.edge_count(); ++k) w.weights.emplace(g.edges()[k], c[k]);
    basis.push_back(std::move(w));
  }
  return basis;
}

bool is_equilibrium(const PointSet& ps, const Stress& w) {
  std::vector<Point> force(ps.size(), Point{0, 0});
  for (const auto& [e, weight] : w.weights) {
    const Point d = ps[e.i] - ps[e.j];
    force[e.i] = force[e.i] + weight * d;
    force[e.j] = force[e.j] - weight * d;
  }
  return std::all_of(force.begin(), force.end(), [](const Point& f) { return sgn(f.x) == 0 && sgn(f.y) == 0; });
}

Stress stress_from_affine_dependence(std::span<const Rational> alpha, const PointSet& ps) {
  if (alpha.size() != ps.size()) throw PreconditionError("affine dependence: coefficient count mismatch");
  Rational total = 0;
  Point weighted{0, 0};
  for (std::size_t i = 0; i < ps.size(); ++i) {
    total += alpha[i];
    weighted = weighted + alpha[i] * ps[i];
  }
  if (sgn(total) != 0 || sgn(weighted.x) != 0 || sgn(weighted.y) != 0)
    throw PreconditionError("coefficients are not an affine dependence of the points");
  Stress w;
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j) w.weights.emplace(Edge(i, j), alpha[i] * alpha[j]);
  if (!is_equilibrium(ps, w)) throw InvariantViolation("affine-dependence stress is not in equilibrium");
  return w;
}

Stress four_point_stress(const PointSet& ps, std::array<std::size_t, 4> quad) {
  for (std::size_t a = 0; a < 4; ++a) {
    if (quad[a] >= ps.size()) throw PreconditionError("four_point_stress: index out of range");
    for (std::size_t b = a + 1; b < 4; ++b)
      if (quad[a] == quad[b]) throw PreconditionError("four_point_stress: indices must be distinct");
  }
  Stress w;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b) {
      std::size_t others[2];
      std::size_t k = 0;
      for (std::size_t c = 0; c < 4; ++c)
        if (c != a && c != b) others[k++] = quad[c];
      const Rational d1 = ps.det(quad[a], quad[b], others[0]);
      const Rational d2 = ps.det(quad[a], quad[b], others[1]);
      if (sgn(d1) == 0 || sgn(d2) == 0) throw PreconditionError("four_point_stress: collinear triple");
      w.weights.emplace(Edge(quad[a], quad[b]), 1 / (d1 * d2));
    }
  if (!is_equilibrium(ps, w)) throw InvariantViolation("four-point stress is not in equilibrium");

  // Boundary pairs of the quadruple carry positive weight, interior pairs negative.
  const PointSet sub({ps[quad[0]], ps[quad[1]], ps[quad[2]], ps[quad[3]]});
  const auto boundary = hull_edges(sub);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b) {
      const bool on_boundary = std::binary_search(boundary.begin(), boundary.end(), Edge(a, b));
      if ((sgn(w[Edge(quad[a], quad[b])]) > 0) != on_boundary)
        throw InvariantViolation("four-point stress has an unexpected sign on " + to_string(Edge(quad[a], quad[b])));
    }
  return w;
}

bool is_laman(const EmbeddedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 20) throw PreconditionError("is_laman: exhaustive check limited to 20 vertices");
  if (n < 2 || g.edge_count() != 2 * n - 3) return false;
  std::vector<std::uint32_t> edge_masks;
  for (const Edge& e : g.edges()) edge_masks.push_back((1u << e.i) | (1u << e.j));
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  for (std::uint32_t subset = 1; subset <= full; ++subset) {
    const int k = std::popcount(subset);
    if (k < 2) continue;
    std::size_t induced = 0;
    for (std::uint32_t em : edge_masks)
      if ((em & subset) == em) ++induced;
    if (induced > static_cast<std::size_t>(2 * k - 3)) return false;
  }
  return true;
}

Motion translation(std::size_t n, const Point& t) { return Motion(std::vector<Point>(n, t)); }

Motion rotation_about(const PointSet& ps, const Point& center) {
  Motion m(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) m[i] = perp(ps[i] - center);
  return m;
}

Motion dilation(const PointSet& ps) { return Motion(ps.points()); }

Motion normalize_motion(const PointSet& ps, const Motion& m, const Normalization& norm) {
  if (m.size() != ps.size()) throw PreconditionError("normalize_motion: motion length mismatch");
  const std::size_t a = norm.anchor_a;
  const std::size_t b = norm.anchor_b;
  const Motion shifted = m - translation(m.size(), m[a]);
  const Rational omega = -shifted[b].x / (ps[b].y - ps[a].y);
  return shifted - omega * rotation_about(ps, ps[a]);
}

}  // namespace ppt
