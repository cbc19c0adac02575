#include "ppt/polytope.hpp"

#include <algorithm>
#include <variant>

#include "ppt/errors.hpp"
#include "ppt/mechanism.hpp"

namespace ppt {

std::vector<Edge> tight_pairs(const PointSet& ps, const PerturbationTable& f, const Motion& m) {
  std::vector<Edge> out;
  for (const Edge& e : all_pairs(ps.size()))
    if (strain(ps, m, e) == f[e]) out.push_back(e);
  return out;
}

bool is_feasible(const PointSet& ps, const PerturbationTable& f, const Motion& m) {
  for (const Edge& e : all_pairs(ps.size()))
    if (strain(ps, m, e) < f[e]) return false;
  return true;
}

PolyhedronVertex vertex_for_ppt(const PointSet& ps, const PerturbationTable& f, const Ppt& t,
                                const Normalization& norm) {
  Matrix a = rigidity_matrix(ps, t.graph());
  a.append_rows(normalization_rows(ps.size(), norm));
  Column rhs;
  for (const Edge& e : t.graph().edges()) rhs.push_back(f[e]);
  rhs.resize(a.rows(), Rational(0));

  const SolveResult r = solve_linear(a, rhs);
  const auto* unique = std::get_if<UniqueSolution>(&r);
  if (unique == nullptr) throw InvalidPerturbation("strain = f on " + t.key_string() + " has no unique solution");
  Motion v = Motion::from_column(unique->x);

  for (const Edge& e : all_pairs(ps.size())) {
    if (t.graph().contains(e)) continue;
    if (strain(ps, v, e) <= f[e])
      throw InvalidPerturbation("non-edge " + to_string(e) + " is not strictly slack at the vertex of " +
                                t.key_string());
  }
  std::vector<Edge> tight = tight_pairs(ps, f, v);
  return {t, std::move(v), std::move(tight)};
}

RealizedPolytope realize_polytope(const PointSet& ps, const PerturbationTable& f, const Normalization& norm) {
  const FlipGraph fg = enumerate_ppts(ps);
  RealizedPolytope poly;
  for (const Ppt& t : fg.nodes) poly.vertices.push_back(vertex_for_ppt(ps, f, t, norm));

  for (std::size_t a = 0; a < fg.size(); ++a)
    for (const FlipArc& arc : fg.adjacency[a]) {
      if (arc.neighbor < a) continue;
      poly.bounded_edges.push_back({a, arc.neighbor, arc.out, arc.in});
      // The open segment between the two vertices is tight exactly on the shared edges.
      const Motion mid = Rational(1, 2) * (poly.vertices[a].v + poly.vertices[arc.neighbor].v);
      std::vector<Edge> shared;
      const auto& ea = fg.nodes[a].key();
      const auto& eb = fg.nodes[arc.neighbor].key();
      std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(shared));
      if (tight_pairs(ps, f, mid) != shared)
        throw InvariantViolation("bounded edge between vertices " + std::to_string(a) + " and " +
                                 std::to_string(arc.neighbor) + " has an unexpected tight set");
    }

  const auto hull = hull_edges(ps);
  for (std::size_t k = 0; k < fg.size(); ++k)
    for (const Edge& h : hull) {
      const PteMechanism m = pte_mechanism(ps, fg.nodes[k], h, norm);
      std::vector<Edge> tight = m.graph.edges();
      if (tight_pairs(ps, f, poly.vertices[k].v + m.flex) != tight)
        throw InvariantViolation("ray at vertex " + std::to_string(k) + " has an unexpected tight set");
      poly.rays.push_back({k, h, m.flex, std::move(tight)});
    }
  return poly;
}

}  // namespace ppt
