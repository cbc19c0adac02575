#include "ppt/mechanism.hpp"

#include <algorithm>

#include "ppt/errors.hpp"

namespace ppt {

PteMechanism pte_mechanism(const PointSet& ps, const Ppt& t, Edge hull_edge, const Normalization& norm) {
  const auto hull = hull_edges(ps);
  if (!std::binary_search(hull.begin(), hull.end(), hull_edge))
    throw PreconditionError("pte_mechanism: " + to_string(hull_edge) + " is not a hull edge");
  if (!t.graph().contains(hull_edge)) throw PreconditionError("pte_mechanism: hull edge missing from the ppt");

  PteMechanism m{t.graph().without(hull_edge), hull_edge, {}};
  const auto basis = flex_space(ps, m.graph, norm);
  if (basis.size() != 1)
    throw InvariantViolation("pte-mechanism has " + std::to_string(basis.size()) + " degrees of freedom");
  m.flex = basis.front();
  const int s = sgn(strain(ps, m.flex, hull_edge));
  if (s == 0) throw InvariantViolation("pte-mechanism flex does not move the released hull edge");
  if (s < 0) m.flex = Rational(-1) * m.flex;
  for (const auto& [e, value] : all_strains(ps, m.flex))
    if (sgn(value) < 0) throw InvariantViolation("pte-mechanism flex contracts " + to_string(e));
  return m;
}

namespace {

void bron_kerbosch(const std::vector<std::vector<bool>>& adj, std::vector<std::size_t>& r, std::vector<std::size_t> p,
                   std::vector<std::size_t> x, std::vector<std::vector<std::size_t>>& out) {
  if (p.empty() && x.empty()) {
    std::vector<std::size_t> clique = r;
    std::sort(clique.begin(), clique.end());
    out.push_back(std::move(clique));
    return;
  }
  while (!p.empty()) {
    const std::size_t v = p.back();
    p.pop_back();
    std::vector<std::size_t> p2, x2;
    for (std::size_t u : p)
      if (adj[v][u]) p2.push_back(u);
    for (std::size_t u : x)
      if (adj[v][u]) x2.push_back(u);
    r.push_back(v);
    bron_kerbosch(adj, r, std::move(p2), std::move(x2), out);
    r.pop_back();
    x.push_back(v);
  }
}

// Hull vertices of a subset, as original indices in ccw order.
std::vector<std::size_t> subset_hull(const PointSet& ps, const std::vector<std::size_t>& subset) {
  std::vector<Point> pts;
  for (std::size_t i : subset) pts.push_back(ps[i]);
  const PointSet sub(std::move(pts));
  std::vector<std::size_t> out;
  for (std::size_t k : convex_hull(sub)) out.push_back(subset[k]);
  return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> rigid_subsets(const PointSet& ps, const Motion& m) {
  const std::size_t n = ps.size();
  if (m.size() != n) throw PreconditionError("rigid_subsets: motion length mismatch");
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& [e, value] : all_strains(ps, m))
    if (sgn(value) == 0) adj[e.i][e.j] = adj[e.j][e.i] = true;
  std::vector<std::size_t> r, p;
  for (std::size_t v = 0; v < n; ++v) p.push_back(v);
  std::vector<std::vector<std::size_t>> out;
  bron_kerbosch(adj, r, std::move(p), {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::size_t>> rigid_components(const PointSet& ps, const PteMechanism& m) {
  const std::size_t n = ps.size();
  if (m.graph.edge_count() + 4 != 2 * n) throw PreconditionError("rigid_components: graph is not a one-dof mechanism");
  if (m.flex.is_zero()) throw PreconditionError("rigid_components: zero flex");
  return rigid_subsets(ps, m.flex);
}

CollapsedMechanism collapse(const PointSet& ps, const PteMechanism& m) {
  CollapsedMechanism out;
  for (const auto& [e, value] : all_strains(ps, m.flex))
    if (sgn(value) == 0) out.tight_pairs.insert(e);

  for (const Edge& e : m.graph.edges())
    if (!out.tight_pairs.contains(e)) throw InvariantViolation("mechanism edge " + to_string(e) + " is not tight");

  const auto comps = rigid_components(ps, m);
  for (std::size_t a = 0; a < comps.size(); ++a)
    for (std::size_t b = a + 1; b < comps.size(); ++b) {
      std::vector<std::size_t> common;
      std::set_intersection(comps[a].begin(), comps[a].end(), comps[b].begin(), comps[b].end(),
                            std::back_inserter(common));
      if (common.size() > 1) throw InvariantViolation("rigid components share more than one point");
    }

  std::set<Edge> covered;
  for (const auto& c : comps) {
    if (c.size() < 3) continue;
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = a + 1; b < c.size(); ++b) covered.insert(Edge(c[a], c[b]));
    const auto hull = subset_hull(ps, c);
    for (std::size_t q = 0; q < ps.size(); ++q)
      if (!std::binary_search(c.begin(), c.end(), q) && strictly_inside(ps, hull, q))
        throw InvariantViolation("rigid component misses enclosed point " + std::to_string(q));
  }
  for (const Edge& e : out.tight_pairs)
    if (!covered.contains(e) && !m.graph.contains(e))
      throw InvariantViolation("tight pair " + to_string(e) + " is neither in a component nor a mechanism edge");
  return out;
}

}  // namespace ppt
