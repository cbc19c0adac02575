#include "ppt/cone.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>

#include "ppt/errors.hpp"
#include "ppt/perturbation.hpp"

namespace ppt {

std::vector<ExtremeRay> cone_extreme_rays(const PointSet& ps, const Normalization& norm) {
  const FlipGraph fg = enumerate_ppts(ps);
  const auto hull = hull_edges(ps);
  std::map<std::set<Edge>, Motion> rays;
  for (const Ppt& t : fg.nodes)
    for (const Edge& h : hull) {
      const PteMechanism m = pte_mechanism(ps, t, h, norm);
      CollapsedMechanism c = collapse(ps, m);
      auto [it, fresh] = rays.emplace(std::move(c.tight_pairs), m.flex);
      if (!fresh && !positively_parallel(it->second, m.flex))
        throw InvariantViolation("mechanisms with equal tight sets have non-parallel flexes");
    }
  std::vector<ExtremeRay> out;
  for (auto& [tight, dir] : rays) out.push_back({dir, tight});
  return out;
}

namespace {

void for_each_subset(std::size_t m, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<ExtremeRay> brute_force_rays(const PointSet& ps, const Normalization& norm) {
  const std::size_t n = ps.size();
  if (n > 6) throw PreconditionError("brute_force_rays: limited to n <= 6");
  const auto pairs = all_pairs(n);
  const Matrix full = rigidity_matrix(ps, complete_graph(n));
  const Matrix normal = normalization_rows(n, norm);

  std::map<std::set<Edge>, Motion> rays;
  for_each_subset(pairs.size(), 2 * n - 4, [&](const std::vector<std::size_t>& subset) {
    Matrix a(0, 2 * n);
    for (std::size_t k : subset) a.append_row(full.row(k));
    a.append_rows(normal);
    const auto basis = nullspace(a);
    if (basis.size() != 1) return;
    Motion d = Motion::from_column(basis.front());
    const StrainVector s = all_strains(ps, d);
    bool nonneg = true, nonpos = true;
    for (const auto& [e, value] : s) {
      nonneg = nonneg && sgn(value) >= 0;
      nonpos = nonpos && sgn(value) <= 0;
    }
    if (nonneg == nonpos) return;  // mixed signs, or zero everywhere
    if (nonpos) d = Rational(-1) * d;
    std::set<Edge> tight;
    for (const auto& [e, value] : s)
      if (sgn(value) == 0) tight.insert(e);
    rays.emplace(std::move(tight), std::move(d));
  });
  std::vector<ExtremeRay> out;
  for (auto& [tight, dir] : rays) out.push_back({dir, tight});
  return out;
}

bool positively_parallel(const Motion& u, const Motion& v) {
  if (u.size() != v.size()) return false;
  const Column cu = u.to_column();
  const Column cv = v.to_column();
  Rational c = 0;
  for (std::size_t k = 0; k < cv.size(); ++k)
    if (sgn(cv[k]) != 0) {
      c = cu[k] / cv[k];
      break;
    }
  if (sgn(c) <= 0) return false;
  for (std::size_t k = 0; k < cv.size(); ++k)
    if (cu[k] != c * cv[k]) return false;
  return true;
}

bool same_rays(const std::vector<ExtremeRay>& a, const std::vector<ExtremeRay>& b) {
  if (a.size() != b.size()) return false;
  std::map<std::set<Edge>, const Motion*> index;
  for (const ExtremeRay& r : a) index.emplace(r.tight_pairs, &r.direction);
  if (index.size() != a.size()) return false;
  for (const ExtremeRay& r : b) {
    const auto it = index.find(r.tight_pairs);
    if (it == index.end() || !positively_parallel(*it->second, r.direction)) return false;
  }
  return true;
}

std::vector<std::string> tight_closure_violations(const PointSet& ps, const std::set<Edge>& tight) {
  const std::size_t n = ps.size();
  std::vector<std::string> out;
  auto require_complete = [&](const std::vector<std::size_t>& pts, const std::string& why) {
    for (std::size_t a = 0; a < pts.size(); ++a)
      for (std::size_t b = a + 1; b < pts.size(); ++b)
        if (!tight.contains(Edge(pts[a], pts[b]))) {
          out.push_back(why + " but " + to_string(Edge(pts[a], pts[b])) + " is not tight");
          return;
        }
  };

  const std::vector<Edge> list(tight.begin(), tight.end());
  for (std::size_t a = 0; a < list.size(); ++a)
    for (std::size_t b = a + 1; b < list.size(); ++b)
      if (segments_cross(list[a], list[b], ps))
        require_complete({list[a].i, list[a].j, list[b].i, list[b].j},
                         "tight " + to_string(list[a]) + " crosses tight " + to_string(list[b]));

  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::size_t> nb;
    for (const Edge& e : list)
      if (e.touches(v)) nb.push_back(e.other(v));
    for (std::size_t x = 0; x < nb.size(); ++x)
      for (std::size_t y = x + 1; y < nb.size(); ++y)
        for (std::size_t z = y + 1; z < nb.size(); ++z) {
          const int o1 = orientation(ps[nb[x]], ps[nb[y]], ps[v]);
          const int o2 = orientation(ps[nb[y]], ps[nb[z]], ps[v]);
          const int o3 = orientation(ps[nb[z]], ps[nb[x]], ps[v]);
          if (o1 == o2 && o2 == o3)
            require_complete({v, nb[x], nb[y], nb[z]}, "tight star at " + std::to_string(v) + " is not pointed");
        }
  }

  if (n <= 14) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) < 3) continue;
      std::vector<Point> pts;
      std::vector<std::size_t> ids;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) {
          pts.push_back(ps[i]);
          ids.push_back(i);
        }
      const auto local = convex_hull(PointSet(pts));
      if (local.size() != ids.size()) continue;
      std::vector<std::size_t> cycle;
      for (std::size_t k : local) cycle.push_back(ids[k]);
      bool boundary_tight = true;
      for (std::size_t k = 0; k < cycle.size() && boundary_tight; ++k)
        boundary_tight = tight.contains(Edge(cycle[k], cycle[(k + 1) % cycle.size()]));
      if (!boundary_tight) continue;
      std::vector<std::size_t> closure = ids;
      for (std::size_t q = 0; q < n; ++q)
        if (!(mask & (1u << q)) && strictly_inside(ps, cycle, q)) closure.push_back(q);
      std::string name;
      for (std::size_t i : cycle) name += (name.empty() ? "" : ",") + std::to_string(i);
      require_complete(closure, "tight convex polygon (" + name + ") is not rigid");
    }
  }
  return out;
}

std::optional<Motion> expansive_flex(const PointSet& ps, const EmbeddedGraph& g, const Normalization& norm) {
  if (!is_noncrossing(ps, g)) throw PreconditionError("expansive_flex: graph is crossing");
  if (!is_pointed(ps, g)) throw PreconditionError("expansive_flex: graph is not pointed");
  std::optional<Motion> sum;
  for (const Edge& h : hull_edges(ps)) {
    if (g.contains(h)) continue;
    const Ppt t = Ppt::from_graph(ps, complete_to_ppt(ps, g.with(h)));
    const Motion flex = pte_mechanism(ps, t, h, norm).flex;
    sum = sum ? *sum + flex : flex;
  }
  return sum;
}

}  // namespace ppt
