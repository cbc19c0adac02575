#include "ppt/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "ppt/cone.hpp"
#include "ppt/delta.hpp"
#include "ppt/errors.hpp"
#include "ppt/flips.hpp"
#include "ppt/mechanism.hpp"
#include "ppt/polytope.hpp"
#include "ppt/secondary.hpp"

namespace ppt {

bool VerifyReport::all_passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const VerifyEntry& e) { return e.passed; });
}

std::vector<std::string> VerifyReport::failed_anchors() const {
  std::vector<std::string> out;
  for (const VerifyEntry& e : entries)
    if (!e.passed) out.push_back(e.anchor);
  return out;
}

VerifyOptions default_verify_options(const PointSet& ps) {
  VerifyOptions o;
  o.scheme = default_scheme(ps);
  o.norm = Normalization::for_points(ps);
  return o;
}

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

Motion random_motion(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 7);
  Motion m(n);
  for (auto& v : m.velocities) v = {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
  for (auto& v : m.velocities) {
    v.x.canonicalize();
    v.y.canonicalize();
  }
  return m;
}

}  // namespace

VerifyReport run_verify(const PointSet& ps, const VerifyOptions& options) {
  VerifyReport report;
  auto check = [&](const std::string& anchor, const std::function<Outcome()>& body) {
    try {
      Outcome o = body();
      report.entries.push_back({anchor, o.passed, std::move(o.detail)});
    } catch (const std::exception& e) {
      report.entries.push_back({anchor, false, std::string("exception: ") + e.what()});
    }
  };

  const std::size_t n = ps.size();
  const Normalization& norm = options.norm;
  std::mt19937_64 rng(options.seed);
  std::optional<PerturbationTable> f;
  bool unit_quadruples = false;

  check("Lemma valid-2d", [&]() -> Outcome {
    f = make_f(ps, options.scheme);
    const ValidityReport v = check_validity(ps, *f);
    unit_quadruples = std::all_of(v.witnesses.begin(), v.witnesses.end(), [](const auto& q) { return q.r == 1; });
    const bool builtin = !std::holds_alternative<ExplicitTable>(options.scheme);
    if (!v.valid) return fail(std::to_string(v.failures().size()) + " quadruples with R <= 0");
    if (builtin && !unit_quadruples) return fail("built-in scheme with R != 1 on some quadruple");
    return {true, std::to_string(v.witnesses.size()) + " quadruples, R > 0" + (unit_quadruples ? " (all R = 1)" : "")};
  });

  check("Lemma stress4", [&]() -> Outcome {
    std::size_t tested = 0;
    for (int k = 0; k < options.random_motions; ++k) {
      const Motion m = random_motion(n, rng);
      for (const Quadruple& q : all_quadruples(n)) {
        if (!is_equilibrium(ps, four_point_stress(ps, q))) return fail("stress not in equilibrium");
        if (stress_pairing(ps, q, [&](Edge e) { return strain(ps, m, e); }) != 0)
          return fail("stress not orthogonal to a motion's strains");
        ++tested;
      }
    }
    return {true, std::to_string(tested) + " stress/motion pairings vanish"};
  });

  std::optional<FlipGraph> fg;
  check("Lemma flips", [&]() -> Outcome {
    fg = enumerate_ppts(ps);
    for (std::size_t a = 0; a < fg->size(); ++a) {
      if (fg->adjacency[a].size() != interior_edges(ps, fg->nodes[a]).size()) return fail("flip degree mismatch");
      for (const FlipArc& arc : fg->adjacency[a]) {
        const FlipResult back = flip(ps, fg->nodes[arc.neighbor], arc.in);
        if (back.ppt != fg->nodes[a] || back.inserted != arc.out) return fail("flip is not an involution");
      }
    }
    return {true, std::to_string(fg->size()) + " ppts, " + std::to_string(fg->edge_count()) + " flips, connected"};
  });

  check("Lemma laman", [&]() -> Outcome {
    if (!fg) return fail("no enumeration");
    if (n > 20) return {true, "skipped above 20 points"};
    for (const Ppt& t : fg->nodes)
      if (!is_laman(t.graph())) return fail("ppt " + t.key_string() + " is not Laman");
    return {true, "every ppt is Laman"};
  });

  std::optional<RealizedPolytope> poly;
  check("Theorem main 1(a)", [&]() -> Outcome {
    if (!f) return fail("no perturbation table");
    poly = realize_polytope(ps, *f, norm);
    std::set<Column> seen;
    for (const PolyhedronVertex& v : poly->vertices) {
      if (v.tight_edges != v.ppt.key()) return fail("tight set differs from the ppt at " + v.ppt.key_string());
      if (v.tight_edges.size() != 2 * n - 3) return fail("vertex is not simple");
      if (!seen.insert(v.v.to_column()).second) return fail("two ppts share a vertex");
    }
    return {true, std::to_string(poly->vertices.size()) + " simple vertices, one per ppt"};
  });

  check("Theorem main 1(b)", [&]() -> Outcome {
    if (!poly) return fail("no polytope");
    for (const BoundedEdge& e : poly->bounded_edges) {
      const Motion mid = Rational(1, 2) * (poly->vertices[e.from].v + poly->vertices[e.to].v);
      if (!is_feasible(ps, *f, mid)) return fail("infeasible edge midpoint");
      if (tight_pairs(ps, *f, mid).size() != 2 * n - 4) return fail("edge tight set is not 2n-4");
    }
    return {true, std::to_string(poly->bounded_edges.size()) + " bounded edges"};
  });

  check("Theorem main 1(c)", [&]() -> Outcome {
    if (!poly) return fail("no polytope");
    std::vector<std::size_t> degree(poly->vertices.size(), 0);
    for (const BoundedEdge& e : poly->bounded_edges) ++degree[e.from], ++degree[e.to];
    for (const PolytopeRay& r : poly->rays) {
      ++degree[r.vertex];
      for (const auto& [e, s] : all_strains(ps, r.direction)) {
        if (sgn(s) < 0) return fail("ray contracts " + to_string(e));
        if (e == r.hull_edge && sgn(s) <= 0) return fail("ray does not open its hull edge");
      }
    }
    for (std::size_t d : degree)
      if (d != 2 * n - 3) return fail("vertex degree differs from 2n-3");
    return {true, std::to_string(poly->rays.size()) + " rays; every vertex has degree 2n-3"};
  });

  std::vector<ExtremeRay> rays;
  check("Prop ex-rays", [&]() -> Outcome {
    rays = cone_extreme_rays(ps, norm);
    std::string detail = std::to_string(rays.size()) + " extreme rays";
    if (n <= options.oracle_max_n) {
      if (!same_rays(rays, brute_force_rays(ps, norm))) return fail(detail + "; brute-force oracle disagrees");
      detail += ", confirmed by brute force";
    }
    return {true, detail};
  });

  check("Lemma xcone-tight(b)", [&]() -> Outcome {
    for (const ExtremeRay& r : rays) {
      const auto bad = tight_closure_violations(ps, r.tight_pairs);
      if (!bad.empty()) return fail(bad.front());
    }
    return {true, std::to_string(rays.size()) + " tight sets closed"};
  });

  check("Lemma ex-motion", [&]() -> Outcome {
    if (expansive_flex(ps, hull_graph(ps), norm)) return fail("hull cycle has an expansive flex");
    const auto hull = hull_edges(ps);
    std::vector<EmbeddedGraph> graphs{EmbeddedGraph(n)};
    if (fg)
      for (const Ppt& t : fg->nodes) graphs.push_back(t.graph().without(hull.front()));
    for (const EmbeddedGraph& g : graphs) {
      const auto m = expansive_flex(ps, g, norm);
      if (!m) return fail("no flex for a graph missing hull edges");
      for (const auto& [e, s] : all_strains(ps, *m)) {
        if (sgn(s) < 0) return fail("flex contracts " + to_string(e));
        if (g.contains(e) && sgn(s) != 0) return fail("flex strains graph edge " + to_string(e));
        if (!g.contains(e) && std::binary_search(hull.begin(), hull.end(), e) && sgn(s) <= 0)
          return fail("missing hull edge " + to_string(e) + " not opened");
      }
    }
    return {true, std::to_string(graphs.size()) + " graphs unfold expansively"};
  });

  check("Lemma equivalent-new", [&]() -> Outcome {
    for (int k = 0; k < options.random_motions; ++k) {
      const Motion m = random_motion(n, rng);
      const StrainVector d = delta_of_motion(ps, m);
      for (const auto& q : check_quadruple_equations(ps, d))
        if (q.residual != 0) return fail("nonzero quadruple residual");
      if (reconstruct_motion(ps, d, norm) != normalize_motion(ps, m, norm)) return fail("round trip mismatch");
    }
    return {true, std::to_string(options.random_motions) + " motions reconstructed"};
  });

  if (unit_quadruples)
    check("Theorem meta-ppt", [&]() -> Outcome {
      if (!poly) return fail("no polytope");
      for (const PolyhedronVertex& v : poly->vertices)
        if (!delta_space_check(ps, *f, v)) return fail("delta-space check fails at " + v.ppt.key_string());
      return {true, "every vertex satisfies the delta-space system"};
    });

  if (unit_quadruples && convex_hull(ps).size() == n) {
    check("Corollary coro:convex", [&]() -> Outcome {
      const ConvexReindex re = to_ccw_convex(ps);
      PerturbationTable g(n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) g[Edge(a, b)] = (*f)[Edge(re.original_index[a], re.original_index[b])];
      const AffineMapReport r = affine_map_check(re.points, g);
      if (!r.ok)
        return fail(std::to_string(r.vertex_mismatches) + " vertex and " + std::to_string(r.midpoint_mismatches) +
                    " midpoint mismatches");
      const RealizedPolytope p = realize_polytope(re.points, g, Normalization::for_points(re.points));
      for (const PolyhedronVertex& v : p.vertices) {
        const auto ok = almost_hull_delta(re.points, v.ppt, g, v);
        if (!std::all_of(ok.begin(), ok.end(), [](bool b) { return b; })) return fail("almost-hull identity fails");
      }
      return {true, std::to_string(r.gkz.size()) + " vertices map onto gkz vectors"};
    });
  }
  return report;
}

}  // namespace ppt
