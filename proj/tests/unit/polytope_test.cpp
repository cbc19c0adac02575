#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "ppt/errors.hpp"
#include "ppt/polytope.hpp"

using ppt::Edge;
using ppt::Motion;
using ppt::PointSet;
using ppt::Rational;

namespace {

Rational strain_of(const PointSet& ps, const Motion& m, Edge e) {
  const auto d = ps[e.i] - ps[e.j];
  const auto v = m[e.i] - m[e.j];
  return d.x * v.x + d.y * v.y;
}

std::vector<Edge> intersect(const std::vector<Edge>& a, const std::vector<Edge>& b) {
  std::vector<Edge> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void check_realization(const PointSet& ps, const ppt::PerturbationTable& f) {
  const auto norm = ppt::Normalization::for_points(ps);
  const auto poly = ppt::realize_polytope(ps, f, norm);
  const auto fg = ppt::enumerate_ppts(ps);
  const std::size_t h = ppt::convex_hull(ps).size();
  ASSERT_EQ(poly.vertices.size(), fg.size());
  EXPECT_EQ(poly.bounded_edges.size(), fg.edge_count());
  EXPECT_EQ(poly.rays.size(), fg.size() * h);

  for (std::size_t k = 0; k < poly.vertices.size(); ++k) {
    const auto& vx = poly.vertices[k];
    EXPECT_EQ(vx.ppt, fg.nodes[k]);
    EXPECT_TRUE(norm.holds(vx.v));
    for (const Edge& e : ppt::all_pairs(ps.size())) {
      const Rational s = strain_of(ps, vx.v, e);
      if (vx.ppt.graph().contains(e))
        EXPECT_EQ(s, f[e]);
      else
        EXPECT_GT(s, f[e]);
    }
    EXPECT_EQ(vx.tight_edges, vx.ppt.key());
  }

  for (const auto& be : poly.bounded_edges) {
    EXPECT_LT(be.from, be.to);
    const Motion mid = Rational(1, 2) * (poly.vertices[be.from].v + poly.vertices[be.to].v);
    EXPECT_TRUE(ppt::is_feasible(ps, f, mid));
    EXPECT_EQ(ppt::tight_pairs(ps, f, mid),
              intersect(poly.vertices[be.from].tight_edges, poly.vertices[be.to].tight_edges));
  }

  for (const auto& ray : poly.rays) {
    EXPECT_GT(strain_of(ps, ray.direction, ray.hull_edge), 0);
    for (const Edge& e : ppt::all_pairs(ps.size())) EXPECT_GE(strain_of(ps, ray.direction, e), 0);
    EXPECT_TRUE(norm.holds(ray.direction));
    for (const Rational& t : {Rational(1, 3), Rational(1), Rational(50)}) {
      const Motion w = poly.vertices[ray.vertex].v + t * ray.direction;
      EXPECT_TRUE(ppt::is_feasible(ps, f, w));
      EXPECT_EQ(ppt::tight_pairs(ps, f, w), ray.tight);
    }
    EXPECT_EQ(ray.tight, poly.vertices[ray.vertex].ppt.graph().without(ray.hull_edge).edges());
  }
}

}  // namespace

TEST(Polytope, Triangle) {
  const PointSet t = fixtures::triangle();
  const auto poly = ppt::realize_polytope(t, ppt::make_f(t, ppt::default_scheme(t)), ppt::Normalization::for_points(t));
  EXPECT_EQ(poly.vertices.size(), 1u);
  EXPECT_EQ(poly.bounded_edges.size(), 0u);
  EXPECT_EQ(poly.rays.size(), 3u);
}

TEST(Polytope, FixedSets) {
  for (const PointSet& ps : {fixtures::unit_square(), fixtures::triangle_plus_one(), fixtures::convex_pentagon(),
                             fixtures::quad_plus_one(), fixtures::triangle_plus_two(), fixtures::six_mixed()}) {
    check_realization(ps, ppt::make_f(ps, ppt::default_scheme(ps)));
    check_realization(ps, ppt::make_f(ps, ppt::NormHeuristic{}));
  }
}

TEST(Polytope, RandomSets) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 12; ++trial) {
    const PointSet ps = fixtures::random_points(5 + trial % 3, rng);
    const ppt::Point a{fixtures::random_rational(rng), fixtures::random_rational(rng)};
    check_realization(ps, ppt::make_f(ps, ppt::DetProduct{a, ps[trial % ps.size()]}));
  }
}

TEST(Polytope, ZeroPerturbationIsRejected) {
  const PointSet sq = fixtures::unit_square();
  EXPECT_THROW(ppt::realize_polytope(sq, ppt::PerturbationTable(4), ppt::Normalization::for_points(sq)),
               ppt::InvalidPerturbation);
}

TEST(Polytope, NegatedPerturbationIsRejected) {
  const PointSet ps = fixtures::triangle_plus_one();
  auto f = ppt::make_f(ps, ppt::default_scheme(ps));
  for (const Edge& e : ppt::all_pairs(ps.size())) f[e] = -f[e];
  EXPECT_THROW(ppt::realize_polytope(ps, f, ppt::Normalization::for_points(ps)), ppt::InvalidPerturbation);
}

TEST(Polytope, PerturbingByStrainTranslatesThePolytope) {
  // f + strain(m) moves every vertex by m (before normalization).
  std::mt19937_64 rng(32);
  const PointSet ps = fixtures::quad_plus_one();
  const auto norm = ppt::Normalization::for_points(ps);
  const auto f = ppt::make_f(ps, ppt::default_scheme(ps));
  const Motion m = ppt::normalize_motion(ps, fixtures::random_motion(ps.size(), rng), norm);
  auto g = f;
  for (const auto& [e, s] : ppt::all_strains(ps, m)) g[e] += s;
  const auto pf = ppt::realize_polytope(ps, f, norm);
  const auto pg = ppt::realize_polytope(ps, g, norm);
  ASSERT_EQ(pf.vertices.size(), pg.vertices.size());
  for (std::size_t k = 0; k < pf.vertices.size(); ++k) EXPECT_EQ(pg.vertices[k].v, pf.vertices[k].v + m);
}
