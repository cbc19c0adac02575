#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "ppt/errors.hpp"
#include "ppt/matrix.hpp"
#include "ppt/secondary.hpp"

using fixtures::P;
using ppt::Edge;
using ppt::PointSet;
using ppt::Rational;

namespace {

std::vector<Rational> oracle_gkz(const PointSet& ps, const ppt::Ppt& t) {
  std::vector<oracle::Pair> e;
  for (const Edge& x : t.key()) e.emplace_back(x.i, x.j);
  return oracle::gkz(ps.points(), e);
}

}  // namespace

TEST(Convexity, Checks) {
  EXPECT_TRUE(ppt::is_ccw_convex(fixtures::unit_square()));
  EXPECT_FALSE(ppt::is_ccw_convex(PointSet({P(0, 0), P(0, 1), P(1, 1), P(1, 0)})));
  EXPECT_FALSE(ppt::is_ccw_convex(fixtures::triangle_plus_one()));
  EXPECT_THROW(ppt::to_ccw_convex(fixtures::triangle_plus_one()), ppt::PreconditionError);

  const auto re = ppt::to_ccw_convex(PointSet({P(0, 0), P(0, 1), P(1, 1), P(1, 0)}));
  EXPECT_TRUE(ppt::is_ccw_convex(re.points));
  for (std::size_t k = 0; k < 4; ++k)
    EXPECT_EQ(re.points[k], (PointSet({P(0, 0), P(0, 1), P(1, 1), P(1, 0)})[re.original_index[k]]));
}

TEST(Gkz, UnitSquare) {
  const PointSet sq = fixtures::unit_square();
  const auto t02 = ppt::Ppt::from_graph(sq, ppt::hull_graph(sq).with(Edge(0, 2)));
  const auto t13 = ppt::Ppt::from_graph(sq, ppt::hull_graph(sq).with(Edge(1, 3)));
  EXPECT_EQ(ppt::gkz_vector(sq, t02), (std::vector<Rational>{2, 1, 2, 1}));
  EXPECT_EQ(ppt::gkz_vector(sq, t13), (std::vector<Rational>{1, 2, 1, 2}));
  const PointSet tri({P(0, 0), P(4, 0), P(1, 3)});
  EXPECT_EQ(ppt::gkz_vector(tri, ppt::enumerate_ppts(tri).nodes.front()), (std::vector<Rational>{12, 12, 12}));
  EXPECT_THROW(ppt::gkz_vector(fixtures::triangle_plus_one(), ppt::enumerate_ppts(fixtures::triangle_plus_one()).nodes[0]),
               ppt::PreconditionError);
}

TEST(Gkz, MatchesTriangleAreasAndSum) {
  for (std::size_t n = 4; n <= 8; ++n) {
    const PointSet ps = fixtures::convex_polygon(n);
    const auto fg = ppt::enumerate_ppts(ps);
    std::set<std::vector<Rational>> distinct;
    Rational sum0 = -1;
    for (const auto& t : fg.nodes) {
      const auto a = ppt::gkz_vector(ps, t);
      EXPECT_EQ(a, oracle_gkz(ps, t));
      Rational s = 0;
      for (const auto& x : a) s += x;
      if (sum0 < 0) sum0 = s;
      EXPECT_EQ(s, sum0);
      distinct.insert(a);
    }
    EXPECT_EQ(distinct.size(), fg.size());
  }
}

TEST(Gkz, HexagonFlipsChangeFourCoordinates) {
  const PointSet hex = fixtures::convex_polygon(6);
  const auto fg = ppt::enumerate_ppts(hex);
  ASSERT_EQ(fg.size(), 14u);
  for (std::size_t u = 0; u < fg.size(); ++u)
    for (const auto& arc : fg.adjacency[u]) {
      const auto a = ppt::gkz_vector(hex, fg.nodes[u]);
      const auto b = ppt::gkz_vector(hex, fg.nodes[arc.neighbor]);
      std::set<std::size_t> changed;
      for (std::size_t k = 0; k < 6; ++k)
        if (a[k] != b[k]) changed.insert(k);
      EXPECT_EQ(changed, (std::set<std::size_t>{arc.out.i, arc.out.j, arc.in.i, arc.in.j}));
    }
}

TEST(Gkz, DifferencesSpanDimensionNMinusThree) {
  for (std::size_t n = 4; n <= 7; ++n) {
    const PointSet ps = fixtures::convex_polygon(n);
    const auto fg = ppt::enumerate_ppts(ps);
    const auto a0 = ppt::gkz_vector(ps, fg.nodes.front());
    ppt::Matrix diffs(0, n);
    for (const auto& t : fg.nodes) {
      auto a = ppt::gkz_vector(ps, t);
      for (std::size_t k = 0; k < n; ++k) a[k] -= a0[k];
      diffs.append_row(a);
    }
    EXPECT_EQ(ppt::rank(diffs), n - 3) << n;
  }
}

TEST(AffineMap, UnitSquare) {
  const PointSet sq = fixtures::unit_square();
  const auto report = ppt::affine_map_check(sq, ppt::make_f(sq, ppt::default_scheme(sq)));
  EXPECT_TRUE(report.ok);
  std::set<std::vector<Rational>> got(report.gkz.begin(), report.gkz.end());
  EXPECT_EQ(got, (std::set<std::vector<Rational>>{{2, 1, 2, 1}, {1, 2, 1, 2}}));
}

TEST(AffineMap, ConvexPolygonsBothSchemes) {
  for (std::size_t n = 4; n <= 7; ++n) {
    const PointSet ps = fixtures::convex_polygon(n);
    for (const ppt::FScheme& s : {ppt::default_scheme(ps), ppt::FScheme{ppt::NormHeuristic{}},
                                  ppt::FScheme{ppt::DetProduct{P(1, 30), P(-2, 5)}}}) {
      const auto f = ppt::make_f(ps, s);
      const auto report = ppt::affine_map_check(ps, f);
      EXPECT_TRUE(report.ok) << n;
      EXPECT_EQ(report.vertex_mismatches, 0u);
      EXPECT_EQ(report.midpoint_mismatches, 0u);
      const auto poly = ppt::realize_polytope(ps, f, ppt::Normalization::for_points(ps));
      for (const auto& vx : poly.vertices) {
        EXPECT_EQ(ppt::secondary_coordinates(ps, f, vx.v), ppt::gkz_vector(ps, vx.ppt));
        for (bool b : ppt::almost_hull_delta(ps, vx.ppt, f, vx)) EXPECT_TRUE(b);
      }
    }
  }
}
