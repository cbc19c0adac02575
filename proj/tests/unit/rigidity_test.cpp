#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "ppt/errors.hpp"
#include "ppt/flips.hpp"
#include "ppt/rigidity.hpp"

using fixtures::P;
using ppt::Edge;
using ppt::EmbeddedGraph;
using ppt::Motion;
using ppt::PointSet;
using ppt::Rational;

TEST(RigidityMatrix, SquareCompleteGraph) {
  const PointSet sq = fixtures::unit_square();
  const ppt::Matrix r = ppt::rigidity_matrix(sq, ppt::complete_graph(4));
  EXPECT_EQ(r.rows(), 6u);
  EXPECT_EQ(r.cols(), 8u);
  EXPECT_EQ(ppt::nullspace(r).size(), 3u);  // only the trivial motions
  EXPECT_TRUE(ppt::flex_space(sq, ppt::complete_graph(4), ppt::Normalization::for_points(sq)).empty());
  EXPECT_EQ(ppt::stress_space(sq, ppt::complete_graph(4)).size(), 1u);
}

TEST(RigidityMatrix, RowLayout) {
  const PointSet t = fixtures::triangle();
  const ppt::Matrix r = ppt::rigidity_matrix(t, EmbeddedGraph(3, {Edge(0, 1)}));
  ASSERT_EQ(r.rows(), 1u);
  const std::vector<Rational> expect{-4, 0, 4, 0, 0, 0};
  for (std::size_t c = 0; c < 6; ++c) EXPECT_EQ(r(0, c), expect[c]);
}

TEST(Strain, TrivialMotionsAreStrainFree) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const PointSet ps = fixtures::random_points(4 + trial % 5, rng);
    const std::size_t n = ps.size();
    const Motion t = ppt::translation(n, {fixtures::random_rational(rng), fixtures::random_rational(rng)});
    const Motion rot = ppt::rotation_about(ps, {fixtures::random_rational(rng), fixtures::random_rational(rng)});
    for (const auto& [e, s] : ppt::all_strains(ps, t + rot)) EXPECT_EQ(s, 0) << ppt::to_string(e);
    for (const auto& [e, s] : ppt::all_strains(ps, ppt::dilation(ps)))
      EXPECT_EQ(s, ppt::dot(ps[e.i] - ps[e.j], ps[e.i] - ps[e.j]));
  }
}

TEST(Strain, MatchesRigidityMatrixProduct) {
  std::mt19937_64 rng(4);
  const PointSet ps = fixtures::six_mixed();
  const EmbeddedGraph k = ppt::complete_graph(ps.size());
  const ppt::Matrix r = ppt::rigidity_matrix(ps, k);
  for (int trial = 0; trial < 20; ++trial) {
    const Motion m = fixtures::random_motion(ps.size(), rng);
    const auto col = m.to_column();
    const auto prod = r * col;
    const auto s = ppt::strains(ps, k, m);
    std::size_t row = 0;
    for (const auto& [e, value] : s) EXPECT_EQ(value, prod[row++]);
    EXPECT_EQ(Motion::from_column(col), m);
  }
}

TEST(Normalization, Anchors) {
  const PointSet sq = fixtures::unit_square();
  const auto norm = ppt::Normalization::for_points(sq);
  EXPECT_EQ(norm.anchor_a, 0u);
  EXPECT_EQ(norm.anchor_b, 2u);  // point 1 shares y with point 0
  EXPECT_THROW(ppt::Normalization::with_anchors(sq, 0, 1), ppt::PreconditionError);
  EXPECT_THROW(ppt::Normalization::with_anchors(sq, 0, 0), ppt::PreconditionError);
  EXPECT_THROW(ppt::Normalization::with_anchors(sq, 0, 9), ppt::PreconditionError);
  EXPECT_NO_THROW(ppt::Normalization::with_anchors(sq, 1, 3));
}

TEST(Normalization, NormalizeMotionRemovesOnlyTrivialPart) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const PointSet ps = fixtures::random_points(5, rng);
    const auto norm = ppt::Normalization::for_points(ps);
    const Motion m = fixtures::random_motion(ps.size(), rng);
    const Motion nm = ppt::normalize_motion(ps, m, norm);
    EXPECT_TRUE(norm.holds(nm));
    EXPECT_EQ(ppt::all_strains(ps, m), ppt::all_strains(ps, nm));
    EXPECT_EQ(ppt::normalize_motion(ps, nm, norm), nm);
  }
}

TEST(Stress, AffineDependenceOnSquare) {
  const PointSet sq = fixtures::unit_square();
  const std::vector<Rational> alpha{1, -1, 1, -1};
  const ppt::Stress w = ppt::stress_from_affine_dependence(alpha, sq);
  EXPECT_EQ(w[Edge(0, 1)], -1);
  EXPECT_EQ(w[Edge(1, 2)], -1);
  EXPECT_EQ(w[Edge(0, 2)], 1);
  EXPECT_EQ(w[Edge(1, 3)], 1);
  EXPECT_TRUE(ppt::is_equilibrium(sq, w));
  const std::vector<Rational> bad{1, 1, 1, -1};
  EXPECT_THROW(ppt::stress_from_affine_dependence(bad, sq), ppt::PreconditionError);
}

TEST(Stress, FourPointStressIsScaledAffineDependence) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const PointSet ps = fixtures::random_points(4, rng);
    const ppt::Stress w = ppt::four_point_stress(ps, {0, 1, 2, 3});
    ASSERT_EQ(w.weights.size(), 6u);
    EXPECT_TRUE(ppt::is_equilibrium(ps, w));

    // w = c * alpha_i alpha_j; the sign of c depends on the labelling.
    const auto alpha = oracle::affine_dependence(ps.points());
    const Rational c = w[Edge(0, 1)] / (alpha[0] * alpha[1]);
    EXPECT_NE(c, 0);
    for (const auto& [e, x] : w.weights) EXPECT_EQ(x, c * alpha[e.i] * alpha[e.j]);

    // Sign law: positive exactly on the quadruple's hull pairs.
    const auto hull = oracle::hull_pairs(ps.points());
    for (const auto& [e, x] : w.weights) {
      const bool on_hull = std::find(hull.begin(), hull.end(), oracle::Pair{e.i, e.j}) != hull.end();
      EXPECT_EQ(x > 0, on_hull) << ppt::to_string(e);
    }
  }
}

TEST(Stress, FourPointStressKeysUseOriginalIndices) {
  const PointSet ps = fixtures::six_mixed();
  const ppt::Stress w = ppt::four_point_stress(ps, {1, 3, 4, 5});
  for (const auto& [e, x] : w.weights) {
    EXPECT_NE(e.i, 0u);
    EXPECT_NE(e.i, 2u);
    EXPECT_NE(x, 0);
  }
  EXPECT_TRUE(ppt::is_equilibrium(ps, w));
  EXPECT_THROW(ppt::four_point_stress(ps, {1, 1, 4, 5}), ppt::PreconditionError);
}

TEST(Laman, Examples) {
  EXPECT_TRUE(ppt::is_laman(ppt::complete_graph(3)));
  EXPECT_FALSE(ppt::is_laman(ppt::complete_graph(4)));
  // K4 plus a vertex joined once: 7 edges but the K4 part is overbraced.
  EXPECT_FALSE(ppt::is_laman(EmbeddedGraph(5, {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(1, 2), Edge(1, 3),
                                               Edge(2, 3), Edge(3, 4)})));
  EXPECT_TRUE(ppt::is_laman(EmbeddedGraph(4, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(0, 3), Edge(0, 2)})));
  EXPECT_FALSE(ppt::is_laman(EmbeddedGraph(4, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(0, 3)})));
}

TEST(Laman, PptsAreMinimallyRigid) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 30; ++trial) {
    const PointSet ps = fixtures::random_points(5 + trial % 3, rng);
    const auto fg = ppt::enumerate_ppts(ps);
    const auto norm = ppt::Normalization::for_points(ps);
    for (const auto& t : fg.nodes) {
      EXPECT_TRUE(ppt::is_laman(t.graph()));
      EXPECT_EQ(ppt::rank(ppt::rigidity_matrix(ps, t.graph())), 2 * ps.size() - 3);
      EXPECT_TRUE(ppt::stress_space(ps, t.graph()).empty());
      EXPECT_TRUE(ppt::flex_space(ps, t.graph(), norm).empty());
      // One edge fewer: exactly one degree of freedom.
      const Edge e = t.graph().edges()[trial % t.graph().edge_count()];
      const auto flex = ppt::flex_space(ps, t.graph().without(e), norm);
      ASSERT_EQ(flex.size(), 1u);
      EXPECT_TRUE(norm.holds(flex.front()));
      for (const auto& [f, s] : ppt::strains(ps, t.graph().without(e), flex.front())) EXPECT_EQ(s, 0);
      EXPECT_NE(ppt::strain(ps, flex.front(), e), 0);
    }
  }
}
