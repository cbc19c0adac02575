#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "ppt/errors.hpp"
#include "ppt/perturbation.hpp"

using fixtures::P;
using ppt::Edge;
using ppt::Point;
using ppt::PointSet;
using ppt::Rational;

namespace {

Rational det(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// R for one quadruple, with the stress written out from its closed form.
Rational r_value(const PointSet& ps, const ppt::PerturbationTable& f, const ppt::Quadruple& q) {
  Rational sum = 0;
  for (std::size_t s = 0; s < 4; ++s)
    for (std::size_t t = s + 1; t < 4; ++t) {
      std::vector<std::size_t> rest;
      for (std::size_t u = 0; u < 4; ++u)
        if (u != s && u != t) rest.push_back(q[u]);
      const Point& a = ps[q[s]];
      const Point& b = ps[q[t]];
      sum += f[Edge(q[s], q[t])] / (det(a, b, ps[rest[0]]) * det(a, b, ps[rest[1]]));
    }
  return sum;
}

}  // namespace

TEST(Pairs, LexicographicIndex) {
  const auto pairs = ppt::all_pairs(5);
  ASSERT_EQ(pairs.size(), 10u);
  for (std::size_t k = 0; k < pairs.size(); ++k) EXPECT_EQ(ppt::pair_index(5, pairs[k]), k);
  EXPECT_EQ(pairs.front(), Edge(0, 1));
  EXPECT_EQ(pairs[4], Edge(1, 2));
  EXPECT_EQ(ppt::all_quadruples(6).size(), 15u);
}

TEST(MakeF, DetProductFormula) {
  const PointSet ps = fixtures::convex_pentagon();
  const Point a = P(1, 2), b = P(3, 1);
  const auto f = ppt::make_f(ps, ppt::DetProduct{a, b});
  for (const Edge& e : ppt::all_pairs(ps.size())) EXPECT_EQ(f[e], det(a, ps[e.i], ps[e.j]) * det(b, ps[e.i], ps[e.j]));
}

TEST(MakeF, NormHeuristicFormula) {
  const PointSet ps = fixtures::triangle_plus_one();
  const auto f = ppt::make_f(ps, ppt::NormHeuristic{});
  for (const Edge& e : ppt::all_pairs(ps.size())) {
    const Point& p = ps[e.i];
    const Point& q = ps[e.j];
    const Rational sq = (p.x - q.x) * (p.x - q.x) + (p.y - q.y) * (p.y - q.y);
    EXPECT_EQ(f[e], (p.x * p.x + p.y * p.y + q.x * q.x + q.y * q.y + p.x * q.x + p.y * q.y) * sq / 2);
  }
}

TEST(MakeF, DefaultIsCentroidDetProduct) {
  const PointSet ps = fixtures::triangle();
  EXPECT_EQ(ppt::centroid(ps), (Point{Rational(5, 3), Rational(1)}));
  const auto scheme = ppt::default_scheme(ps);
  ASSERT_TRUE(std::holds_alternative<ppt::DetProduct>(scheme));
  EXPECT_EQ(std::get<ppt::DetProduct>(scheme).a, ppt::centroid(ps));
}

TEST(MakeF, ExplicitTableSizeChecked) {
  const PointSet ps = fixtures::unit_square();
  EXPECT_THROW(ppt::make_f(ps, ppt::ExplicitTable{ppt::PerturbationTable(3)}), ppt::InputError);
  ppt::PerturbationTable t(4);
  t[Edge(0, 2)] = 7;
  EXPECT_EQ(ppt::make_f(ps, ppt::ExplicitTable{t}), t);
}

TEST(Validity, ZeroTableIsInvalid) {
  const PointSet ps = fixtures::convex_pentagon();
  const auto report = ppt::check_validity(ps, ppt::PerturbationTable(5));
  EXPECT_FALSE(report.valid);
  EXPECT_EQ(report.witnesses.size(), 5u);
  EXPECT_EQ(report.failures().size(), 5u);
}

TEST(Validity, SchemesGiveOneOnEveryQuadruple) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const PointSet ps = fixtures::random_points(5 + trial % 3, rng);
    const Point a{fixtures::random_rational(rng), fixtures::random_rational(rng)};
    const Point b{fixtures::random_rational(rng), fixtures::random_rational(rng)};
    const std::vector<ppt::FScheme> schemes{ppt::DetProduct{a, b}, ppt::DetProduct{a, a},
                                            ppt::DetProduct{ps[0], ps[1]}, ppt::DetProduct{ps[2], b},
                                            ppt::default_scheme(ps), ppt::NormHeuristic{}};
    for (const auto& scheme : schemes) {
      const auto f = ppt::make_f(ps, scheme);
      const auto report = ppt::check_validity(ps, f);
      EXPECT_TRUE(report.valid);
      EXPECT_TRUE(report.failures().empty());
      for (const auto& w : report.witnesses) {
        EXPECT_EQ(w.r, 1);
        EXPECT_EQ(r_value(ps, f, w.quad), 1);
      }
    }
  }
}

TEST(Validity, InvariantUnderAddingStrains) {
  // A self-stress pairs to zero with any strain vector.
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 30; ++trial) {
    const PointSet ps = fixtures::random_points(6, rng);
    const ppt::Motion m = fixtures::random_motion(ps.size(), rng);
    ppt::PerturbationTable f(ps.size());
    for (const Edge& e : ppt::all_pairs(ps.size())) f[e] = fixtures::random_rational(rng);
    ppt::PerturbationTable g = f;
    for (const auto& [e, s] : ppt::all_strains(ps, m)) g[e] += s;
    for (const auto& q : ppt::all_quadruples(ps.size())) EXPECT_EQ(r_value(ps, f, q), r_value(ps, g, q));
    const auto rf = ppt::check_validity(ps, f), rg = ppt::check_validity(ps, g);
    for (std::size_t k = 0; k < rf.witnesses.size(); ++k) EXPECT_EQ(rf.witnesses[k].r, rg.witnesses[k].r);
  }
}
