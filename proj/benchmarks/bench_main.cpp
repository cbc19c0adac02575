#include <benchmark/benchmark.h>

#include <vector>

#include "ppt/assoc1d.hpp"
#include "ppt/cone.hpp"
#include "ppt/flips.hpp"
#include "ppt/graph.hpp"
#include "ppt/matrix.hpp"
#include "ppt/perturbation.hpp"
#include "ppt/polytope.hpp"
#include "ppt/rigidity.hpp"

namespace {

using ppt::Point;
using ppt::PointSet;
using ppt::Rational;

PointSet mixed(std::size_t n) {
  // Pentagon, then interior points; every prefix is in general position.
  static const std::vector<Point> pts = {{0, 0},  {10, 0}, {12, 7}, {5, 11}, {-2, 6},
                                         {4, 2},  {6, 6},  {3, 5},  {8, 5}};
  return PointSet(std::vector<Point>(pts.begin(), pts.begin() + static_cast<long>(n)));
}

PointSet parabola(std::size_t n) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back({Rational(long(i)), Rational(long(i * i))});
  return PointSet(std::move(pts));
}

void BM_EnumerateConvex(benchmark::State& state) {
  const PointSet ps = parabola(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ppt::enumerate_ppts(ps).size());
}
BENCHMARK(BM_EnumerateConvex)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

void BM_EnumerateMixed(benchmark::State& state) {
  const PointSet ps = mixed(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ppt::enumerate_ppts(ps).size());
}
BENCHMARK(BM_EnumerateMixed)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

void BM_RealizePolytope(benchmark::State& state) {
  const PointSet ps = mixed(static_cast<std::size_t>(state.range(0)));
  const auto f = ppt::make_f(ps, ppt::default_scheme(ps));
  const auto norm = ppt::Normalization::for_points(ps);
  for (auto _ : state) benchmark::DoNotOptimize(ppt::realize_polytope(ps, f, norm));
}
BENCHMARK(BM_RealizePolytope)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_ConeRays(benchmark::State& state) {
  const PointSet ps = mixed(static_cast<std::size_t>(state.range(0)));
  const auto norm = ppt::Normalization::for_points(ps);
  for (auto _ : state) benchmark::DoNotOptimize(ppt::cone_extreme_rays(ps, norm).size());
}
BENCHMARK(BM_ConeRays)->DenseRange(5, 6)->Unit(benchmark::kMillisecond);

void BM_BruteForceRays(benchmark::State& state) {
  const PointSet ps = mixed(5);
  const auto norm = ppt::Normalization::for_points(ps);
  for (auto _ : state) benchmark::DoNotOptimize(ppt::brute_force_rays(ps, norm).size());
}
BENCHMARK(BM_BruteForceRays)->Unit(benchmark::kMillisecond);

void BM_EnumerateTrees(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ppt::assoc1d::enumerate_trees(n).size());
}
BENCHMARK(BM_EnumerateTrees)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_RigiditySolve(benchmark::State& state) {
  // Square system: rigidity rows of a ppt plus normalization rows.
  const PointSet ps = mixed(static_cast<std::size_t>(state.range(0)));
  ppt::Matrix a = ppt::rigidity_matrix(ps, ppt::complete_to_ppt(ps, ppt::hull_graph(ps)));
  a.append_rows(ppt::normalization_rows(ps.size(), ppt::Normalization::for_points(ps)));
  std::vector<Rational> rhs(a.rows());
  for (std::size_t r = 0; r < rhs.size(); ++r) rhs[r] = Rational(long(r % 5) + 1);
  for (auto _ : state) benchmark::DoNotOptimize(ppt::solve_linear(a, rhs).index());
}
BENCHMARK(BM_RigiditySolve)->DenseRange(5, 9, 2);

}  // namespace
BENCHMARK_MAIN();
