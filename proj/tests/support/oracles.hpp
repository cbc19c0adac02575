#ifndef PPT_TESTS_ORACLES_HPP
#define PPT_TESTS_ORACLES_HPP

// Independent brute-force reimplementations used to cross-check the library.
// They share only the number and point types with the code under test.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "ppt/geometry.hpp"
#include "ppt/matrix.hpp"

namespace oracle {

using ppt::Point;
using ppt::Rational;
using Pair = std::pair<std::size_t, std::size_t>;

inline std::uint64_t catalan(unsigned k) {
  std::uint64_t c = 1;
  for (unsigned i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

inline int turn(const Point& a, const Point& b, const Point& c) {
  const Rational d = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sgn(d);
}

inline std::vector<Pair> all_pairs(std::size_t n) {
  std::vector<Pair> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

/// Pairs with every other point strictly on one side.
inline std::vector<Pair> hull_pairs(const std::vector<Point>& p) {
  std::vector<Pair> out;
  for (const auto& [i, j] : all_pairs(p.size())) {
    int side = 0;
    bool ok = true;
    for (std::size_t k = 0; k < p.size() && ok; ++k) {
      if (k == i || k == j) continue;
      const int t = turn(p[i], p[j], p[k]);
      if (side == 0) side = t;
      ok = t == side;
    }
    if (ok) out.emplace_back(i, j);
  }
  return out;
}

inline bool cross(const std::vector<Point>& p, Pair e, Pair f) {
  if (e.first == f.first || e.first == f.second || e.second == f.first || e.second == f.second) return false;
  return turn(p[e.first], p[e.second], p[f.first]) * turn(p[e.first], p[e.second], p[f.second]) < 0 &&
         turn(p[f.first], p[f.second], p[e.first]) * turn(p[f.first], p[f.second], p[e.second]) < 0;
}

/// Some incident direction has all others strictly counter-clockwise within pi.
inline bool pointed_at(const std::vector<Point>& p, const std::vector<Pair>& edges, std::size_t v) {
  std::vector<std::size_t> nb;
  for (const auto& [i, j] : edges) {
    if (i == v) nb.push_back(j);
    if (j == v) nb.push_back(i);
  }
  if (nb.size() <= 1) return true;
  for (std::size_t u : nb) {
    bool all_left = true;
    for (std::size_t w : nb)
      if (w != u && turn(p[v], p[u], p[w]) <= 0) all_left = false;
    if (all_left) return true;
  }
  return false;
}

inline bool pointed_noncrossing(const std::vector<Point>& p, const std::vector<Pair>& edges) {
  for (std::size_t a = 0; a < edges.size(); ++a)
    for (std::size_t b = a + 1; b < edges.size(); ++b)
      if (cross(p, edges[a], edges[b])) return false;
  for (std::size_t v = 0; v < p.size(); ++v)
    if (!pointed_at(p, edges, v)) return false;
  return true;
}

inline void for_each_subset(std::size_t m, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (idx.size() == k) {
      f(idx);
      return;
    }
    for (std::size_t s = start; s + (k - idx.size()) <= m; ++s) {
      idx.push_back(s);
      rec(s + 1);
      idx.pop_back();
    }
  };
  rec(0);
}

/// Every edge set of size 2n-3 that is pointed and non-crossing.
inline std::set<std::vector<Pair>> ppts(const std::vector<Point>& p) {
  const auto pairs = all_pairs(p.size());
  std::set<std::vector<Pair>> out;
  for_each_subset(pairs.size(), 2 * p.size() - 3, [&](const std::vector<std::size_t>& s) {
    std::vector<Pair> edges;
    for (std::size_t k : s) edges.push_back(pairs[k]);
    if (pointed_noncrossing(p, edges)) out.insert(edges);
  });
  return out;
}

/// Non-crossing alternating trees on a..b built by the recursive split at the
/// edge {a,b}: left part a..k, right part k+1..b. Labels are 1-based.
inline std::vector<std::vector<Pair>> nca_trees(std::size_t a, std::size_t b) {
  if (a == b) return {{}};
  std::vector<std::vector<Pair>> out;
  for (std::size_t k = a; k < b; ++k)
    for (const auto& left : nca_trees(a, k))
      for (const auto& right : nca_trees(k + 1, b)) {
        std::vector<Pair> t = left;
        t.insert(t.end(), right.begin(), right.end());
        t.emplace_back(a, b);
        std::sort(t.begin(), t.end());
        out.push_back(std::move(t));
      }
  return out;
}

/// Extreme rays of {v_1 = 0, v_j - v_i >= 0 for i < j} by constraint subsets.
inline std::set<std::vector<Rational>> rays_1d(std::size_t n) {
  const auto pairs = all_pairs(n);
  std::set<std::vector<Rational>> out;
  for_each_subset(pairs.size(), n - 2, [&](const std::vector<std::size_t>& s) {
    ppt::Matrix a(0, n);
    std::vector<Rational> row(n, Rational(0));
    row[0] = 1;
    a.append_row(row);
    for (std::size_t k : s) {
      std::vector<Rational> r(n, Rational(0));
      r[pairs[k].second] = 1;
      r[pairs[k].first] = -1;
      a.append_row(r);
    }
    const auto basis = ppt::nullspace(a);
    if (basis.size() != 1) return;
    for (const Rational& sign : {Rational(1), Rational(-1)}) {
      std::vector<Rational> d = basis.front();
      for (auto& x : d) x *= sign;
      bool ok = true;
      for (const auto& [i, j] : pairs) ok = ok && d[j] - d[i] >= 0;
      if (!ok) continue;
      // Scale so the last coordinate is 1 (it is the largest).
      const Rational last = d.back();
      for (auto& x : d) x /= last;
      out.insert(d);
    }
  });
  return out;
}

/// Affine dependence of four points: alpha_k = (-1)^k det of the other three.
inline std::vector<Rational> affine_dependence(const std::vector<Point>& q) {
  std::vector<Rational> alpha;
  for (std::size_t k = 0; k < 4; ++k) {
    std::vector<Point> o;
    for (std::size_t m = 0; m < 4; ++m)
      if (m != k) o.push_back(q[m]);
    Rational d = (o[1].x - o[0].x) * (o[2].y - o[0].y) - (o[1].y - o[0].y) * (o[2].x - o[0].x);
    alpha.push_back(k % 2 == 0 ? d : Rational(-d));
  }
  return alpha;
}

/// Normalized areas of triangles at each corner, triangles found as 3-cliques
/// (valid for triangulations of points in convex position).
inline std::vector<Rational> gkz(const std::vector<Point>& p, const std::vector<Pair>& edges) {
  const std::set<Pair> e(edges.begin(), edges.end());
  std::vector<Rational> a(p.size(), Rational(0));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      for (std::size_t k = j + 1; k < p.size(); ++k)
        if (e.contains({i, j}) && e.contains({j, k}) && e.contains({i, k})) {
          Rational area = (p[j].x - p[i].x) * (p[k].y - p[i].y) - (p[j].y - p[i].y) * (p[k].x - p[i].x);
          if (area < 0) area = -area;
          a[i] += area;
          a[j] += area;
          a[k] += area;
        }
  return a;
}

}  // namespace oracle

#endif  // PPT_TESTS_ORACLES_HPP
