#include "ppt/assoc1d.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "ppt/errors.hpp"
#include "ppt/matrix.hpp"

namespace ppt::assoc1d {

namespace {

std::size_t slot(std::size_t n, std::size_t i, std::size_t j) {
  if (i < 1 || i >= j || j > n)
    throw PreconditionError("g index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
  const std::size_t a = i - 1;
  return a * (2 * n - a - 1) / 2 + (j - i - 1);
}

bool transitive(Edge e, Edge f) { return e.j == f.i || f.j == e.i; }
bool crossing(Edge e, Edge f) { return (e.i < f.i && f.i < e.j && e.j < f.j) || (f.i < e.i && e.i < f.j && f.j < e.j); }

}  // namespace

GTable::GTable(std::size_t n) : n_(n) {
  if (n < 2) throw PreconditionError("GTable needs n >= 2");
  values_.assign(n * (n - 1) / 2, Rational(0));
}

GTable GTable::square(std::size_t n) {
  GTable g(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) g(i, j) = static_cast<unsigned long>((j - i) * (j - i));
  return g;
}

GTable GTable::convex(const std::vector<Rational>& t, unsigned power) {
  if (power < 2) throw PreconditionError("GTable::convex: power must be at least 2");
  for (std::size_t k = 1; k < t.size(); ++k)
    if (t[k] <= t[k - 1]) throw PreconditionError("GTable::convex: t must be strictly increasing");
  GTable g(t.size());
  for (std::size_t i = 1; i <= t.size(); ++i)
    for (std::size_t j = i + 1; j <= t.size(); ++j) {
      const Rational d = t[j - 1] - t[i - 1];
      Rational value = 1;
      for (unsigned p = 0; p < power; ++p) value *= d;
      g(i, j) = value;
    }
  return g;
}

const Rational& GTable::operator()(std::size_t i, std::size_t j) const { return values_[slot(n_, i, j)]; }
Rational& GTable::operator()(std::size_t i, std::size_t j) { return values_[slot(n_, i, j)]; }

GValidityReport check_g_validity(const GTable& g) {
  const std::size_t n = g.n();
  GValidityReport report;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      for (std::size_t k = j + 1; k <= n; ++k)
        for (std::size_t l = k + 1; l <= n; ++l)
          if (g(i, l) + g(j, k) <= g(i, k) + g(j, l))
            report.violations.push_back({GViolation::Kind::Crossing, {i, j, k, l}});
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t k = i + 1; k <= n; ++k)
      for (std::size_t l = k + 1; l <= n; ++l)
        if (g(i, l) <= g(i, k) + g(k, l)) report.violations.push_back({GViolation::Kind::Transitive, {i, k, l, 0}});
  report.valid = report.violations.empty();
  return report;
}

std::optional<std::string> tree_defect(std::size_t n, const std::vector<Edge>& edges) {
  if (n < 2) return "need at least two vertices";
  if (edges.size() != n - 1) return "expected " + std::to_string(n - 1) + " edges, got " + std::to_string(edges.size());
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return "duplicate edge";
  std::vector<std::size_t> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const Edge& e : sorted) {
    if (e.i < 1 || e.j > n || e.i == e.j) return "edge " + to_string(e) + " out of range";
    const std::size_t a = find(e.i), b = find(e.j);
    if (a == b) return "edges contain a cycle";
    parent[a] = b;
  }
  for (std::size_t a = 0; a < sorted.size(); ++a)
    for (std::size_t b = a + 1; b < sorted.size(); ++b) {
      if (transitive(sorted[a], sorted[b]))
        return "transitive pair " + to_string(sorted[a]) + ", " + to_string(sorted[b]);
      if (crossing(sorted[a], sorted[b])) return "crossing pair " + to_string(sorted[a]) + ", " + to_string(sorted[b]);
    }
  if (!std::binary_search(sorted.begin(), sorted.end(), Edge(1, n))) return "missing edge 1-" + std::to_string(n);
  return std::nullopt;
}

Tree1D::Tree1D(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (const auto defect = tree_defect(n, edges_)) throw PreconditionError("not a non-crossing alternating tree: " + *defect);
  std::sort(edges_.begin(), edges_.end());
}

bool Tree1D::contains(Edge e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

std::vector<Tree1D> enumerate_trees(std::size_t n) {
  if (n < 2) throw PreconditionError("enumerate_trees needs n >= 2");
  std::vector<Edge> pairs;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);

  std::vector<Tree1D> out;
  std::vector<Edge> chosen;
  std::vector<std::size_t> comp(n + 1);
  std::iota(comp.begin(), comp.end(), 0);

  std::function<void(std::size_t)> grow = [&](std::size_t next) {
    if (chosen.size() == n - 1) {
      out.emplace_back(n, chosen);
      return;
    }
    if (pairs.size() - next < (n - 1) - chosen.size()) return;
    const Edge e = pairs[next];
    const bool compatible = comp[e.i] != comp[e.j] && std::none_of(chosen.begin(), chosen.end(), [&](const Edge& f) {
                              return transitive(e, f) || crossing(e, f);
                            });
    if (compatible) {
      const std::vector<std::size_t> saved = comp;
      const std::size_t from = comp[e.j], to = comp[e.i];
      for (auto& c : comp)
        if (c == from) c = to;
      chosen.push_back(e);
      grow(next + 1);
      chosen.pop_back();
      comp = saved;
    }
    grow(next + 1);
  };
  grow(0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Largest k < b with {a,k} in t, or a when there is none: the left part of
// the interval [a,b] after removing {a,b} is [a,k].
std::size_t split_point(const Tree1D& t, std::size_t a, std::size_t b) {
  std::size_t k = a;
  for (const Edge& e : t.edges())
    if (e.i == a && e.j < b) k = std::max(k, e.j);
  return k;
}

int build_binary(const Tree1D& t, std::size_t a, std::size_t b, BinaryTree& out) {
  if (a >= b) return -1;
  const int id = static_cast<int>(out.nodes.size());
  out.nodes.push_back({Edge(a, b), -1, -1});
  const std::size_t k = split_point(t, a, b);
  const int left = build_binary(t, a, k, out);
  const int right = build_binary(t, k + 1, b, out);
  out.nodes[id].left = left;
  out.nodes[id].right = right;
  return id;
}

std::size_t subtree_size(const BinaryTree& b, int node) {
  if (node < 0) return 0;
  if (static_cast<std::size_t>(node) >= b.nodes.size()) throw PreconditionError("binary tree child index out of range");
  return 1 + subtree_size(b, b.nodes[node].left) + subtree_size(b, b.nodes[node].right);
}

void collect_edges(const BinaryTree& b, int node, std::size_t a, std::vector<Edge>& edges) {
  if (node < 0) return;
  const std::size_t left = subtree_size(b, b.nodes[node].left);
  const std::size_t right = subtree_size(b, b.nodes[node].right);
  edges.emplace_back(a, a + left + right + 1);
  collect_edges(b, b.nodes[node].left, a, edges);
  collect_edges(b, b.nodes[node].right, a + left + 1, edges);
}

void print_shape(const BinaryTree& b, int node, std::string& out) {
  if (node < 0) {
    out += '.';
    return;
  }
  out += '(';
  print_shape(b, b.nodes[node].left, out);
  out += ',';
  print_shape(b, b.nodes[node].right, out);
  out += ')';
}

void print_bracketing(const Tree1D& t, std::size_t a, std::size_t b, std::string& out) {
  if (a == b) {
    out += static_cast<char>('a' + (a - 1));
    return;
  }
  const std::size_t k = split_point(t, a, b);
  out += '(';
  print_bracketing(t, a, k, out);
  print_bracketing(t, k + 1, b, out);
  out += ')';
}

}  // namespace

std::string BinaryTree::shape() const {
  std::string out;
  print_shape(*this, root, out);
  return out;
}

BinaryTree tree_to_binary(const Tree1D& t) {
  BinaryTree b;
  b.root = build_binary(t, 1, t.n(), b);
  return b;
}

Tree1D binary_to_tree(const BinaryTree& b) {
  if (b.root < 0 || b.nodes.empty()) throw PreconditionError("binary_to_tree: empty tree");
  const std::size_t size = subtree_size(b, b.root);
  if (size != b.nodes.size()) throw PreconditionError("binary_to_tree: nodes are not a single tree");
  std::vector<Edge> edges;
  collect_edges(b, b.root, 1, edges);
  return Tree1D(size + 1, std::move(edges));
}

std::string tree_to_bracketing(const Tree1D& t) {
  if (t.n() > 26) throw PreconditionError("bracketing uses letters a-z; n must be at most 26");
  std::string out;
  print_bracketing(t, 1, t.n(), out);
  return out;
}

Tree1D bracketing_to_tree(std::string_view text) {
  std::size_t pos = 0;
  std::size_t next_letter = 1;
  std::vector<Edge> edges;
  auto skip = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n')) ++pos;
  };
  // Returns the first and last letter of the parsed item.
  std::function<std::pair<std::size_t, std::size_t>()> item = [&]() -> std::pair<std::size_t, std::size_t> {
    skip();
    if (pos >= text.size()) throw InputError("bracketing ends unexpectedly");
    const char c = text[pos];
    if (c >= 'a' && c <= 'z') {
      if (static_cast<std::size_t>(c - 'a' + 1) != next_letter)
        throw InputError(std::string("bracketing letter '") + c + "' out of order");
      ++pos;
      const std::size_t l = next_letter++;
      return {l, l};
    }
    if (c != '(') throw InputError(std::string("unexpected character '") + c + "' in bracketing");
    ++pos;
    const auto left = item();
    const auto right = item();
    skip();
    if (pos >= text.size() || text[pos] != ')') throw InputError("each parenthesis must enclose exactly two items");
    ++pos;
    edges.emplace_back(left.first, right.second);
    return {left.first, right.second};
  };
  item();
  skip();
  if (pos != text.size()) throw InputError("trailing characters after bracketing");
  const std::size_t n = next_letter - 1;
  if (n < 2) throw InputError("bracketing needs at least two letters");
  try {
    return Tree1D(n, std::move(edges));
  } catch (const PreconditionError& e) {
    throw InputError(e.what());
  }
}

Vertex1D vertex_for_tree(const GTable& g, const Tree1D& t) {
  const std::size_t n = t.n();
  if (g.n() != n) throw PreconditionError("vertex_for_tree: size mismatch");
  std::vector<Rational> v(n, Rational(0));
  std::vector<bool> known(n + 1, false);
  known[1] = true;
  for (std::size_t reached = 1; reached < n;) {
    const std::size_t before = reached;
    for (const Edge& e : t.edges()) {
      if (known[e.i] && !known[e.j]) {
        v[e.j - 1] = v[e.i - 1] + g[e];
        known[e.j] = true;
        ++reached;
      } else if (known[e.j] && !known[e.i]) {
        v[e.i - 1] = v[e.j - 1] - g[e];
        known[e.i] = true;
        ++reached;
      }
    }
    if (reached == before) throw InvariantViolation("vertex_for_tree: tree is not connected");
  }
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      if (t.contains(Edge(i, j))) continue;
      if (v[j - 1] - v[i - 1] <= g(i, j))
        throw InvalidPerturbation("non-edge " + to_string(Edge(i, j)) + " is not strictly slack");
    }
  return {t, std::move(v)};
}

Tree1D flip_tree(const Tree1D& t, Edge e) {
  const std::size_t n = t.n();
  if (e == Edge(1, n)) throw PreconditionError("flip_tree: edge 1-n cannot be flipped");
  if (!t.contains(e)) throw PreconditionError("flip_tree: edge " + to_string(e) + " is not in the tree");
  std::vector<Edge> rest;
  for (const Edge& f : t.edges())
    if (f != e) rest.push_back(f);
  std::vector<Tree1D> found;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      const Edge c(i, j);
      if (c == e || std::binary_search(rest.begin(), rest.end(), c)) continue;
      std::vector<Edge> candidate = rest;
      candidate.push_back(c);
      if (!tree_defect(n, candidate)) found.emplace_back(n, std::move(candidate));
    }
  if (found.size() != 1)
    throw InvariantViolation("flip of " + to_string(e) + " has " + std::to_string(found.size()) + " replacements");
  return found.front();
}

std::vector<std::vector<Rational>> cone_rays_1d(std::size_t n) {
  if (n < 2) throw PreconditionError("cone_rays_1d needs n >= 2");
  std::vector<std::vector<Rational>> rays;
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<Rational> r(n, Rational(0));
    for (std::size_t i = k; i < n; ++i) r[i] = 1;
    rays.push_back(std::move(r));
  }
  return rays;
}

std::vector<ParallelFacetPair> facet_parallel_report(const GTable& g) {
  const std::size_t n = g.n();
  if (n < 3) throw PreconditionError("facet_parallel_report needs n >= 3");
  std::vector<Vertex1D> vertices;
  for (const Tree1D& t : enumerate_trees(n)) vertices.push_back(vertex_for_tree(g, t));

  // Every constraint other than {1,n} must be a facet of the (n-2)-dimensional face.
  std::vector<Edge> facets;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      const Edge e(i, j);
      if (e == Edge(1, n)) continue;
      Matrix diffs(0, n);
      const std::vector<Rational>* base = nullptr;
      for (const Vertex1D& v : vertices) {
        if (v.v[j - 1] - v.v[i - 1] != g[e]) continue;
        if (base == nullptr) {
          base = &v.v;
          continue;
        }
        std::vector<Rational> d(n);
        for (std::size_t k = 0; k < n; ++k) d[k] = v.v[k] - (*base)[k];
        diffs.append_row(d);
      }
      if (base == nullptr || rank(diffs) != n - 3)
        throw InvariantViolation("constraint " + to_string(e) + " does not define a facet");
      facets.push_back(e);
    }

  // Normals restricted to the face's affine hull, where v_1 and v_n are fixed.
  auto normal = [&](Edge e) {
    std::vector<Rational> r(n, Rational(0));
    r[e.j - 1] += 1;
    r[e.i - 1] -= 1;
    r[0] = 0;
    r[n - 1] = 0;
    return r;
  };
  auto parallel = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Matrix m(0, n);
    m.append_row(a);
    m.append_row(b);
    return rank(m) == 1;
  };

  std::vector<ParallelFacetPair> pairs;
  for (std::size_t a = 0; a < facets.size(); ++a)
    for (std::size_t b = a + 1; b < facets.size(); ++b) {
      if (!parallel(normal(facets[a]), normal(facets[b]))) continue;
      const Edge x = facets[a], y = facets[b];
      if (!(x.i == 1 && y.j == n && x.j == y.i))
        throw InvariantViolation("unexpected parallel facets " + to_string(x) + " and " + to_string(y));
      pairs.push_back({x.j, x, y});
    }
  std::sort(pairs.begin(), pairs.end(), [](const auto& p, const auto& q) { return p.i < q.i; });
  if (pairs.size() != n - 2) throw InvariantViolation("expected n-2 parallel facet pairs");
  return pairs;
}

Realization1D realize(const GTable& g) {
  const std::size_t n = g.n();
  Realization1D r;
  const std::vector<Tree1D> trees = enumerate_trees(n);
  for (const Tree1D& t : trees) r.vertices.push_back(vertex_for_tree(g, t));

  for (std::size_t a = 0; a < trees.size(); ++a) {
    for (const Edge& e : trees[a].edges()) {
      if (e == Edge(1, n)) continue;
      const Tree1D other = flip_tree(trees[a], e);
      const auto it = std::lower_bound(trees.begin(), trees.end(), other);
      if (it == trees.end() || *it != other) throw InvariantViolation("flip leaves the enumerated trees");
      const std::size_t b = static_cast<std::size_t>(it - trees.begin());
      if (a < b) {
        Edge in = other.edges().front();
        for (const Edge& f : other.edges())
          if (!trees[a].contains(f)) in = f;
        r.edges.push_back({a, b, e, in});
      }
    }

    // Releasing {1,n}: everything reachable from 1 stays, the rest moves right.
    std::size_t k = 1;
    for (const Edge& e : trees[a].edges())
      if (e.i == 1 && e.j < n) k = std::max(k, e.j);
    std::vector<Rational> dir(n, Rational(0));
    for (std::size_t i = k; i < n; ++i) dir[i] = 1;
    for (const Edge& e : trees[a].edges()) {
      const Rational s = dir[e.j - 1] - dir[e.i - 1];
      if ((e == Edge(1, n)) != (sgn(s) > 0) || sgn(s) < 0)
        throw InvariantViolation("released ray does not keep the remaining tree tight");
    }
    r.rays.push_back({a, std::move(dir)});
  }
  return r;
}

}  // namespace ppt::assoc1d
