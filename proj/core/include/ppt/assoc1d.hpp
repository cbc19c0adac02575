#ifndef PPT_ASSOC1D_HPP
#define PPT_ASSOC1D_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ppt/geometry.hpp"
#include "ppt/rational.hpp"

// One-dimensional constrained expansions v_j - v_i >= g_ij (i < j), v_1 = 0.
// Vertices here are labelled 1..n; an Edge {i, j} always has i < j.
namespace ppt::assoc1d {

class GTable {
 public:
  GTable() = default;
  /// All entries zero. Throws PreconditionError for n < 2.
  explicit GTable(std::size_t n);

  /// g_ij = (j - i)^2.
  static GTable square(std::size_t n);
  /// g_ij = h(t_j - t_i) with h(t) = t^power; t must be strictly increasing
  /// and power >= 2.
  static GTable convex(const std::vector<Rational>& t, unsigned power = 2);

  std::size_t n() const noexcept { return n_; }
  const Rational& operator()(std::size_t i, std::size_t j) const;
  Rational& operator()(std::size_t i, std::size_t j);
  const Rational& operator[](Edge e) const { return (*this)(e.i, e.j); }

  friend bool operator==(const GTable&, const GTable&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> values_;
};

struct GViolation {
  enum class Kind { Crossing, Transitive };
  Kind kind;
  // Crossing: i < j < k < l with g_il + g_jk <= g_ik + g_jl.
  // Transitive: i < k < l (stored in the first three slots) with g_il <= g_ik + g_kl.
  std::array<std::size_t, 4> indices;
};

struct GValidityReport {
  bool valid = false;
  std::vector<GViolation> violations;
};

GValidityReport check_g_validity(const GTable& g);

/// Non-crossing alternating spanning tree on 1..n.
class Tree1D {
 public:
  /// Throws PreconditionError unless the edges form such a tree.
  Tree1D(std::size_t n, std::vector<Edge> edges);

  std::size_t n() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool contains(Edge e) const;

  friend bool operator==(const Tree1D&, const Tree1D&) = default;
  friend auto operator<=>(const Tree1D&, const Tree1D&) = default;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
};

/// Why an edge set on 1..n is not a non-crossing alternating tree, or nullopt.
std::optional<std::string> tree_defect(std::size_t n, const std::vector<Edge>& edges);

/// Backtracking over pairs in lexicographic order; result sorted.
std::vector<Tree1D> enumerate_trees(std::size_t n);

/// Binary tree whose nodes are the tree edges; the root is {1,n}.
struct BinaryTree {
  struct Node {
    Edge label;
    int left = -1;
    int right = -1;
  };
  std::vector<Node> nodes;  // preorder
  int root = -1;

  /// Shape only: a node prints as "(L,R)" and an empty subtree as ".",
  /// so a single node is "(.,.)".
  std::string shape() const;
  friend bool operator==(const BinaryTree&, const BinaryTree&) = default;
};

BinaryTree tree_to_binary(const Tree1D& t);
/// Labels are recomputed from the shape. Throws PreconditionError on an empty tree.
Tree1D binary_to_tree(const BinaryTree& b);

/// Edge {i,j} becomes a parenthesis around letters i..j; letters a, b, c, ...
std::string tree_to_bracketing(const Tree1D& t);
/// Throws InputError on malformed strings.
Tree1D bracketing_to_tree(std::string_view text);

struct Vertex1D {
  Tree1D tree;
  std::vector<Rational> v;  // v[0] is v_1 = 0
};

/// Propagates v from v_1 = 0 along tree edges. Throws InvalidPerturbation
/// when some non-edge is not strictly slack.
Vertex1D vertex_for_tree(const GTable& g, const Tree1D& t);

/// Replaces e by the unique other edge giving a tree. Throws PreconditionError
/// for e = {1,n} or e not in t, InvariantViolation if not unique.
Tree1D flip_tree(const Tree1D& t, Edge e);

/// The n-1 staircase rays (0,...,0,1,...,1); ray k has k leading zeros.
std::vector<std::vector<Rational>> cone_rays_1d(std::size_t n);

struct ParallelFacetPair {
  std::size_t i;  // 2..n-1
  Edge first;     // {1,i}
  Edge second;    // {i,n}
};

/// Among the facets of the bounded face (where v_n - v_1 = g_1n), the pairs
/// with parallel normals. Every constraint other than {1,n} is checked to be
/// a facet, and the parallel pairs must be exactly {1,i},{i,n}.
std::vector<ParallelFacetPair> facet_parallel_report(const GTable& g);

struct Flip1D {
  std::size_t from;
  std::size_t to;
  Edge out;
  Edge in;
};

struct Ray1D {
  std::size_t vertex;
  std::vector<Rational> direction;
};

struct Realization1D {
  std::vector<Vertex1D> vertices;  // order of enumerate_trees
  std::vector<Flip1D> edges;
  std::vector<Ray1D> rays;         // release of {1,n} at each vertex
};

Realization1D realize(const GTable& g);

}  // namespace ppt::assoc1d

#endif  // PPT_ASSOC1D_HPP
