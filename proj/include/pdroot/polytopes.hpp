#pragma once

#include <array>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "pdroot/graph.hpp"
#include "pdroot/subdivision.hpp"
#include "pdroot/types.hpp"

namespace pdroot
{

/// Lexicographic order on equal-length exact vectors, for point sets.
struct PointLess
{
  bool operator()(const VectorQ & a, const VectorQ & b) const;
};
using PointSet = std::set<VectorQ, PointLess>;

/// e_i - e_j in Q^n.
VectorQ root(int i, int j, int n);

/// Pairs p < q joined by an increasing path of G. For a forest these are exactly
/// the positive roots in the cone spanned by G's edge vectors.
std::vector<Edge> root_pairs_in_cone(const Graph & g);
/// Throws std::invalid_argument on cyclic input.
PointSet positive_roots_in_cone(const Graph & g);
/// {0} together with positive_roots_in_cone(g).
PointSet root_polytope_vertices(const Graph & g);

/// G plus a source s below 1 and a sink t above n, joined to every vertex.
/// Vertices are numbered s = 0, 1..n, t = n + 1; edges are G's edges first,
/// then (s, i) for i = 1..n, then (i, t) for i = 1..n.
struct AugmentedGraph
{
  int n = 0;
  std::vector<Edge> edges;

  int source() const { return 0; }
  int sink() const { return n + 1; }
  int vertex_count() const { return n + 2; }
};

AugmentedGraph augment(const Graph & g);
/// Indicator vectors (indexed like aug.edges) of the increasing s -> t paths.
PointSet flow_vertices(const AugmentedGraph & aug);
/// Drops the coordinates of edges at s or t, then sends the unit vector of edge (i, j) to e_i - e_j.
PointSet project_and_map(const PointSet & flows, const AugmentedGraph & aug);

/// (G1, G2, G3) for the pair (i, j), (j, k). Throws std::invalid_argument if absent.
std::array<Graph, 3> graph_reduce(const Graph & g0, const Triple & t);

/// Node of the reduction tree of graphs. Children are G1, G2, G3 in that order;
/// the G3 branch is the common facet of the G1 and G2 pieces.
struct DissectionNode
{
  Graph graph;
  int edges_lost = 0;
  std::optional<Triple> pair;
  std::vector<std::unique_ptr<DissectionNode>> children;
};

struct Dissection
{
  std::unique_ptr<DissectionNode> root;

  std::vector<const DissectionNode *> leaves() const;
  /// census[k] = number of leaves that lost k edges (k = 0 are full-dimensional).
  std::vector<std::int64_t> census() const;
};

Dissection dissect(const Graph & g, const Strategy & strategy = Strategy::lex());

/// Spanning trees of K_n that are noncrossing and alternating, sorted.
std::vector<Graph> noncrossing_alternating_trees(int n);

/// Convex hull of `vertices`, labelled by the tree that produced it.
struct Simplex
{
  Graph tree;
  std::vector<VectorQ> vertices;
};

/// ConvHull(0, e_i - e_j for (i, j) in T) for each noncrossing alternating tree T.
std::vector<Simplex> canonical_triangulation(int n);
/// Determinant of the nonzero vertices of a canonical simplex restricted to coordinates 1..n-1.
Rational generator_determinant(const Simplex & s);

/// lambda(x) = sum_k (n - k) x_k; lambda(e_i - e_j) = j - i.
Rational vertex_figure_level(const VectorQ & x);
/// (e_i - e_j) / (j - i) for (i, j) in T, for each noncrossing alternating tree T.
std::vector<Simplex> vertex_figure_simplices(int n);

/// Point location in a full-dimensional simplex with apex 0, working in the first
/// n - 1 coordinates of the hyperplane sum x = 0.
class ConeSimplex
{
public:
  explicit ConeSimplex(const Graph & tree);

  const Graph & tree() const { return tree_; }
  /// Coefficients c with x = sum c_k g_k, or nullopt if x is off the hyperplane.
  std::optional<VectorQ> coefficients(const VectorQ & x) const;
  /// c >= 0 and sum c <= 1.
  bool contains(const VectorQ & x) const;
  /// c > 0 and sum c < 1.
  bool contains_in_interior(const VectorQ & x) const;
  /// Halfspaces a . y <= b in the first n - 1 coordinates describing the simplex.
  std::pair<MatrixQ, VectorQ> halfspaces() const;

private:
  Graph tree_;
  MatrixQ inverse_;
};

/// Vertices of the intersection of two simplices with apex 0, via exact basis enumeration.
PointSet intersection_vertices(const ConeSimplex & a, const ConeSimplex & b);

}  // namespace pdroot
