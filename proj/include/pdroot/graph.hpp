#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace pdroot
{

/// Edge (i, j) with i < j.
struct Edge
{
  int i = 1;
  int j = 2;

  friend bool operator==(const Edge &, const Edge &) = default;
  friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Multigraph on [n] whose edges are kept as a sorted multiset.
class Graph
{
public:
  Graph() = default;
  /// Throws std::invalid_argument unless 1 <= i < j <= n for every edge.
  Graph(int n, std::vector<Edge> edges);

  static Graph path(int n);
  /// "12,23,34" shorthand (single digits) or "(1,2),(2,3)"; n defaults to the largest vertex.
  static Graph parse(std::string_view text, int n = 0);

  int n() const { return n_; }
  const std::vector<Edge> & edges() const { return edges_; }
  bool has_edge(const Edge & e) const;
  std::size_t count(const Edge & e) const;

  Graph without(const Edge & e) const;
  Graph with(const Edge & e) const;

  /// No cycles as an undirected multigraph (parallel edges count as cycles).
  bool is_acyclic() const;
  bool is_spanning_tree() const;
  /// No i < j < k with (i, j) and (j, k) both edges.
  bool is_alternating() const;
  /// No i < j < k < l with (i, k) and (j, l) both edges.
  bool is_noncrossing() const;

  std::string to_string() const;

  friend bool operator==(const Graph &, const Graph &) = default;
  friend auto operator<=>(const Graph &, const Graph &) = default;

private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

/// Edges common to both graphs (multiset intersection).
Graph intersect(const Graph & a, const Graph & b);

}  // namespace pdroot
