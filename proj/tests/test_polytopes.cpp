#include <doctest.h>

#include "oracles.hpp"
#include "pdroot/checks.hpp"
#include "pdroot/linalg.hpp"
#include "pdroot/polytopes.hpp"

using namespace pdroot;

namespace
{

PointSet roots_of(int n, std::initializer_list<Edge> pairs, bool with_zero)
{
  PointSet out;
  for (const auto & e : pairs) out.insert(root(e.i, e.j, n));
  if (with_zero) out.insert(VectorQ::Zero(n));
  return out;
}

std::vector<std::pair<int, int>> pairs_of(const Graph & g)
{
  std::vector<std::pair<int, int>> out;
  for (const auto & e : g.edges()) out.push_back({e.i, e.j});
  return out;
}

}  // namespace

TEST_SUITE("polytopes")
{
  TEST_CASE("positive roots in the cone")
  {
    CHECK(positive_roots_in_cone(Graph::path(4)).size() == 6);
    CHECK(positive_roots_in_cone(Graph(3, {{1, 3}})) == roots_of(3, {{1, 3}}, false));
    CHECK(positive_roots_in_cone(Graph(3, {{1, 2}, {1, 3}})) == roots_of(3, {{1, 2}, {1, 3}}, false));
    CHECK_THROWS_AS(positive_roots_in_cone(Graph(3, {{1, 2}, {2, 3}, {1, 3}})), std::invalid_argument);
  }

  TEST_CASE("positive roots match the 0/1 combination oracle")
  {
    for (const auto & g : sample_acyclic_graphs(60, 6, 17)) {
      std::set<std::pair<int, int>> got;
      for (const auto & e : root_pairs_in_cone(g)) got.insert({e.i, e.j});
      CHECK_MESSAGE(got == oracle::roots_in_cone(g.n(), pairs_of(g)), g.to_string());
    }
  }

  TEST_CASE("root polytope vertices")
  {
    CHECK(root_polytope_vertices(Graph::path(3)) == roots_of(3, {{1, 2}, {2, 3}, {1, 3}}, true));
    CHECK(root_polytope_vertices(Graph::path(2)) == roots_of(2, {{1, 2}}, true));
    CHECK(root_polytope_vertices(Graph::path(4)).size() == 7);
  }

  TEST_CASE("augmented graphs and flow vertices")
  {
    auto aug = augment(Graph::path(2));
    CHECK(aug.vertex_count() == 4);
    CHECK(aug.edges.size() == 5);
    CHECK(flow_vertices(aug).size() == 3);

    aug = augment(Graph(1, {}));
    CHECK(aug.vertex_count() == 3);
    CHECK(aug.edges == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(flow_vertices(aug).size() == 1);

    aug = augment(Graph::path(3));
    CHECK(aug.vertex_count() == 5);
    CHECK(aug.edges.size() == 8);
    CHECK(flow_vertices(aug).size() == 6);
  }

  TEST_CASE("flow vertices are counted by increasing s-t paths")
  {
    for (const auto & g : sample_acyclic_graphs(30, 6, 2)) {
      // paths ending at v: 1 (from s) plus paths into each lower neighbour
      std::vector<long> ending(g.n() + 1, 1);
      for (int v = 1; v <= g.n(); ++v) {
        for (const auto & e : g.edges()) {
          if (e.j == v) ending[v] += ending[e.i];
        }
      }
      long total = 0;
      for (int v = 1; v <= g.n(); ++v) total += ending[v];
      CHECK(static_cast<long>(flow_vertices(augment(g)).size()) == total);
    }
  }

  TEST_CASE("projection onto the root polytope")
  {
    const auto aug = augment(Graph::path(3));
    CHECK(project_and_map(flow_vertices(aug), aug) == root_polytope_vertices(Graph::path(3)));
    PointSet zero{VectorQ::Zero(static_cast<Eigen::Index>(aug.edges.size()))};
    CHECK(project_and_map(zero, aug) == PointSet{VectorQ::Zero(3)});
    // the three s-i-t paths all land on 0
    int at_zero = 0;
    for (const auto & f : flow_vertices(aug)) at_zero += project_and_map({f}, aug) == PointSet{VectorQ::Zero(3)};
    CHECK(at_zero == 3);
    for (const auto & g : sample_acyclic_graphs(30, 6, 9)) {
      CHECK_MESSAGE(verify_projection(g).ok, g.to_string());
      CHECK_MESSAGE(verify_projection_step(g, Strategy::lex()).ok, g.to_string());
    }
  }

  TEST_CASE("graph_reduce")
  {
    auto r = graph_reduce(Graph::path(4), {2, 3, 4});
    CHECK(r[0] == Graph::parse("12,23,24"));
    CHECK(r[1] == Graph::parse("12,34,24"));
    CHECK(r[2] == Graph(4, {{1, 2}, {2, 4}}));
    r = graph_reduce(Graph::path(3), {1, 2, 3});
    CHECK(r[0] == Graph::parse("12,13"));
    CHECK(r[1] == Graph::parse("23,13"));
    CHECK(r[2] == Graph(3, {{1, 3}}));
    CHECK_THROWS_AS(graph_reduce(Graph::parse("12,13"), {1, 2, 3}), std::invalid_argument);
  }

  TEST_CASE("dissections")
  {
    CHECK(dissect(Graph::path(4), worked_example_strategy()).census() == std::vector<std::int64_t>{5, 5, 1});
    const auto single = dissect(Graph::path(2));
    CHECK(single.leaves().size() == 1);
    CHECK(single.leaves().front()->graph == Graph::path(2));
    const auto p3 = dissect(Graph::path(3));
    std::vector<Graph> full;
    for (const auto * leaf : p3.leaves()) {
      if (leaf->edges_lost == 0) full.push_back(leaf->graph);
    }
    CHECK(full == std::vector<Graph>{Graph::parse("12,13"), Graph::parse("13,23")});
    const auto p5 = dissect(Graph::path(5));
    for (const auto * leaf : p5.leaves()) CHECK(leaf->graph.is_alternating());
  }

  TEST_CASE("dissection census equals Q_G for every strategy")
  {
    const std::vector<Strategy> strategies{Strategy::lex(), Strategy::rlex(), Strategy::random(1),
                                           Strategy::random(2)};
    for (const auto & g : sample_acyclic_graphs(25, 6, 31)) {
      for (const auto & s : strategies) CHECK_MESSAGE(verify_census(g, s).ok, (g.to_string() + " " + s.name()));
    }
  }

  TEST_CASE("noncrossing alternating trees")
  {
    CHECK(noncrossing_alternating_trees(3) == std::vector<Graph>{Graph::parse("12,13"), Graph::parse("13,23")});
    CHECK(noncrossing_alternating_trees(4).size() == 5);
    CHECK(noncrossing_alternating_trees(5).size() == 14);
    for (int n = 2; n <= 6; ++n) {
      std::set<std::vector<std::pair<int, int>>> expected;
      for (const auto & t : oracle::spanning_trees(n)) {
        if (oracle::noncrossing(t) && oracle::alternating(t)) expected.insert(t);
      }
      std::set<std::vector<std::pair<int, int>>> got;
      for (const auto & t : noncrossing_alternating_trees(n)) got.insert(pairs_of(t));
      CHECK(got == expected);
      CHECK(BigInt(got.size()) == oracle::catalan(n - 1));
    }
  }

  TEST_CASE("canonical triangulation is unimodular (n <= 8)")
  {
    CHECK(canonical_triangulation(3).size() == 2);
    CHECK(canonical_triangulation(4).size() == 5);
    for (int n = 2; n <= 8; ++n) CHECK(verify_unimodular(n).ok);
    for (const auto & s : canonical_triangulation(5)) {
      MatrixQ g(4, 4);
      int col = 0;
      for (const auto & v : s.vertices) {
        if (v != VectorQ::Zero(5)) g.col(col++) = v.head(4);
      }
      const auto det = exact_determinant(g);
      CHECK((det == 1 || det == -1));
    }
  }

  TEST_CASE("vertex figure")
  {
    const auto segments = vertex_figure_simplices(3);
    REQUIRE(segments.size() == 2);
    const VectorQ shared = root(1, 3, 3) / Rational(2);
    for (const auto & s : segments) {
      CHECK(s.vertices.size() == 2);
      CHECK(std::count(s.vertices.begin(), s.vertices.end(), shared) == 1);
    }
    CHECK(vertex_figure_simplices(4).size() == 5);
    CHECK(vertex_figure_level(VectorQ::Zero(4)) == 0);
    for (int i = 1; i <= 5; ++i) {
      for (int j = i + 1; j <= 5; ++j) CHECK(vertex_figure_level(root(i, j, 5)) == j - i);
    }
    for (const auto & s : vertex_figure_simplices(5)) {
      for (const auto & v : s.vertices) CHECK(vertex_figure_level(v) == 1);
    }
  }

  TEST_CASE("cone simplex membership agrees with exact_solve")
  {
    const auto tree = Graph::parse("12,13,14");
    const ConeSimplex cone(tree);
    MatrixQ g(3, 3);
    for (int k = 0; k < 3; ++k) g.col(k) = root(tree.edges()[k].i, tree.edges()[k].j, 4).head(3);
    const VectorQ inside = (root(1, 2, 4) + root(1, 3, 4) + root(1, 4, 4)) / Rational(4);
    const auto c = exact_solve(g, VectorQ(inside.head(3)));
    REQUIRE(c);
    CHECK(*cone.coefficients(inside) == *c);
    CHECK(cone.contains_in_interior(inside));
    CHECK(cone.contains(root(1, 2, 4)));
    CHECK_FALSE(cone.contains_in_interior(root(1, 2, 4)));
    CHECK_FALSE(cone.contains(root(2, 3, 4)));
    CHECK_FALSE(cone.contains(VectorQ(root(1, 4, 4) * Rational(2))));
    CHECK_FALSE(cone.coefficients(VectorQ::Ones(4)));
  }

  TEST_CASE("point location in P(P_n)")
  {
    for (int n = 3; n <= 6; ++n) {
      const auto v = verify_point_location(n, 150, 77);
      CHECK_MESSAGE(v.ok, v.details);
    }
  }

  TEST_CASE("intersections of canonical simplices")
  {
    const ConeSimplex a(Graph::parse("12,13,14"));
    CHECK(intersection_vertices(a, a) == root_polytope_vertices(Graph::parse("12,13,14")));
    for (int n = 3; n <= 5; ++n) {
      const auto v = verify_intersections(n, 0, 0);
      CHECK_MESSAGE(v.ok, v.details);
    }
    CHECK(verify_intersections(6, 40, 5).ok);
  }
}
