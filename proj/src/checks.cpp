#include "pdroot/checks.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "pdroot/grothendieck.hpp"
#include "pdroot/pd_complex.hpp"
#include "pdroot/polytopes.hpp"
#include "pdroot/realization.hpp"

namespace pdroot
{

namespace
{

std::string points_string(const PointSet & points)
{
  std::string out = "{";
  bool first = true;
  for (const auto & p : points) {
    out += first ? "(" : ", (";
    first = false;
    for (Eigen::Index k = 0; k < p.size(); ++k) out += (k ? "," : "") + p[k].str();
    out += ")";
  }
  return out + "}";
}

Polynomial shift(const Polynomial & p, const std::string & from, const std::string & to, int delta)
{
  const std::vector<std::string> target{to};
  const auto image = Polynomial::variable(target, to) + Polynomial::constant(target, delta);
  return p.substitute({{from, image}}, target);
}

}  // namespace

Graph random_acyclic_graph(int n, std::mt19937_64 & rng)
{
  std::vector<Edge> pairs;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) pairs.push_back({i, j});
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::bernoulli_distribution take(0.5);
  std::vector<Edge> edges;
  for (const auto & e : pairs) {
    const int a = find(e.i);
    const int b = find(e.j);
    if (a == b) continue;
    if (!take(rng)) continue;
    parent[a] = b;
    edges.push_back(e);
  }
  if (edges.empty()) edges.push_back(pairs.front());
  return Graph(n, std::move(edges));
}

std::vector<Graph> sample_acyclic_graphs(int count, int max_n, std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(std::min(3, max_n), max_n);
  std::vector<Graph> out;
  for (int k = 0; k < count; ++k) out.push_back(random_acyclic_graph(size(rng), rng));
  return out;
}

Verification verify_strategy_invariance(const Graph & g, int strategies, std::uint64_t seed)
{
  const auto reference = q_polynomial(g, Strategy::lex());
  std::vector<Strategy> others{Strategy::rlex()};
  for (int k = 0; k < strategies; ++k) others.push_back(Strategy::random(seed + static_cast<std::uint64_t>(k)));
  for (const auto & s : others) {
    const auto q = q_polynomial(g, s);
    if (q != reference) {
      return Verification::fail(g.to_string() + ": " + s.name() + " gives " + q.to_string() + ", lex gives " +
                                reference.to_string());
    }
  }
  return Verification::pass(g.to_string() + ": " + reference.to_string());
}

Verification verify_strategy_dependence(const Graph & g, int strategies, std::uint64_t seed)
{
  const auto m = EdgeMonomial::of(g);
  const auto lex = reduced_form(m, Strategy::lex());
  std::vector<Strategy> candidates{Strategy::rlex(), worked_example_strategy()};
  for (int k = 0; k < strategies; ++k) candidates.push_back(Strategy::random(seed + static_cast<std::uint64_t>(k)));
  for (const auto & s : candidates) {
    const auto other = reduced_form(m, s);
    if (other.specialize() != lex.specialize()) {
      return Verification::fail(g.to_string() + ": " + s.name() + " specializes to " + other.specialize().to_string());
    }
    if (other.to_polynomial() != lex.to_polynomial()) {
      return Verification::pass(g.to_string() + ": lex and " + s.name() + " differ, both give " +
                                lex.specialize().to_string());
    }
  }
  return Verification::fail(g.to_string() + ": no candidate strategy changes the x-form");
}

Verification verify_census(const Graph & g, const Strategy & strategy)
{
  const auto census = dissect(g, strategy).census();
  const auto q = q_polynomial(g, strategy).univariate_coefficients();
  std::vector<BigInt> counts(census.begin(), census.end());
  if (counts != q) {
    return Verification::fail(g.to_string() + ": dissection census differs from Q_G");
  }
  return Verification::pass(g.to_string() + ": " + std::to_string(census.empty() ? 0 : census[0]) +
                            " full-dimensional leaves");
}

Verification verify_projection(const Graph & g)
{
  const auto aug = augment(g);
  const auto image = project_and_map(flow_vertices(aug), aug);
  const auto expected = root_polytope_vertices(g);
  if (image != expected) {
    return Verification::fail(g.to_string() + ": f(p(F)) = " + points_string(image) + " but P(G) has " +
                              points_string(expected));
  }
  return Verification::pass(g.to_string() + ": " + std::to_string(image.size()) + " vertices");
}

Verification verify_projection_step(const Graph & g, const Strategy & strategy)
{
  const auto pair = reducible_pair(EdgeMonomial::of(g), strategy);
  if (!pair) return verify_projection(g);
  const auto pieces = graph_reduce(g, *pair);
  for (const auto & piece : pieces) {
    if (auto v = verify_projection(piece); !v) return v;
  }
  return Verification::pass(g.to_string() + " at (" + std::to_string(pair->i) + "," + std::to_string(pair->j) +
                            "," + std::to_string(pair->k) + ")");
}

Verification verify_unimodular(int n)
{
  const auto simplices = canonical_triangulation(n);
  for (const auto & s : simplices) {
    const auto det = generator_determinant(s);
    if (det != 1 && det != -1) {
      return Verification::fail(s.tree.to_string() + " has determinant " + det.str());
    }
  }
  return Verification::pass(std::to_string(simplices.size()) + " simplices");
}

Verification verify_point_location(int n, int samples, std::uint64_t seed)
{
  std::vector<ConeSimplex> cones;
  for (const auto & t : noncrossing_alternating_trees(n)) cones.emplace_back(t);
  const auto vertices = root_polytope_vertices(Graph::path(n));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> weight(1, 1000000);
  for (int s = 0; s < samples; ++s) {
    VectorQ x = VectorQ::Zero(n);
    long total = 0;
    for (const auto & v : vertices) {
      const long w = weight(rng);
      x += Rational(w) * v;
      total += w;
    }
    x /= Rational(total);
    int containing = 0;
    int interior = 0;
    for (const auto & c : cones) {
      containing += c.contains(x);
      interior += c.contains_in_interior(x);
    }
    if (containing != 1 || interior != 1) {
      return Verification::fail("sample " + std::to_string(s) + " lies in " + std::to_string(containing) +
                                " simplices, " + std::to_string(interior) + " interiors");
    }
  }
  return Verification::pass(std::to_string(samples) + " samples over " + std::to_string(cones.size()) +
                            " simplices");
}

Verification verify_intersections(int n, int max_pairs, std::uint64_t seed)
{
  const auto trees = noncrossing_alternating_trees(n);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < trees.size(); ++a) {
    for (std::size_t b = a + 1; b < trees.size(); ++b) pairs.emplace_back(a, b);
  }
  if (max_pairs > 0 && pairs.size() > static_cast<std::size_t>(max_pairs)) {
    std::mt19937_64 rng(seed);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(static_cast<std::size_t>(max_pairs));
    std::sort(pairs.begin(), pairs.end());
  }
  for (const auto & [a, b] : pairs) {
    const auto got = intersection_vertices(ConeSimplex(trees[a]), ConeSimplex(trees[b]));
    const auto common = intersect(trees[a], trees[b]);
    const auto expected = root_polytope_vertices(common);
    if (got != expected) {
      return Verification::fail(trees[a].to_string() + " cap " + trees[b].to_string() + " has vertices " +
                                points_string(got) + ", expected " + points_string(expected));
    }
  }
  return Verification::pass(std::to_string(pairs.size()) + " pairs");
}

Verification verify_triangulation_h(int n)
{
  const auto h_tri = h_polynomial(canonical_triangulation_complex(n));
  const auto h_pd = h_polynomial(build_pdc(Permutation::dominant_path(n)).complex);
  if (h_tri != h_pd) {
    return Verification::fail("triangulation h " + h_tri.to_string(true) + " vs PD h " + h_pd.to_string(true));
  }
  const auto q = q_polynomial(Graph::path(n));
  const auto shifted = shift(h_tri, "x", "b", 1);
  if (shifted != q) return Verification::fail(polynomial_diff(shifted, q));
  return Verification::pass(h_tri.to_string(true));
}

Verification verify_interior_h(const Permutation & w)
{
  const auto pdc = build_pdc(w);
  const auto from_interior = shift(h_from_interior(pdc), "b", "x", -1);
  const auto h = h_polynomial(pdc.complex);
  if (from_interior != h) return Verification::fail(w.to_string() + ": " + polynomial_diff(from_interior, h));
  return Verification::pass(w.to_string() + ": " + h.to_string(true));
}

Verification verify_nonnegativity(const Permutation & w)
{
  const auto p = shift(groth_beta(w), "b", "b", -1);
  for (const auto & [e, c] : p.terms()) {
    if (c < 0) return Verification::fail(w.to_string() + ": " + p.to_string());
  }
  return Verification::pass(w.to_string() + ": " + p.to_string(true));
}

}  // namespace pdroot
