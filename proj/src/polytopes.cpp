#include "pdroot/polytopes.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "pdroot/linalg.hpp"

namespace pdroot
{

bool PointLess::operator()(const VectorQ & a, const VectorQ & b) const
{
  if (a.size() != b.size()) return a.size() < b.size();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

VectorQ root(int i, int j, int n)
{
  VectorQ v = VectorQ::Zero(n);
  v[i - 1] = 1;
  v[j - 1] = -1;
  return v;
}

std::vector<Edge> root_pairs_in_cone(const Graph & g)
{
  std::vector<std::vector<int>> up(g.n() + 1);
  for (const auto & e : g.edges()) up[e.i].push_back(e.j);
  std::vector<Edge> out;
  for (int p = 1; p <= g.n(); ++p) {
    std::vector<bool> seen(g.n() + 1, false);
    std::vector<int> stack{p};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : up[v]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    for (int q = p + 1; q <= g.n(); ++q) {
      if (seen[q]) out.push_back({p, q});
    }
  }
  return out;
}

PointSet positive_roots_in_cone(const Graph & g)
{
  if (!g.is_acyclic()) throw std::invalid_argument("root polytopes need an acyclic graph");
  PointSet out;
  for (const auto & e : root_pairs_in_cone(g)) out.insert(root(e.i, e.j, g.n()));
  return out;
}

PointSet root_polytope_vertices(const Graph & g)
{
  auto out = positive_roots_in_cone(g);
  out.insert(VectorQ::Zero(g.n()));
  return out;
}

AugmentedGraph augment(const Graph & g)
{
  AugmentedGraph aug{g.n(), g.edges()};
  for (int i = 1; i <= g.n(); ++i) aug.edges.push_back({0, i});
  for (int i = 1; i <= g.n(); ++i) aug.edges.push_back({i, g.n() + 1});
  return aug;
}

PointSet flow_vertices(const AugmentedGraph & aug)
{
  std::vector<std::vector<int>> out_edges(aug.vertex_count());
  for (std::size_t k = 0; k < aug.edges.size(); ++k) out_edges[aug.edges[k].i].push_back(static_cast<int>(k));

  PointSet out;
  VectorQ flow = VectorQ::Zero(static_cast<Eigen::Index>(aug.edges.size()));
  std::function<void(int)> walk = [&](int v) {
    if (v == aug.sink()) {
      out.insert(flow);
      return;
    }
    for (int k : out_edges[v]) {
      flow[k] = 1;
      walk(aug.edges[k].j);
      flow[k] = 0;
    }
  };
  walk(aug.source());
  return out;
}

PointSet project_and_map(const PointSet & flows, const AugmentedGraph & aug)
{
  PointSet out;
  for (const auto & f : flows) {
    VectorQ x = VectorQ::Zero(aug.n);
    for (std::size_t k = 0; k < aug.edges.size(); ++k) {
      const auto & e = aug.edges[k];
      if (e.i == aug.source() || e.j == aug.sink()) continue;
      const auto & c = f[static_cast<Eigen::Index>(k)];
      if (c == 0) continue;
      x[e.i - 1] += c;
      x[e.j - 1] -= c;
    }
    out.insert(x);
  }
  return out;
}

std::array<Graph, 3> graph_reduce(const Graph & g0, const Triple & t)
{
  const Edge ij{t.i, t.j};
  const Edge jk{t.j, t.k};
  const Edge ik{t.i, t.k};
  if (!g0.has_edge(ij) || !g0.has_edge(jk)) throw std::invalid_argument("reducible pair not present in graph");
  return {g0.without(jk).with(ik), g0.without(ij).with(ik), g0.without(ij).without(jk).with(ik)};
}

namespace
{

std::unique_ptr<DissectionNode> build(Graph g, int lost, const Strategy & strategy)
{
  auto node = std::make_unique<DissectionNode>();
  node->pair = reducible_pair(EdgeMonomial{g.n(), g.edges(), lost, 1}, strategy);
  if (node->pair) {
    auto pieces = graph_reduce(g, *node->pair);
    node->children.push_back(build(std::move(pieces[0]), lost, strategy));
    node->children.push_back(build(std::move(pieces[1]), lost, strategy));
    node->children.push_back(build(std::move(pieces[2]), lost + 1, strategy));
  }
  node->graph = std::move(g);
  node->edges_lost = lost;
  return node;
}

void gather(const DissectionNode * node, std::vector<const DissectionNode *> & out)
{
  if (node->children.empty()) {
    out.push_back(node);
    return;
  }
  for (const auto & c : node->children) gather(c.get(), out);
}

}  // namespace

std::vector<const DissectionNode *> Dissection::leaves() const
{
  std::vector<const DissectionNode *> out;
  if (root) gather(root.get(), out);
  return out;
}

std::vector<std::int64_t> Dissection::census() const
{
  std::vector<std::int64_t> counts;
  for (const auto * leaf : leaves()) {
    if (static_cast<int>(counts.size()) <= leaf->edges_lost) counts.resize(leaf->edges_lost + 1);
    ++counts[leaf->edges_lost];
  }
  return counts;
}

Dissection dissect(const Graph & g, const Strategy & strategy) { return {build(g, 0, strategy)}; }

std::vector<Graph> noncrossing_alternating_trees(int n)
{
  if (n < 2) throw std::invalid_argument("need n >= 2");
  std::vector<Graph> out;
  auto keep = [&](Graph g) {
    if (g.is_noncrossing() && g.is_alternating()) out.push_back(std::move(g));
  };
  if (n == 2) {
    keep(Graph(2, {{1, 2}}));
    return out;
  }
  // every labelled tree on [n] via its Pruefer sequence
  std::vector<int> code(n - 2, 1);
  while (true) {
    std::vector<int> degree(n + 1, 1);
    for (int v : code) ++degree[v];
    std::vector<Edge> edges;
    for (int v : code) {
      int leaf = 1;
      while (degree[leaf] != 1) ++leaf;
      edges.push_back({std::min(leaf, v), std::max(leaf, v)});
      --degree[leaf];
      --degree[v];
    }
    int u = 0;
    for (int v = 1; v <= n; ++v) {
      if (degree[v] == 1) {
        if (u == 0) {
          u = v;
        } else {
          edges.push_back({u, v});
        }
      }
    }
    keep(Graph(n, std::move(edges)));

    int pos = n - 3;
    while (pos >= 0 && code[pos] == n) code[pos--] = 1;
    if (pos < 0) break;
    ++code[pos];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Simplex> canonical_triangulation(int n)
{
  std::vector<Simplex> out;
  for (auto & t : noncrossing_alternating_trees(n)) {
    Simplex s{t, {VectorQ::Zero(n)}};
    for (const auto & e : t.edges()) s.vertices.push_back(root(e.i, e.j, n));
    out.push_back(std::move(s));
  }
  return out;
}

Rational generator_determinant(const Simplex & s)
{
  const int n = s.tree.n();
  MatrixQ g(n - 1, n - 1);
  int col = 0;
  for (const auto & v : s.vertices) {
    if ((v.array() == Rational(0)).all()) continue;
    if (col == n - 1) throw std::invalid_argument("too many generators");
    g.col(col++) = v.head(n - 1);
  }
  if (col != n - 1) throw std::invalid_argument("too few generators");
  return exact_determinant(g);
}

Rational vertex_figure_level(const VectorQ & x)
{
  const auto n = x.size();
  Rational level = 0;
  for (Eigen::Index k = 0; k < n; ++k) level += Rational(static_cast<long>(n - 1 - k)) * x[k];
  return level;
}

std::vector<Simplex> vertex_figure_simplices(int n)
{
  std::vector<Simplex> out;
  for (auto & t : noncrossing_alternating_trees(n)) {
    Simplex s{t, {}};
    for (const auto & e : t.edges()) {
      s.vertices.push_back(root(e.i, e.j, n) / Rational(e.j - e.i));
    }
    out.push_back(std::move(s));
  }
  return out;
}

ConeSimplex::ConeSimplex(const Graph & tree) : tree_(tree)
{
  const int n = tree.n();
  if (!tree.is_spanning_tree()) throw std::invalid_argument("cone simplices need a spanning tree");
  MatrixQ g(n - 1, n - 1);
  for (int k = 0; k < n - 1; ++k) {
    const auto & e = tree.edges()[k];
    g.col(k) = root(e.i, e.j, n).head(n - 1);
  }
  auto inv = exact_inverse(g);
  if (!inv) throw std::logic_error("tree generators are linearly dependent");
  inverse_ = std::move(*inv);
}

std::optional<VectorQ> ConeSimplex::coefficients(const VectorQ & x) const
{
  const int n = tree_.n();
  if (x.size() != n || x.sum() != 0) return std::nullopt;
  return VectorQ(inverse_ * x.head(n - 1));
}

bool ConeSimplex::contains(const VectorQ & x) const
{
  const auto c = coefficients(x);
  if (!c) return false;
  return std::all_of(c->begin(), c->end(), [](const Rational & v) { return v >= 0; }) && c->sum() <= 1;
}

bool ConeSimplex::contains_in_interior(const VectorQ & x) const
{
  const auto c = coefficients(x);
  if (!c) return false;
  return std::all_of(c->begin(), c->end(), [](const Rational & v) { return v > 0; }) && c->sum() < 1;
}

std::pair<MatrixQ, VectorQ> ConeSimplex::halfspaces() const
{
  const auto m = inverse_.rows();
  MatrixQ a(m + 1, m);
  VectorQ b = VectorQ::Zero(m + 1);
  a.topRows(m) = -inverse_;
  a.row(m) = inverse_.colwise().sum();
  b[m] = 1;
  return {a, b};
}

PointSet intersection_vertices(const ConeSimplex & a, const ConeSimplex & b)
{
  const int n = a.tree().n();
  const auto [aa, ba] = a.halfspaces();
  const auto [ab, bb] = b.halfspaces();
  const auto m = aa.cols();
  MatrixQ rows(aa.rows() + ab.rows(), m);
  rows << aa, ab;
  VectorQ rhs(ba.size() + bb.size());
  rhs << ba, bb;

  PointSet out;
  if (m == 0) return out;
  // choose m tight constraints; each nonsingular feasible choice is a vertex
  std::vector<bool> chosen(static_cast<std::size_t>(rows.rows()), false);
  std::fill(chosen.begin(), chosen.begin() + m, true);
  MatrixQ sub(m, m);
  VectorQ sub_rhs(m);
  do {
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < rows.rows(); ++i) {
      if (!chosen[i]) continue;
      sub.row(r) = rows.row(i);
      sub_rhs[r] = rhs[i];
      ++r;
    }
    const auto y = exact_solve(sub, sub_rhs);
    if (!y) continue;
    const VectorQ slack = rhs - rows * *y;
    if (std::any_of(slack.begin(), slack.end(), [](const Rational & s) { return s < 0; })) continue;
    VectorQ x(n);
    x.head(n - 1) = *y;
    x[n - 1] = -y->sum();
    out.insert(std::move(x));
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  return out;
}

}  // namespace pdroot
