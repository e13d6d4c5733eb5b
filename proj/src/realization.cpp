#include "pdroot/realization.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "pdroot/linalg.hpp"

namespace pdroot
{

Edge edge_of_box(const Box & box, int n) { return {box.col, n - box.row + 1}; }

Box box_of_edge(const Edge & edge, int n) { return {n - edge.j + 1, edge.i}; }

Graph tree_of_pipedream(const PipeDream & p)
{
  const int n = p.n();
  if (!is_reduced_for(p, Permutation::dominant_path(n))) {
    throw std::invalid_argument("not a reduced pipe dream for 1 n n-1 ... 2");
  }
  std::vector<Edge> edges;
  for (const auto & b : p.elbows()) edges.push_back(edge_of_box(b, n));
  return Graph(n, std::move(edges));
}

namespace
{

std::string edges_string(const std::vector<Edge> & edges, int n) { return Graph(n, edges).to_string(); }

std::vector<Edge> box_edges(const std::vector<Box> & boxes, int n)
{
  std::vector<Edge> out;
  for (const auto & b : boxes) out.push_back(edge_of_box(b, n));
  std::sort(out.begin(), out.end());
  return out;
}

BigInt binomial(int m, int k)
{
  if (k < 0 || k > m) return 0;
  BigInt c = 1;
  for (int i = 1; i <= k; ++i) c = c * (m - k + i) / i;
  return c;
}

std::string face_string(const std::vector<Box> & boxes)
{
  std::string out = "{";
  for (std::size_t k = 0; k < boxes.size(); ++k) {
    if (k > 0) out += ",";
    out += "(" + std::to_string(boxes[k].row) + "," + std::to_string(boxes[k].col) + ")";
  }
  return out + "}";
}

// Vertices of the vertex-figure triangulation, indexed in PointLess order.
struct IndexedPoints
{
  std::vector<VectorQ> points;

  int index(const VectorQ & p) const
  {
    auto it = std::lower_bound(points.begin(), points.end(), p, PointLess{});
    if (it == points.end() || PointLess{}(p, *it)) return -1;
    return static_cast<int>(it - points.begin());
  }
};

}  // namespace

BigInt catalan(int m) { return binomial(2 * m, m) / (m + 1); }

BigInt narayana(int m, int k) { return binomial(m, k) * binomial(m, k - 1) / m; }

Verification verify_bijection(int n)
{
  const auto pi = Permutation::dominant_path(n);
  SearchOptions options;
  options.reduced_only = true;
  options.limit_n = std::max(n, kDefaultSearchLimit);
  const auto reduced = enumerate_pipe_dreams(pi, options);

  std::set<Graph> images;
  for (const auto & p : reduced) {
    if (!images.insert(tree_of_pipedream(p)).second) {
      return Verification::fail("two pipe dreams share the tree " + tree_of_pipedream(p).to_string());
    }
  }
  const auto trees = noncrossing_alternating_trees(n);
  const std::set<Graph> tree_set(trees.begin(), trees.end());
  std::string report;
  for (const auto & g : images) {
    if (!tree_set.count(g)) report += " extra:" + g.to_string();
  }
  for (const auto & g : tree_set) {
    if (!images.count(g)) report += " missing:" + g.to_string();
  }
  if (!report.empty()) return Verification::fail("image differs from the trees:" + report);
  const BigInt expected = catalan(n - 1);
  if (BigInt(reduced.size()) != expected || BigInt(trees.size()) != expected) {
    return Verification::fail("counts " + std::to_string(reduced.size()) + "/" +
                              std::to_string(trees.size()) + " differ from Catalan " + expected.str());
  }
  return Verification::pass(std::to_string(reduced.size()) + " = " + std::to_string(trees.size()));
}

Verification verify_face_map(int n)
{
  const auto pi = Permutation::dominant_path(n);
  const auto pdc = build_pdc(pi);

  std::vector<std::vector<Edge>> tree_edges;
  for (const auto & facet : pdc.complex.facets()) tree_edges.push_back(box_edges(pdc.boxes(facet), n));

  // nonempty intersections of tree edge sets, closed under intersection
  std::set<std::vector<Edge>> intersections(tree_edges.begin(), tree_edges.end());
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::vector<Edge>> fresh;
    for (const auto & a : intersections) {
      for (const auto & t : tree_edges) {
        std::vector<Edge> common;
        std::set_intersection(a.begin(), a.end(), t.begin(), t.end(), std::back_inserter(common));
        if (!common.empty() && !intersections.count(common)) fresh.push_back(std::move(common));
      }
    }
    for (auto & f : fresh) grew |= intersections.insert(std::move(f)).second;
  }

  std::set<std::vector<Edge>> images;
  for (const auto & face : interior_faces(pdc)) {
    const auto edges = box_edges(pdc.boxes(face.face), n);
    std::vector<Edge> common;
    bool first = true;
    for (std::size_t f = 0; f < pdc.complex.facets().size(); ++f) {
      const auto & facet = pdc.complex.facets()[f];
      if (!std::includes(facet.begin(), facet.end(), face.face.begin(), face.face.end())) continue;
      if (first) {
        common = tree_edges[f];
        first = false;
      } else {
        std::vector<Edge> next;
        std::set_intersection(common.begin(), common.end(), tree_edges[f].begin(),
                              tree_edges[f].end(), std::back_inserter(next));
        common = std::move(next);
      }
    }
    if (common != edges) {
      return Verification::fail("interior face " + face_string(pdc.boxes(face.face)) + " has edges " +
                                edges_string(edges, n) + " but its trees share " +
                                edges_string(common, n));
    }
    images.insert(edges);
  }
  if (images != intersections) {
    return Verification::fail(std::to_string(images.size()) + " interior faces vs " +
                              std::to_string(intersections.size()) + " tree intersections");
  }
  return Verification::pass(std::to_string(images.size()) + " interior faces");
}

SimplicialComplex canonical_triangulation_complex(int n)
{
  // vertex 0 is the origin, then the roots in lexicographic (i, j) order
  auto index_of = [n](const Edge & e) {
    int index = 1;
    for (int a = 1; a < e.i; ++a) index += n - a;
    return index + e.j - e.i - 1;
  };
  std::vector<Face> facets;
  for (const auto & t : noncrossing_alternating_trees(n)) {
    Face f{0};
    for (const auto & e : t.edges()) f.push_back(index_of(e));
    facets.push_back(std::move(f));
  }
  return SimplicialComplex(1 + n * (n - 1) / 2, std::move(facets));
}

RealizationMap realize(int n)
{
  if (n < 3) throw std::invalid_argument("realization needs n >= 3");
  const auto pi = Permutation::dominant_path(n);
  const auto pdc = build_pdc(pi);

  RealizationMap map;
  map.n = n;
  for (const auto & b : staircase(n)) {
    const auto e = edge_of_box(b, n);
    map.vertex_map.emplace(b, root(e.i, e.j, n) / Rational(e.j - e.i));
  }

  IndexedPoints targets;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) targets.points.push_back(root(i, j, n) / Rational(j - i));
  }
  std::sort(targets.points.begin(), targets.points.end(), PointLess{});
  {
    std::set<int> hit;
    for (const auto & [box, point] : map.vertex_map) {
      const int k = targets.index(point);
      if (k < 0) throw std::logic_error("box " + face_string({box}) + " maps off the vertex figure");
      if (vertex_figure_level(point) != 1) throw std::logic_error("box " + face_string({box}) + " is off level 1");
      if (!hit.insert(k).second) throw std::logic_error("vertex map is not injective at " + face_string({box}));
    }
    if (hit.size() != targets.points.size()) throw std::logic_error("vertex map is not onto");
  }

  auto image = [&](const std::vector<Box> & boxes) {
    Face f;
    for (const auto & b : boxes) f.push_back(targets.index(map.vertex_map.at(b)));
    std::sort(f.begin(), f.end());
    return f;
  };

  // (a) facets
  const auto simplices = vertex_figure_simplices(n);
  std::set<Face> triangulation_facets;
  for (const auto & s : simplices) {
    Face f;
    for (const auto & v : s.vertices) f.push_back(targets.index(v));
    std::sort(f.begin(), f.end());
    triangulation_facets.insert(f);
  }
  std::set<Face> facet_images;
  for (const auto & facet : pdc.complex.facets()) {
    const auto boxes = pdc.boxes(facet);
    const auto f = image(boxes);
    if (!triangulation_facets.count(f)) {
      throw std::logic_error("facet " + face_string(boxes) + " is not a vertex-figure simplex");
    }
    facet_images.insert(f);
    const auto p = pdc.complement(facet);
    const auto tree = tree_of_pipedream(p);
    auto it = std::find_if(simplices.begin(), simplices.end(), [&](const Simplex & s) { return s.tree == tree; });
    map.facet_map.emplace_back(p, *it);
  }
  if (facet_images != triangulation_facets) throw std::logic_error("facet images miss a vertex-figure simplex");

  // (b) faces
  const SimplicialComplex triangulation(static_cast<int>(targets.points.size()),
                                        {triangulation_facets.begin(), triangulation_facets.end()});
  const auto pd_faces = pdc.complex.faces();
  const auto tri_faces = triangulation.faces();
  std::set<Face> face_images;
  for (const auto & face : pd_faces) {
    const auto f = image(pdc.boxes(face));
    if (!triangulation.has_face(f)) {
      throw std::logic_error("face " + face_string(pdc.boxes(face)) + " does not span a triangulation face");
    }
    face_images.insert(f);
  }
  if (face_images.size() != tri_faces.size()) throw std::logic_error("triangulation has faces outside the image");

  // (c) boundary: a ridge is on the boundary of the vertex figure iff the hyperplane
  // through 0 and the ridge (inside sum x = 0) supports every root.
  std::set<Face> geometric_ridges;
  for (const auto & facet : triangulation.facets()) {
    for (std::size_t drop = 0; drop < facet.size(); ++drop) {
      Face ridge = facet;
      ridge.erase(ridge.begin() + static_cast<std::ptrdiff_t>(drop));
      MatrixQ rows(static_cast<Eigen::Index>(ridge.size()) + 1, n);
      for (std::size_t k = 0; k < ridge.size(); ++k) rows.row(static_cast<Eigen::Index>(k)) = targets.points[ridge[k]].transpose();
      rows.row(rows.rows() - 1).setConstant(Rational(1));
      const auto normal = exact_kernel(rows);
      if (normal.cols() != 1) throw std::logic_error("ridge " + std::to_string(drop) + " is degenerate");
      bool nonneg = true;
      bool nonpos = true;
      for (const auto & point : targets.points) {
        const Rational side = normal.col(0).dot(point);
        nonneg = nonneg && side >= 0;
        nonpos = nonpos && side <= 0;
      }
      if (nonneg || nonpos) geometric_ridges.insert(ridge);
    }
  }
  std::set<Face> geometric_boundary;
  for (const auto & ridge : geometric_ridges) {
    const auto m = face_mask(ridge);
    for (std::uint64_t sub = m;; sub = (sub - 1) & m) {
      geometric_boundary.insert(mask_face(sub));
      if (sub == 0) break;
    }
  }
  std::set<Face> boundary_images;
  for (const auto & face : boundary_faces(pdc.complex)) {
    const auto f = image(pdc.boxes(face));
    if (!geometric_boundary.count(f)) {
      throw std::logic_error("boundary face " + face_string(pdc.boxes(face)) + " maps into the interior");
    }
    boundary_images.insert(f);
  }
  if (boundary_images != geometric_boundary) throw std::logic_error("geometric boundary has faces outside the image");
  return map;
}

Verification verify_realization(int n)
{
  try {
    const auto map = realize(n);
    return Verification::pass(std::to_string(map.vertex_map.size()) + " vertices, " +
                              std::to_string(map.facet_map.size()) + " facets");
  } catch (const std::logic_error & e) {
    return Verification::fail(e.what());
  }
}

Verification narayana_check(int n)
{
  const auto pdc = build_pdc(Permutation::dominant_path(n));
  auto h = h_polynomial(pdc.complex).univariate_coefficients();
  std::vector<BigInt> expected;
  for (int k = 1; k <= n - 1; ++k) expected.push_back(narayana(n - 1, k));
  h.resize(std::max(h.size(), expected.size()));
  expected.resize(h.size());
  if (h != expected) {
    std::string got;
    std::string want;
    for (std::size_t k = 0; k < h.size(); ++k) {
      got += (k ? "," : "") + h[k].str();
      want += (k ? "," : "") + expected[k].str();
    }
    return Verification::fail("h = (" + got + "), Narayana = (" + want + ")");
  }
  std::string row;
  for (int k = 0; k < n - 1; ++k) row += (k ? "," : "") + h[k].str();
  return Verification::pass("(" + row + ")");
}

}  // namespace pdroot
