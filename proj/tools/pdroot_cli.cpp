// pdroot: command-line access to pipe dreams, Grothendieck polynomials, the
// subdivision algebra and root polytopes. Exit codes: 0 ok, 1 failed check, 2 bad input.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pdroot/checks.hpp"
#include "pdroot/grothendieck.hpp"
#include "pdroot/json_io.hpp"
#include "pdroot/pd_complex.hpp"
#include "pdroot/polytopes.hpp"
#include "pdroot/realization.hpp"

using namespace pdroot;

namespace
{

struct Globals
{
  bool json = false;
  std::uint64_t seed = 0;
  int limit_n = kDefaultSearchLimit;
  std::string strategy = "lex";

  SearchOptions search() const { return {limit_n, false}; }
  Strategy parsed_strategy() const { return Strategy::parse(strategy, seed); }
};

class InputError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

void require_rank(int n, const Globals & g, int low = 2)
{
  if (n < low) throw InputError("n must be at least " + std::to_string(low));
  if (n > g.limit_n) {
    throw SearchLimitError("n = " + std::to_string(n) + " exceeds the search limit " + std::to_string(g.limit_n) +
                           " (raise it with --limit-n)");
  }
}

std::string box_string(const Box & b) { return "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")"; }

std::string boxes_string(const std::vector<Box> & boxes)
{
  std::string out;
  for (const auto & b : boxes) out += (out.empty() ? "" : " ") + box_string(b);
  return out.empty() ? "-" : out;
}

std::string point_string(const VectorQ & v)
{
  std::string out = "(";
  for (Eigen::Index k = 0; k < v.size(); ++k) out += (k ? "," : "") + v[k].str();
  return out + ")";
}

std::string triple_string(const Triple & t)
{
  return "(" + std::to_string(t.i) + "," + std::to_string(t.j) + "," + std::to_string(t.k) + ")";
}

std::string monomial_string(const EdgeMonomial & m)
{
  std::string out;
  if (m.coefficient != 1) out = m.coefficient.str();
  for (const auto & e : m.edges) out += (out.empty() ? "" : "*") + edge_variable(e, m.n);
  if (m.beta_power > 0) out += (out.empty() ? "" : "*") + std::string("b");
  if (m.beta_power > 1) out += "^" + std::to_string(m.beta_power);
  return out.empty() ? "1" : out;
}

std::string counts_string(const std::vector<BigInt> & c)
{
  std::string out;
  for (std::size_t k = 0; k < c.size(); ++k) out += (k ? "," : "") + c[k].str();
  return "(" + out + ")";
}

void add(RunReport & r, const std::string & name, const Verification & v) { r.check(name, v.ok, v.details); }

/// Runs `one` over a collection and records the first failure, or a count on success.
template <typename Range, typename Fn>
void add_all(RunReport & r, const std::string & name, const Range & items, Fn one)
{
  std::size_t count = 0;
  for (const auto & item : items) {
    const Verification v = one(item);
    if (!v) {
      r.check(name, false, v.details);
      return;
    }
    ++count;
  }
  r.check(name, true, std::to_string(count) + " cases");
}

void print_checks(const RunReport & r, std::ostream & out)
{
  for (const auto & c : r.checks) {
    out << (c.ok ? "PASS " : "FAIL ") << c.name;
    if (!c.details.empty()) out << ": " << c.details;
    out << "\n";
  }
}

// groth ---------------------------------------------------------------------

struct GrothArgs
{
  std::string w;
  bool beta_only = false;
  bool dbl = false;
  bool qt = false;
};

RunReport cmd_groth(const GrothArgs & a, const Globals & g, std::ostream & out)
{
  const auto w = Permutation::parse(a.w);
  RunReport r;
  r.command = "groth";
  r.inputs = {{"w", w.to_string()}};
  Polynomial p;
  std::string kind = "double-beta";
  if (a.beta_only) {
    p = groth_beta(w, g.search());
    kind = "beta";
  } else if (a.dbl) {
    p = double_grothendieck(w, g.search());
    kind = "double";
  } else if (a.qt) {
    p = specialize_qt(w, g.search());
    kind = "qt";
  } else {
    p = double_beta_grothendieck(w, g.search());
  }
  r.inputs["kind"] = kind;
  r.results = {{"text", p.to_string()}, {"polynomial", polynomial_json(p)}};
  if (!g.json) out << p.to_string() << "\n";
  return r;
}

// pipes ---------------------------------------------------------------------

RunReport cmd_pipes(const std::string & text, bool reduced, const Globals & g, std::ostream & out)
{
  const auto w = Permutation::parse(text);
  auto options = g.search();
  options.reduced_only = reduced;
  const auto pipes = enumerate_pipe_dreams(w, options);
  RunReport r;
  r.command = "pipes";
  r.inputs = {{"w", w.to_string()}, {"reduced", reduced}};
  Json list = Json::array();
  for (const auto & p : pipes) list.push_back(pipe_dream_json(p));
  const auto census = codim_census(w, g.search());
  r.results = {{"count", pipes.size()}, {"codim_census", coefficients_json(census)}, {"pipe_dreams", list}};
  if (!g.json) {
    for (const auto & p : pipes) out << p.size() << "  " << boxes_string(p.crosses()) << "\n";
    out << "total " << pipes.size() << ", by codimension " << counts_string(census) << "\n";
  }
  return r;
}

// pdc -----------------------------------------------------------------------

struct PdcArgs
{
  std::string w;
  bool h = false;
  bool f = false;
  bool interior = false;
};

RunReport cmd_pdc(const PdcArgs & a, const Globals & g, std::ostream & out)
{
  const auto w = Permutation::parse(a.w);
  const auto pdc = build_pdc(w, g.search());
  const auto fv = f_vector(pdc.complex);
  const auto h = h_polynomial(pdc.complex);
  const auto interior = interior_faces(pdc);
  const auto from_interior = h_from_interior(pdc);

  RunReport r;
  r.command = "pdc";
  r.inputs = {{"w", w.to_string()}};
  Json faces = Json::array();
  for (const auto & face : interior) {
    faces.push_back({{"face", face.face}, {"codim", face.codim}, {"pipe_dream", pipe_dream_json(face.pipe_dream)}});
  }
  r.results = {{"complex", pdc_json(pdc)},
               {"f_vector", fv.f},
               {"h_vector", coefficients_json(h.univariate_coefficients())},
               {"h_polynomial", h.to_string(true)},
               {"interior_faces", faces},
               {"h_from_interior", from_interior.to_string()}};
  if (g.json) return r;

  const bool all = !a.h && !a.f && !a.interior;
  if (a.h && !a.f && !a.interior) {
    out << h.to_string(true) << "\n";
    return r;
  }
  if (all) {
    out << "vertices";
    for (const auto & b : pdc.vertices) out << " " << box_string(b);
    out << "\nfacets\n";
    for (const auto & facet : pdc.complex.facets()) out << "  " << boxes_string(pdc.boxes(facet)) << "\n";
  }
  if (all || a.f) {
    out << "f-vector (";
    for (std::size_t k = 0; k < fv.f.size(); ++k) out << (k ? "," : "") << fv.f[k];
    out << ")\n";
  }
  if (all || a.h) out << "h-polynomial " << h.to_string(true) << "\n";
  if (all || a.interior) {
    out << "interior faces " << interior.size() << "\n";
    for (const auto & face : interior) {
      out << "  codim " << face.codim << "  elbows " << boxes_string(pdc.boxes(face.face)) << "\n";
    }
    out << "h(PD(w), b + 1) " << from_interior.to_string() << "\n";
  }
  return r;
}

// verify --------------------------------------------------------------------

struct VerifyArgs
{
  std::string suite;
  int n = 4;
  std::string w;
};

constexpr int kVerifyGraphs = 10;
constexpr int kVerifyStrategies = 20;
constexpr int kVerifySamples = 200;
constexpr int kVerifyPairs = 50;

RunReport cmd_verify(const VerifyArgs & a, const Globals & g, std::ostream & out)
{
  RunReport r;
  r.command = "verify";
  r.seed = g.seed;
  std::vector<Permutation> perms;
  int n = a.n;
  if (!a.w.empty()) {
    perms.push_back(Permutation::parse(a.w));
    n = perms.front().n();
    r.inputs = {{"suite", a.suite}, {"w", perms.front().to_string()}};
  } else {
    require_rank(n, g);
    perms = Permutation::all(n);
    r.inputs = {{"suite", a.suite}, {"n", n}};
  }
  require_rank(n, g, 1);
  const auto graph_max = std::max(2, std::min(n, 6));
  auto wants = [&](const std::string & s) { return a.suite == "all" || a.suite == s; };

  if (wants("groth-h")) {
    const auto options = g.search();
    add_all(r, "groth-h", perms, [&](const Permutation & w) {
      auto v = verify_groth_h(w, options);
      if (!v) v.details = w.to_string() + ": " + v.details;
      return v;
    });
    add_all(r, "interior-h", perms, verify_interior_h);
    add_all(r, "nonnegativity", perms, verify_nonnegativity);
  }
  if (wants("kirillov")) add(r, "kirillov", verify_kirillov(n));
  if (wants("strategies")) {
    auto graphs = sample_acyclic_graphs(kVerifyGraphs, graph_max, g.seed);
    if (n >= 2) graphs.insert(graphs.begin(), Graph::path(n));
    add_all(r, "strategies", graphs,
            [&](const Graph & gr) { return verify_strategy_invariance(gr, kVerifyStrategies, g.seed); });
    add_all(r, "census", graphs, [&](const Graph & gr) { return verify_census(gr, Strategy::random(g.seed)); });
    if (n >= 4) add(r, "strategy-dependence", verify_strategy_dependence(Graph::path(n), kVerifyStrategies, g.seed));
  }
  if (wants("projection")) {
    const auto graphs = sample_acyclic_graphs(kVerifyGraphs, graph_max, g.seed);
    add_all(r, "projection", graphs, verify_projection);
    add_all(r, "projection-step", graphs,
            [&](const Graph & gr) { return verify_projection_step(gr, g.parsed_strategy()); });
  }
  if (wants("bijection")) {
    add(r, "bijection", verify_bijection(n));
    add(r, "face-map", verify_face_map(n));
  }
  if (wants("triangulation")) {
    add(r, "unimodular", verify_unimodular(n));
    add(r, "point-location", verify_point_location(n, kVerifySamples, g.seed));
    add(r, "intersections", verify_intersections(n, kVerifyPairs, g.seed));
    add(r, "triangulation-h", verify_triangulation_h(n));
  }
  if (wants("realize")) {
    if (n >= 3) {
      add(r, "realize", verify_realization(n));
    } else {
      r.check("realize", true, "skipped for n = 2");
    }
  }
  if (wants("narayana")) add(r, "narayana", narayana_check(n));

  if (!g.json) print_checks(r, out);
  return r;
}

// reduce --------------------------------------------------------------------

void print_tree(const ReductionNode & node, const std::string & label, int depth, std::ostream & out)
{
  out << std::string(static_cast<std::size_t>(2 * depth), ' ') << label << monomial_string(node.monomial);
  if (node.pair) out << "  at " << triple_string(*node.pair);
  out << "\n";
  static const char * names[] = {"G1 ", "G2 ", "G3 "};
  for (std::size_t k = 0; k < node.children.size(); ++k) print_tree(*node.children[k], names[k], depth + 1, out);
}

Json tree_json(const ReductionNode & node)
{
  Json j = {{"edges", graph_json(node.monomial.graph())["edges"]}, {"beta_power", node.monomial.beta_power}};
  if (node.pair) j["pair"] = {node.pair->i, node.pair->j, node.pair->k};
  if (!node.children.empty()) {
    j["G1"] = tree_json(*node.children[0]);
    j["G2"] = tree_json(*node.children[1]);
    j["G3"] = tree_json(*node.children[2]);
  }
  return j;
}

RunReport cmd_reduce(const std::string & edges, bool tree, const Globals & g, std::ostream & out)
{
  const auto graph = Graph::parse(edges);
  const auto strategy = g.parsed_strategy();
  const auto m = EdgeMonomial::of(graph);
  const auto form = reduced_form(m, strategy);
  const auto poly = form.to_polynomial();
  RunReport r;
  r.command = "reduce";
  r.seed = g.seed;
  r.inputs = {{"graph", graph_json(graph)}, {"strategy", strategy.name()}};
  r.results = {{"reduced_form", reduced_form_json(form)},
               {"text", poly.to_string()},
               {"terms", poly.size()},
               {"Q", form.specialize().to_string()}};
  const auto root = tree ? reduction_tree(m, strategy) : nullptr;
  if (root) r.results["tree"] = tree_json(*root);
  if (!g.json) {
    out << poly.to_string() << "\n";
    out << "terms " << poly.size() << "\n";
    out << "Q(b) " << form.specialize().to_string() << "\n";
    if (root) print_tree(*root, "", 0, out);
  }
  return r;
}

// dissect -------------------------------------------------------------------

RunReport cmd_dissect(const std::string & edges, const Globals & g, std::ostream & out)
{
  const auto graph = Graph::parse(edges);
  const auto strategy = g.parsed_strategy();
  const auto d = dissect(graph, strategy);
  RunReport r;
  r.command = "dissect";
  r.seed = g.seed;
  r.inputs = {{"graph", graph_json(graph)}, {"strategy", strategy.name()}};
  Json leaves = Json::array();
  for (const auto * leaf : d.leaves()) {
    leaves.push_back({{"graph", graph_json(leaf->graph)},
                      {"edges_lost", leaf->edges_lost},
                      {"vertices", points_json(root_polytope_vertices(leaf->graph))}});
  }
  const auto census = d.census();
  r.results = {{"leaves", leaves}, {"census", census}};
  const auto q = q_polynomial(graph, strategy).univariate_coefficients();
  r.check("census matches Q_G", std::vector<BigInt>(census.begin(), census.end()) == q, counts_string(q));
  if (!g.json) {
    for (const auto * leaf : d.leaves()) out << leaf->edges_lost << "  " << leaf->graph.to_string() << "\n";
    out << "census (";
    for (std::size_t k = 0; k < census.size(); ++k) out << (k ? "," : "") << census[k];
    out << ")\n";
    print_checks(r, out);
  }
  return r;
}

// trees / triangulate ---------------------------------------------------------

RunReport cmd_trees(int n, const Globals & g, std::ostream & out)
{
  require_rank(n, g);
  const auto trees = noncrossing_alternating_trees(n);
  RunReport r;
  r.command = "trees";
  r.inputs = {{"n", n}};
  Json list = Json::array();
  for (const auto & t : trees) list.push_back(graph_json(t));
  r.results = {{"count", trees.size()}, {"trees", list}};
  if (!g.json) {
    for (const auto & t : trees) out << t.to_string() << "\n";
  }
  return r;
}

RunReport cmd_triangulate(int n, bool vertex_figure, const Globals & g, std::ostream & out)
{
  require_rank(n, g);
  const auto simplices = vertex_figure ? vertex_figure_simplices(n) : canonical_triangulation(n);
  RunReport r;
  r.command = "triangulate";
  r.inputs = {{"n", n}, {"vertex_figure", vertex_figure}};
  Json list = Json::array();
  for (const auto & s : simplices) {
    auto j = simplex_json(s);
    if (!vertex_figure) j["determinant"] = rational_json(generator_determinant(s));
    list.push_back(j);
  }
  r.results = {{"simplices", list}};
  if (!vertex_figure) add(r, "unimodular", verify_unimodular(n));
  if (!g.json) {
    for (const auto & s : simplices) {
      out << s.tree.to_string() << " :";
      for (const auto & v : s.vertices) out << " " << point_string(v);
      if (!vertex_figure) out << "  det " << generator_determinant(s).str();
      out << "\n";
    }
    print_checks(r, out);
  }
  return r;
}

// realize -------------------------------------------------------------------

// Integer pixel coordinate offset + scale * q, rounded toward zero.
long pixel(const Rational & q, long scale, long offset)
{
  const Rational v = q * scale;
  return offset + static_cast<long>(BigInt(numerator(v) / denominator(v)));
}

// V(P_4) lies in a plane on which (x_1, -x_4) are affine coordinates.
std::string realization_svg(const RealizationMap & map)
{
  constexpr long scale = 320;
  auto px = [&](const VectorQ & v) { return pixel(v[0], scale, 60); };
  auto py = [&](const VectorQ & v) { return pixel(v[3], scale, 400); };
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"460\" font-family=\"monospace\" "
         "font-size=\"12\">\n";
  svg << "<text x=\"20\" y=\"24\">V(P_4) triangulated; vertices labelled by staircase boxes</text>\n";
  for (const auto & [p, s] : map.facet_map) {
    svg << "<polygon fill=\"#dde8f4\" stroke=\"#1f3b57\" stroke-width=\"1.5\" points=\"";
    long cx = 0;
    long cy = 0;
    for (std::size_t k = 0; k < s.vertices.size(); ++k) {
      svg << (k ? " " : "") << px(s.vertices[k]) << "," << py(s.vertices[k]);
      cx += px(s.vertices[k]);
      cy += py(s.vertices[k]);
    }
    const auto m = static_cast<long>(s.vertices.size());
    svg << "\"/>\n<text x=\"" << cx / m - 18 << "\" y=\"" << cy / m + 4 << "\" fill=\"#555\">" << s.tree.to_string()
        << "</text>\n";
  }
  for (const auto & [box, v] : map.vertex_map) {
    const auto e = edge_of_box(box, map.n);
    svg << "<circle cx=\"" << px(v) << "\" cy=\"" << py(v) << "\" r=\"4\" fill=\"#b03a2e\"/>\n";
    svg << "<text x=\"" << px(v) + 8 << "\" y=\"" << py(v) - 8 << "\">" << box_string(box) << " e" << e.i << "-e"
        << e.j << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

RunReport cmd_realize(int n, const std::string & svg_path, const Globals & g, std::ostream & out)
{
  require_rank(n, g, 3);
  if (!svg_path.empty() && n != 4) throw InputError("--emit-svg draws the planar case n = 4 only");
  RunReport r;
  r.command = "realize";
  r.inputs = {{"n", n}};
  RealizationMap map;
  try {
    map = realize(n);
    r.check("realize", true, std::to_string(map.facet_map.size()) + " facets, faces and boundary correspond");
  } catch (const std::logic_error & e) {
    r.check("realize", false, e.what());
  }
  Json vertices = Json::array();
  for (const auto & [box, v] : map.vertex_map) vertices.push_back({{"box", {box.row, box.col}}, {"point", point_json(v)}});
  Json facets = Json::array();
  for (const auto & [p, s] : map.facet_map) {
    facets.push_back({{"pipe_dream", pipe_dream_json(p)}, {"simplex", simplex_json(s)}});
  }
  r.results = {{"vertex_map", vertices}, {"facet_map", facets}};
  if (!svg_path.empty() && r.ok()) {
    std::ofstream file(svg_path);
    if (!file) throw InputError("cannot write " + svg_path);
    file << realization_svg(map);
    r.results["svg"] = svg_path;
  }
  if (!g.json) {
    for (const auto & [box, v] : map.vertex_map) out << box_string(box) << " -> " << point_string(v) << "\n";
    for (const auto & [p, s] : map.facet_map) {
      out << "crosses " << boxes_string(p.crosses()) << " -> " << s.tree.to_string() << "\n";
    }
    print_checks(r, out);
  }
  return r;
}

}  // namespace

int main(int argc, char ** argv)
{
  CLI::App app{"Pipe dreams, Grothendieck polynomials, the subdivision algebra and root polytopes"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Emit a machine-readable JSON report");
  app.add_option("--seed", g.seed, "Seed for sampled checks and the random strategy");
  app.add_option("--limit-n", g.limit_n, "Largest rank allowed for exhaustive search")->check(CLI::Range(1, kMaxMaskRank));
  app.add_option("--strategy", g.strategy, "lex | rlex | random | script:<triples>");

  std::function<RunReport()> run;
  std::ostringstream out;

  GrothArgs groth;
  auto * groth_cmd = app.add_subcommand("groth", "Grothendieck polynomial of a permutation");
  groth_cmd->add_option("w", groth.w, "Permutation, e.g. 1432")->required();
  auto * beta_flag = groth_cmd->add_flag("--beta-only", groth.beta_only, "x = 1, y = 0 specialization in b");
  auto * double_flag = groth_cmd->add_flag("--double", groth.dbl, "b = -1 double Grothendieck polynomial");
  auto * qt_flag = groth_cmd->add_flag("--qt", groth.qt, "x = q, y = t specialization");
  beta_flag->excludes(double_flag)->excludes(qt_flag);
  double_flag->excludes(qt_flag);
  groth_cmd->callback([&] { run = [&] { return cmd_groth(groth, g, out); }; });

  std::string pipes_w;
  bool pipes_reduced = false;
  auto * pipes_cmd = app.add_subcommand("pipes", "Enumerate the pipe dreams of a permutation");
  pipes_cmd->add_option("w", pipes_w, "Permutation")->required();
  pipes_cmd->add_flag("--reduced", pipes_reduced, "Reduced pipe dreams only");
  pipes_cmd->callback([&] { run = [&] { return cmd_pipes(pipes_w, pipes_reduced, g, out); }; });

  PdcArgs pdc;
  auto * pdc_cmd = app.add_subcommand("pdc", "Pipe dream complex PD(w)");
  pdc_cmd->add_option("w", pdc.w, "Permutation")->required();
  pdc_cmd->set_help_flag("--help", "Print this help message and exit");
  pdc_cmd->add_flag("--h", pdc.h, "h-polynomial only");
  pdc_cmd->add_flag("--f", pdc.f, "f-vector");
  pdc_cmd->add_flag("--interior", pdc.interior, "Interior faces and h(PD(w), b + 1)");
  pdc_cmd->callback([&] { run = [&] { return cmd_pdc(pdc, g, out); }; });

  VerifyArgs verify;
  auto * verify_cmd = app.add_subcommand("verify", "Run exact verification suites");
  verify_cmd
    ->add_option("suite", verify.suite, "groth-h | kirillov | bijection | realize | narayana | strategies | "
                                        "projection | triangulation | all")
    ->required()
    ->check(CLI::IsMember({"groth-h", "kirillov", "bijection", "realize", "narayana", "strategies", "projection",
                           "triangulation", "all"}));
  verify_cmd->add_option("--n", verify.n, "Rank")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--w", verify.w, "Single permutation for groth-h");
  verify_cmd->callback([&] { run = [&] { return cmd_verify(verify, g, out); }; });

  std::string reduce_edges;
  bool reduce_tree = false;
  auto * reduce_cmd = app.add_subcommand("reduce", "Reduced form of an edge monomial");
  reduce_cmd->add_option("edges", reduce_edges, "Edges, e.g. 12,23,34")->required();
  reduce_cmd->add_flag("--tree", reduce_tree, "Print the reduction tree");
  reduce_cmd->callback([&] { run = [&] { return cmd_reduce(reduce_edges, reduce_tree, g, out); }; });

  std::string dissect_edges;
  auto * dissect_cmd = app.add_subcommand("dissect", "Dissect the root polytope of an acyclic graph");
  dissect_cmd->add_option("edges", dissect_edges, "Edges, e.g. 12,23,34")->required();
  dissect_cmd->callback([&] { run = [&] { return cmd_dissect(dissect_edges, g, out); }; });

  int trees_n = 4;
  auto * trees_cmd = app.add_subcommand("trees", "Noncrossing alternating spanning trees of K_n");
  trees_cmd->add_option("--n", trees_n, "Number of vertices");
  trees_cmd->callback([&] { run = [&] { return cmd_trees(trees_n, g, out); }; });

  int tri_n = 4;
  bool tri_vertex_figure = false;
  auto * tri_cmd = app.add_subcommand("triangulate", "Canonical triangulation of P(P_n)");
  tri_cmd->add_option("--n", tri_n, "Number of vertices");
  tri_cmd->add_flag("--vertex-figure", tri_vertex_figure, "Triangulation of the vertex figure V(P_n)");
  tri_cmd->callback([&] { run = [&] { return cmd_triangulate(tri_n, tri_vertex_figure, g, out); }; });

  int realize_n = 4;
  std::string svg_path;
  auto * realize_cmd = app.add_subcommand("realize", "Realize PD(1 n ... 2) as the triangulated V(P_n)");
  realize_cmd->add_option("--n", realize_n, "Rank");
  realize_cmd->add_option("--emit-svg", svg_path, "Write the n = 4 picture to this path");
  realize_cmd->callback([&] { run = [&] { return cmd_realize(realize_n, svg_path, g, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError & e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const auto report = run();
    if (g.json) {
      std::cout << report_json(report).dump(2) << "\n";
    } else {
      std::cout << out.str();
    }
    return report.ok() ? 0 : 1;
  } catch (const std::invalid_argument & e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const SearchLimitError & e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const InputError & e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
