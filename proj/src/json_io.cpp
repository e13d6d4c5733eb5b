#include "pdroot/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace pdroot
{

namespace
{

Json box_json(const Box & b) { return Json::array({b.row, b.col}); }

Box box_from_json(const Json & j) { return {j.at(0).get<int>(), j.at(1).get<int>()}; }

Json edge_json(const Edge & e) { return Json::array({e.i, e.j}); }

Edge edge_from_json(const Json & j) { return {j.at(0).get<int>(), j.at(1).get<int>()}; }

std::vector<Edge> edges_from_json(const Json & j)
{
  std::vector<Edge> out;
  for (const auto & e : j) out.push_back(edge_from_json(e));
  return out;
}

}  // namespace

Json rational_json(const Rational & q) { return q.str(); }

Rational rational_from_json(const Json & j) { return Rational(j.get<std::string>()); }

Json point_json(const VectorQ & v)
{
  Json out = Json::array();
  for (const auto & c : v) out.push_back(rational_json(c));
  return out;
}

VectorQ point_from_json(const Json & j)
{
  VectorQ v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k) v[static_cast<Eigen::Index>(k)] = rational_from_json(j[k]);
  return v;
}

Json points_json(const PointSet & points)
{
  Json out = Json::array();
  for (const auto & p : points) out.push_back(point_json(p));
  return out;
}

PointSet points_from_json(const Json & j)
{
  PointSet out;
  for (const auto & p : j) out.insert(point_from_json(p));
  return out;
}

Json polynomial_json(const Polynomial & p)
{
  Json terms = Json::array();
  for (const auto & [e, c] : p.terms()) terms.push_back({{"exp", e}, {"coef", c.str()}});
  return {{"vars", p.vars()}, {"terms", terms}};
}

Polynomial polynomial_from_json(const Json & j)
{
  Polynomial p(j.at("vars").get<std::vector<std::string>>());
  for (const auto & t : j.at("terms")) {
    const auto e = t.at("exp").get<Exponents>();
    if (e.size() != p.vars().size()) throw std::invalid_argument("exponent length differs from variable count");
    p.add_term(e, BigInt(t.at("coef").get<std::string>()));
  }
  return p;
}

Json permutation_json(const Permutation & w) { return w.to_string(); }

Permutation permutation_from_json(const Json & j) { return Permutation::parse(j.get<std::string>()); }

Json pipe_dream_json(const PipeDream & p)
{
  Json crosses = Json::array();
  for (const auto & b : p.crosses()) crosses.push_back(box_json(b));
  return {{"n", p.n()}, {"crosses", crosses}};
}

PipeDream pipe_dream_from_json(const Json & j)
{
  std::vector<Box> crosses;
  for (const auto & b : j.at("crosses")) crosses.push_back(box_from_json(b));
  return PipeDream(j.at("n").get<int>(), std::move(crosses));
}

Json complex_json(const SimplicialComplex & c)
{
  return {{"vertex_count", c.vertex_count()}, {"facets", c.facets()}};
}

SimplicialComplex complex_from_json(const Json & j)
{
  return SimplicialComplex(j.at("vertex_count").get<int>(), j.at("facets").get<std::vector<Face>>());
}

Json pdc_json(const PipeDreamComplex & pdc)
{
  Json vertices = Json::array();
  for (const auto & b : pdc.vertices) vertices.push_back(box_json(b));
  return {{"w", permutation_json(pdc.w)}, {"vertices", vertices}, {"facets", pdc.complex.facets()}};
}

PipeDreamComplex pdc_from_json(const Json & j)
{
  PipeDreamComplex pdc;
  pdc.w = permutation_from_json(j.at("w"));
  for (const auto & b : j.at("vertices")) pdc.vertices.push_back(box_from_json(b));
  pdc.complex = SimplicialComplex(static_cast<int>(pdc.vertices.size()), j.at("facets").get<std::vector<Face>>());
  return pdc;
}

Json graph_json(const Graph & g)
{
  Json edges = Json::array();
  for (const auto & e : g.edges()) edges.push_back(edge_json(e));
  return {{"n", g.n()}, {"edges", edges}};
}

Graph graph_from_json(const Json & j) { return Graph(j.at("n").get<int>(), edges_from_json(j.at("edges"))); }

Json simplex_json(const Simplex & s)
{
  Json vertices = Json::array();
  for (const auto & v : s.vertices) vertices.push_back(point_json(v));
  return {{"tree", graph_json(s.tree)}, {"vertices", vertices}};
}

Simplex simplex_from_json(const Json & j)
{
  Simplex s{graph_from_json(j.at("tree")), {}};
  for (const auto & v : j.at("vertices")) s.vertices.push_back(point_from_json(v));
  return s;
}

Json reduced_form_json(const ReducedForm & r)
{
  Json terms = Json::array();
  for (const auto & [key, c] : r.terms()) {
    Json edges = Json::array();
    for (const auto & e : key.first) edges.push_back(edge_json(e));
    terms.push_back({{"edges", edges}, {"beta_power", key.second}, {"coef", c.str()}});
  }
  return {{"n", r.n()}, {"terms", terms}};
}

ReducedForm reduced_form_from_json(const Json & j)
{
  const int n = j.at("n").get<int>();
  ReducedForm r(n);
  for (const auto & t : j.at("terms")) {
    EdgeMonomial m{n, edges_from_json(t.at("edges")), t.at("beta_power").get<int>(),
                   BigInt(t.at("coef").get<std::string>())};
    std::sort(m.edges.begin(), m.edges.end());
    r.add(m);
  }
  return r;
}

Json coefficients_json(const std::vector<BigInt> & c)
{
  Json out = Json::array();
  for (const auto & v : c) out.push_back(v.str());
  return out;
}

void RunReport::check(std::string name, bool ok, std::string details)
{
  checks.push_back({std::move(name), ok, std::move(details)});
}

bool RunReport::ok() const
{
  return std::all_of(checks.begin(), checks.end(), [](const Check & c) { return c.ok; });
}

Json report_json(const RunReport & r)
{
  Json checks = Json::array();
  for (const auto & c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.ok}, {"details", c.details}});
  return {{"command", r.command}, {"seed", r.seed}, {"inputs", r.inputs}, {"results", r.results}, {"checks", checks}};
}

RunReport report_from_json(const Json & j)
{
  RunReport r;
  r.command = j.at("command").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.inputs = j.at("inputs");
  r.results = j.at("results");
  for (const auto & c : j.at("checks")) {
    r.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(), c.at("details").get<std::string>()});
  }
  return r;
}

}  // namespace pdroot
