#pragma once

// JSON forms of the library's values. Integers and rationals that may exceed 64 bits
// are written as decimal strings ("-1/2").

#include <string>
#include <vector>

#include <json.hpp>

#include "pdroot/complex.hpp"
#include "pdroot/graph.hpp"
#include "pdroot/pd_complex.hpp"
#include "pdroot/permutation.hpp"
#include "pdroot/pipe_dream.hpp"
#include "pdroot/polynomial.hpp"
#include "pdroot/polytopes.hpp"
#include "pdroot/subdivision.hpp"
#include "pdroot/types.hpp"

namespace pdroot
{

using Json = nlohmann::ordered_json;

Json rational_json(const Rational & q);
Rational rational_from_json(const Json & j);
Json point_json(const VectorQ & v);
VectorQ point_from_json(const Json & j);
Json points_json(const PointSet & points);
PointSet points_from_json(const Json & j);

/// {"vars": [...], "terms": [{"exp": [...], "coef": "..."}]}
Json polynomial_json(const Polynomial & p);
Polynomial polynomial_from_json(const Json & j);

Json permutation_json(const Permutation & w);
Permutation permutation_from_json(const Json & j);

/// {"n": 4, "crosses": [[1,2],[1,3],[2,2]]}
Json pipe_dream_json(const PipeDream & p);
PipeDream pipe_dream_from_json(const Json & j);

/// {"vertex_count": k, "facets": [[...]]}
Json complex_json(const SimplicialComplex & c);
SimplicialComplex complex_from_json(const Json & j);

/// {"w": "1432", "vertices": [[r,c],...], "facets": [[indices],...]}
Json pdc_json(const PipeDreamComplex & pdc);
PipeDreamComplex pdc_from_json(const Json & j);

/// {"n": 4, "edges": [[1,2],[2,3]]}
Json graph_json(const Graph & g);
Graph graph_from_json(const Json & j);

/// {"tree": graph, "vertices": [[rational strings]]}
Json simplex_json(const Simplex & s);
Simplex simplex_from_json(const Json & j);

/// {"n": n, "terms": [{"edges": [[i,j]], "beta_power": k, "coef": "..."}]}
Json reduced_form_json(const ReducedForm & r);
ReducedForm reduced_form_from_json(const Json & j);

Json coefficients_json(const std::vector<BigInt> & c);

struct Check
{
  std::string name;
  bool ok = false;
  std::string details;
  friend bool operator==(const Check &, const Check &) = default;
};

/// Uniform result envelope of a CLI command.
struct RunReport
{
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::vector<Check> checks;
  std::uint64_t seed = 0;

  void check(std::string name, bool ok, std::string details = {});
  bool ok() const;
  friend bool operator==(const RunReport &, const RunReport &) = default;
};

Json report_json(const RunReport & r);
RunReport report_from_json(const Json & j);

}  // namespace pdroot
