// Acceptance run: one [PASS]/[FAIL] line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pdroot/checks.hpp"
#include "pdroot/complex.hpp"
#include "pdroot/grothendieck.hpp"
#include "pdroot/pd_complex.hpp"
#include "pdroot/pipe_dream.hpp"
#include "pdroot/polytopes.hpp"
#include "pdroot/realization.hpp"
#include "pdroot/subdivision.hpp"

using namespace pdroot;

namespace
{

constexpr std::uint64_t kSeed = 20240601;
constexpr int kGraphs = 50;
constexpr int kStrategies = 20;
constexpr int kSamples = 1000;

struct Criterion
{
  std::string id;
  std::string title;
  double limit_seconds;
  std::function<Verification()> run;
};

/// Runs checks in order and stops at the first failure.
Verification all_of(const std::vector<std::function<Verification()>> & checks, const std::string & summary)
{
  for (const auto & c : checks) {
    if (auto v = c(); !v) return v;
  }
  return Verification::pass(summary);
}

Verification census_1432()
{
  const auto w = Permutation::parse("1432");
  std::map<std::size_t, int> by_size;
  for (const auto & p : enumerate_pipe_dreams(w)) ++by_size[p.size()];
  const auto brute = oracle::all_pipe_dreams(4)[{1, 4, 3, 2}];
  std::map<std::size_t, int> oracle_size;
  for (const auto & s : brute) ++oracle_size[s.size()];
  const std::map<std::size_t, int> expected{{3, 5}, {4, 5}, {5, 1}};
  if (by_size != expected) return Verification::fail("census differs from 5/5/1");
  if (oracle_size != expected) return Verification::fail("brute force differs from 5/5/1");
  return Verification::pass("3 crosses: 5, 4 crosses: 5, 5 crosses: 1");
}

Verification worked_example()
{
  const auto form = reduced_form(EdgeMonomial::of(Graph::path(4)), worked_example_strategy());
  const auto p = form.to_polynomial();
  const auto vars = p.vars();
  auto x = [&](const char * name) { return Polynomial::variable(vars, name); };
  const auto b = x("b");
  const auto expected = x("x13") * x("x14") * x("x12") + x("x13") * x("x24") * x("x14") + b * x("x13") * x("x14") +
                        x("x24") * x("x23") * x("x13") + b * x("x24") * x("x13") + x("x34") * x("x14") * x("x12") +
                        x("x34") * x("x24") * x("x14") + b * x("x34") * x("x14") + b * x("x14") * x("x12") +
                        b * x("x24") * x("x14") + b * b * x("x14");
  if (p != expected) return Verification::fail("reduced form " + p.to_string());
  if (p.size() != 11) return Verification::fail(std::to_string(p.size()) + " terms");
  const auto q = form.specialize().to_string();
  if (q != "b^2 + 5*b + 5") return Verification::fail("specialization " + q);
  return Verification::pass("11 terms, Q = " + q);
}

Verification kirillov()
{
  std::string last;
  for (int n = 2; n <= 7; ++n) {
    auto v = verify_kirillov(n);
    if (!v) return Verification::fail("n = " + std::to_string(n) + ": " + v.details);
    last = v.details;
  }
  return Verification::pass("n = 2..7; n = 7: " + last);
}

Verification groth_h()
{
  int count = 0;
  for (int n : {4, 5}) {
    for (const auto & w : Permutation::all(n)) {
      if (auto v = verify_groth_h(w); !v) return Verification::fail(w.to_string() + ": " + v.details);
      ++count;
    }
  }
  return Verification::pass(std::to_string(count) + " permutations");
}

Verification interior_h()
{
  int count = 0;
  for (const auto & w : Permutation::all(4)) {
    if (auto v = verify_interior_h(w); !v) return v;
    const auto pdc = build_pdc(w);
    const auto f = oracle::f_vector(static_cast<int>(pdc.vertices.size()), pdc.complex.facets());
    const auto h = oracle::h_vector(f);
    auto got = h_polynomial(pdc.complex).univariate_coefficients();
    got.resize(h.size(), 0);
    if (got != h) return Verification::fail(w.to_string() + ": h differs from the brute-force oracle");
    ++count;
  }
  return Verification::pass(std::to_string(count) + " permutations");
}

Verification strategy_invariance()
{
  const auto graphs = sample_acyclic_graphs(kGraphs, 6, kSeed);
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    if (auto v = verify_strategy_invariance(graphs[k], kStrategies, kSeed + 1000 * k); !v) return v;
  }
  return Verification::pass(std::to_string(graphs.size()) + " graphs x (lex, rlex, " + std::to_string(kStrategies) +
                            " random)");
}

Verification catalan_narayana()
{
  for (int n = 2; n <= 8; ++n) {
    const auto pi = Permutation::dominant_path(n);
    SearchOptions reduced;
    reduced.reduced_only = true;
    const auto pipes = enumerate_pipe_dreams(pi, reduced).size();
    const auto trees = noncrossing_alternating_trees(n).size();
    const auto c = oracle::catalan(n - 1);
    if (BigInt(pipes) != c || BigInt(trees) != c) {
      return Verification::fail("n = " + std::to_string(n) + ": " + std::to_string(pipes) + " pipe dreams, " +
                                std::to_string(trees) + " trees, Catalan " + c.str());
    }
    if (auto v = verify_bijection(n); !v) return v;
  }
  for (int n = 2; n <= 7; ++n) {
    auto h = h_polynomial(build_pdc(Permutation::dominant_path(n)).complex).univariate_coefficients();
    std::vector<BigInt> row;
    for (int k = 1; k <= n - 1; ++k) row.push_back(oracle::narayana(n - 1, k));
    h.resize(row.size(), 0);
    if (h != row) return Verification::fail("n = " + std::to_string(n) + ": h differs from the Narayana row");
  }
  return Verification::pass("Catalan for n <= 8, Narayana for n <= 7");
}

Verification root_flow()
{
  const auto graphs = sample_acyclic_graphs(kGraphs, 6, kSeed + 1);
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    if (auto v = verify_projection(graphs[k]); !v) return v;
    if (auto v = verify_projection_step(graphs[k], Strategy::random(kSeed + k)); !v) return v;
  }
  return Verification::pass(std::to_string(graphs.size()) + " graphs");
}

Verification canonical_triangulation_checks()
{
  std::vector<std::function<Verification()>> checks;
  for (int n = 2; n <= 6; ++n) checks.push_back([n] { return verify_unimodular(n); });
  for (int n = 3; n <= 6; ++n) {
    checks.push_back([n] { return verify_point_location(n, kSamples, kSeed + n); });
    checks.push_back([n] { return verify_intersections(n, 0, kSeed); });
  }
  return all_of(checks, "unimodular n <= 6, " + std::to_string(kSamples) +
                            " samples and all pairwise intersections for n = 3..6");
}

Verification realization()
{
  std::vector<std::function<Verification()>> checks;
  for (int n = 3; n <= 6; ++n) {
    checks.push_back([n] { return verify_realization(n); });
    checks.push_back([n] { return verify_face_map(n); });
  }
  return all_of(checks, "n = 3..6");
}

Verification nonnegativity()
{
  for (const auto & w : Permutation::all(5)) {
    if (auto v = verify_nonnegativity(w); !v) return v;
  }
  return Verification::pass("120 permutations");
}

}  // namespace

int main()
{
  const std::vector<Criterion> criteria{
      {"C1", "pipe-dream census of 1432", 1.0, census_1432},
      {"C2", "worked reduction of x12 x23 x34", 1.0, worked_example},
      {"C3", "Q_{P_n} equals the beta-Grothendieck of 1 n ... 2, n = 2..7", 300.0, kirillov},
      {"C4", "Grothendieck specialization equals h(PD(w)) on S_4 and S_5", 600.0, groth_h},
      {"C5", "interior-face formula equals f-to-h on S_4", 60.0, interior_h},
      {"C6", "strategy invariance of Q_G", 300.0, strategy_invariance},
      {"C7", "Catalan and Narayana counts", 120.0, catalan_narayana},
      {"C8", "flow vertices project to root polytope vertices", 120.0, root_flow},
      {"C9", "canonical triangulation of P(P_n)", 300.0, canonical_triangulation_checks},
      {"C10", "realization of PD(1 n ... 2) as V(P_n)", 300.0, realization},
      {"C11", "nonnegativity on S_5", 60.0, nonnegativity},
  };

  int failures = 0;
  for (const auto & c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verification v;
    try {
      v = c.run();
    } catch (const std::exception & e) {
      v = Verification::fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.limit_seconds;
    const bool ok = v.ok && in_time;
    failures += !ok;
    std::printf("[%s] %s %s (%.2f s, limit %.0f s): %s%s\n", ok ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(),
                seconds, c.limit_seconds, v.details.c_str(), in_time ? "" : " [time limit exceeded]");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures ? 1 : 0;
}
