#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pdroot/graph.hpp"
#include "pdroot/polynomial.hpp"
#include "pdroot/verification.hpp"

namespace pdroot
{

/// A reducible configuration x_ij * x_jk with i < j < k.
struct Triple
{
  int i = 1;
  int j = 2;
  int k = 3;

  friend bool operator==(const Triple &, const Triple &) = default;
  friend auto operator<=>(const Triple &, const Triple &) = default;
};

/// coefficient * b^beta_power * prod x_e over a multiset of edges on [n].
struct EdgeMonomial
{
  int n = 0;
  std::vector<Edge> edges;  // sorted multiset
  int beta_power = 0;
  BigInt coefficient = 1;

  static EdgeMonomial of(const Graph & g);
  Graph graph() const { return Graph(n, edges); }

  /// |edges| * (n - 1) - sum (b - a); strictly drops under every rewriting step.
  std::int64_t potential() const;
};

/// How to pick the reducible pair in a monomial.
struct Strategy
{
  enum class Kind
  {
    lex,
    rlex,
    random,
    script
  };

  Kind kind = Kind::lex;
  std::uint64_t seed = 0;
  /// For Kind::script: first applicable triple wins, lex-first otherwise.
  std::vector<Triple> script;

  static Strategy lex() { return {Kind::lex, 0, {}}; }
  static Strategy rlex() { return {Kind::rlex, 0, {}}; }
  static Strategy random(std::uint64_t seed) { return {Kind::random, seed, {}}; }
  static Strategy scripted(std::vector<Triple> script) { return {Kind::script, 0, std::move(script)}; }
  /// "lex", "rlex", "random" (uses `seed`), or "script:234,123,124".
  static Strategy parse(const std::string & text, std::uint64_t seed = 0);
  std::string name() const;
};

/// The replay of x12 x23 x34 -> ... with the pairs (2,3,4), (1,2,3), (1,2,4).
Strategy worked_example_strategy();

/// All triples (i, j, k) with (i, j) and (j, k) present, in lexicographic order.
std::vector<Triple> reducible_triples(const std::vector<Edge> & edges);
/// The strategy's choice, or nullopt iff the monomial is alternating. The random
/// strategy is a pure function of (seed, edges).
std::optional<Triple> reducible_pair(const EdgeMonomial & m, const Strategy & strategy);

/// x_ij x_jk -> x_ik x_ij + x_ik x_jk + b x_ik, one output per term.
/// Throws std::invalid_argument if the pair is absent.
std::array<EdgeMonomial, 3> reduce_once(const EdgeMonomial & m, const Triple & t);

/// Terminal polynomial with like terms merged; every monomial is alternating.
class ReducedForm
{
public:
  using Key = std::pair<std::vector<Edge>, int>;  // (edges, beta power)

  explicit ReducedForm(int n = 0) : n_(n) {}

  int n() const { return n_; }
  const std::map<Key, BigInt> & terms() const { return terms_; }
  void add(const EdgeMonomial & m);

  /// Over the variables x_ij (1 <= i < j <= n, lexicographic) and b.
  Polynomial to_polynomial() const;
  /// x_ij -> 1, over {b}.
  Polynomial specialize() const;

  friend bool operator==(const ReducedForm &, const ReducedForm &) = default;

private:
  int n_;
  std::map<Key, BigInt> terms_;
};

/// x12-style variable names for n <= 9, x1_10-style beyond.
std::string edge_variable(const Edge & e, int n);
std::vector<std::string> edge_vars(int n);

ReducedForm reduced_form(const EdgeMonomial & m, const Strategy & strategy);

/// Unmerged rewriting tree; children follow the three terms of reduce_once.
struct ReductionNode
{
  EdgeMonomial monomial;
  std::optional<Triple> pair;
  std::vector<std::unique_ptr<ReductionNode>> children;
};

std::unique_ptr<ReductionNode> reduction_tree(const EdgeMonomial & m, const Strategy & strategy);

/// Q_G(b): reduced form of prod_{e in G} x_e with every x_e -> 1.
Polynomial q_polynomial(const Graph & g, const Strategy & strategy = Strategy::lex());

/// Q_{P_n}(b) == groth_beta(1 n n-1 ... 2).
Verification verify_kirillov(int n);

}  // namespace pdroot
