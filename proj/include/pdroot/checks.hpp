#pragma once

// Seeded, exact checks that combine several modules. Shared by the CLI and the tests.

#include <cstdint>
#include <random>
#include <vector>

#include "pdroot/graph.hpp"
#include "pdroot/permutation.hpp"
#include "pdroot/subdivision.hpp"
#include "pdroot/verification.hpp"

namespace pdroot
{

/// A simple forest on [n] with at least one edge.
Graph random_acyclic_graph(int n, std::mt19937_64 & rng);
/// `count` forests with 3..max_n vertices (2 when max_n is 2), reproducible from `seed`.
std::vector<Graph> sample_acyclic_graphs(int count, int max_n, std::uint64_t seed);

/// Q_G agrees across lex, rlex and `strategies` random strategies seeded from `seed`.
Verification verify_strategy_invariance(const Graph & g, int strategies, std::uint64_t seed);
/// Some strategy gives an x-form different from lex, while all specialize to the same Q_G.
/// Candidates: rlex, the worked-example script, then `strategies` random seeds.
Verification verify_strategy_dependence(const Graph & g, int strategies, std::uint64_t seed);
/// Dissection leaves counted by lost edges match the coefficients of Q_G, same strategy.
Verification verify_census(const Graph & g, const Strategy & strategy);
/// f(p(flow vertices of the augmented graph)) equals the root polytope vertices.
Verification verify_projection(const Graph & g);
/// verify_projection for each of G1, G2, G3 of the strategy's first reduction.
Verification verify_projection_step(const Graph & g, const Strategy & strategy);

/// Every canonical simplex has generator determinant +-1.
Verification verify_unimodular(int n);
/// Random generic points of P(P_n) lie in exactly one canonical simplex, in its interior.
Verification verify_point_location(int n, int samples, std::uint64_t seed);
/// P(T_a) cap P(T_b) has the vertices of P(T_a cap T_b); all pairs when max_pairs == 0.
Verification verify_intersections(int n, int max_pairs, std::uint64_t seed);
/// h of the canonical triangulation complex equals h(PD(1 n ... 2)), and Q_{P_n}(b) = h(b + 1).
Verification verify_triangulation_h(int n);

/// h_from_interior with b -> x - 1 equals the f-to-h transform of PD(w).
Verification verify_interior_h(const Permutation & w);
/// Every coefficient of groth_beta(w) with b -> b - 1 is nonnegative.
Verification verify_nonnegativity(const Permutation & w);

}  // namespace pdroot
