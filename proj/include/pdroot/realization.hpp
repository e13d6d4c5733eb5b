#pragma once

#include <map>
#include <vector>

#include "pdroot/pd_complex.hpp"
#include "pdroot/polytopes.hpp"
#include "pdroot/verification.hpp"

namespace pdroot
{

/// Staircase box (r, c) <-> edge (c, n - r + 1) of K_n.
Edge edge_of_box(const Box & box, int n);
Box box_of_edge(const Edge & edge, int n);

/// G(P): the spanning tree formed by the edges of P's elbows.
/// Throws std::invalid_argument unless P is a reduced pipe dream for 1 n n-1 ... 2.
Graph tree_of_pipedream(const PipeDream & p);

/// G is injective on reduced pipe dreams of 1 n ... 2 with image the noncrossing
/// alternating trees, both of size Catalan(n - 1).
Verification verify_bijection(int n);

/// Interior faces of PD(1 n ... 2) map onto the nonempty intersections of tree
/// edge sets, and each face's edges are the common edges of the trees above it.
Verification verify_face_map(int n);

struct RealizationMap
{
  int n = 0;
  std::map<Box, VectorQ> vertex_map;
  std::vector<std::pair<PipeDream, Simplex>> facet_map;
};

/// Box (r, c) -> (e_c - e_{n-r+1}) / (n - r + 1 - c). Asserts that facet images are
/// the vertex-figure simplices, that faces correspond to faces and boundary to boundary.
/// Throws std::logic_error naming the offending face on failure; n must be >= 3.
RealizationMap realize(int n);
/// realize(n) with failures reported instead of thrown.
Verification verify_realization(int n);

/// Abstract complex with facets {0} + T over the vertices 0 and the roots e_i - e_j.
SimplicialComplex canonical_triangulation_complex(int n);

/// h-vector of PD(1 n ... 2) against the Narayana row N(n-1, 1..n-1).
Verification narayana_check(int n);

/// Catalan(m) = C(2m, m) / (m + 1).
BigInt catalan(int m);
/// N(m, k) = C(m, k) C(m, k-1) / m.
BigInt narayana(int m, int k);

}  // namespace pdroot
