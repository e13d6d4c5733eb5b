#pragma once

#include <vector>

#include "pdroot/complex.hpp"
#include "pdroot/pipe_dream.hpp"

namespace pdroot
{

/// PD(w): faces are elbow sets whose complementary cross set contains w.
/// Vertex i of `complex` is the box vertices[i].
struct PipeDreamComplex
{
  Permutation w;
  std::vector<Box> vertices;
  SimplicialComplex complex;

  std::vector<Box> boxes(const Face & face) const;
  /// Inverse of boxes(); throws std::invalid_argument for a box that is not a vertex.
  Face face_of(const std::vector<Box> & elbow_boxes) const;
  /// The pipe dream whose elbows are exactly `face`.
  PipeDream complement(const Face & face) const;
};

/// Facets are the elbow sets of the reduced pipe dreams of w.
PipeDreamComplex build_pdc(const Permutation & w, const SearchOptions & options = {});

struct InteriorFace
{
  Face face;
  int codim = 0;
  PipeDream pipe_dream;
};

/// Faces whose complementary crosses have Demazure product exactly w, i.e. the
/// pipe dreams of w. Codimension is taken in the complex: d - |face|.
std::vector<InteriorFace> interior_faces(const PipeDreamComplex & pdc);

/// h(PD(w), b + 1) = sum over interior faces of b^codim, in the variable "b".
Polynomial h_from_interior(const PipeDreamComplex & pdc);

}  // namespace pdroot
