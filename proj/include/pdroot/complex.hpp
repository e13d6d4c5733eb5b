#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "pdroot/polynomial.hpp"

namespace pdroot
{

/// Sorted vertex indices.
using Face = std::vector<int>;

/// Abstract simplicial complex on vertices 0..vertex_count-1, given by its facets.
/// Faces are handled as 64-bit masks internally, so at most 64 vertices.
class SimplicialComplex
{
public:
  SimplicialComplex() = default;
  /// Throws std::invalid_argument if a facet contains another, a vertex is in no
  /// facet, or an index is out of range.
  SimplicialComplex(int vertex_count, std::vector<Face> facets);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Face> & facets() const { return facets_; }
  /// Largest facet size; the complex has dimension d - 1.
  int d() const;
  bool is_pure() const;

  /// Every face including the empty one, ordered by size then lexicographically.
  std::vector<Face> faces() const;
  bool has_face(const Face & face) const;

private:
  int vertex_count_ = 0;
  std::vector<Face> facets_;
};

std::uint64_t face_mask(const Face & face);
Face mask_face(std::uint64_t mask);

/// f[k] counts faces of dimension k - 1, so f[0] = 1 for the empty face.
struct FaceVector
{
  std::vector<std::int64_t> f;
  int d = 0;

  friend bool operator==(const FaceVector &, const FaceVector &) = default;
};

FaceVector f_vector(const SimplicialComplex & c);
/// h_0..h_d from sum_i f_{i-1} (x-1)^{d-i} = sum_i h_i x^{d-i}.
std::vector<BigInt> h_vector(const FaceVector & f);
/// sum_i h_i x^i in the variable "x". Throws std::logic_error if the complex is not pure.
Polynomial h_polynomial(const SimplicialComplex & c);

/// Faces of the subcomplex generated by the ridges that lie in exactly one facet.
std::set<Face> boundary_faces(const SimplicialComplex & c);

}  // namespace pdroot
