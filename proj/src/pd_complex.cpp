#include "pdroot/pd_complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace pdroot
{

std::vector<Box> PipeDreamComplex::boxes(const Face & face) const
{
  std::vector<Box> out;
  for (int v : face) out.push_back(vertices.at(v));
  return out;
}

Face PipeDreamComplex::face_of(const std::vector<Box> & elbow_boxes) const
{
  Face face;
  for (const auto & b : elbow_boxes) {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), b);
    if (it == vertices.end() || *it != b) throw std::invalid_argument("box is not a vertex of PD(w)");
    face.push_back(static_cast<int>(it - vertices.begin()));
  }
  std::sort(face.begin(), face.end());
  return face;
}

PipeDream PipeDreamComplex::complement(const Face & face) const
{
  const auto elbows = boxes(face);
  std::vector<Box> crosses;
  for (const auto & b : staircase(w.n())) {
    if (std::find(elbows.begin(), elbows.end(), b) == elbows.end()) crosses.push_back(b);
  }
  return PipeDream(w.n(), std::move(crosses));
}

PipeDreamComplex build_pdc(const Permutation & w, const SearchOptions & options)
{
  auto reduced_options = options;
  reduced_options.reduced_only = true;
  const auto reduced = enumerate_pipe_dreams(w, reduced_options);

  PipeDreamComplex pdc{w, {}, {}};
  for (const auto & p : reduced) {
    for (const auto & b : p.elbows()) pdc.vertices.push_back(b);
  }
  std::sort(pdc.vertices.begin(), pdc.vertices.end());
  pdc.vertices.erase(std::unique(pdc.vertices.begin(), pdc.vertices.end()), pdc.vertices.end());

  std::vector<Face> facets;
  for (const auto & p : reduced) facets.push_back(pdc.face_of(p.elbows()));
  pdc.complex = SimplicialComplex(static_cast<int>(pdc.vertices.size()), std::move(facets));
  return pdc;
}

std::vector<InteriorFace> interior_faces(const PipeDreamComplex & pdc)
{
  const int d = pdc.complex.d();
  std::vector<InteriorFace> out;
  for (const auto & face : pdc.complex.faces()) {
    auto p = pdc.complement(face);
    if (permutation_of(p) != pdc.w) continue;
    // (d - 1) - dim(face)
    const int codim = d - static_cast<int>(face.size());
    out.push_back({face, codim, std::move(p)});
  }
  return out;
}

Polynomial h_from_interior(const PipeDreamComplex & pdc)
{
  std::vector<BigInt> counts;
  for (const auto & f : interior_faces(pdc)) {
    if (static_cast<int>(counts.size()) <= f.codim) counts.resize(f.codim + 1);
    counts[f.codim] += 1;
  }
  return Polynomial::from_coefficients("b", counts);
}

}  // namespace pdroot
