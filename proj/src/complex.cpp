#include "pdroot/complex.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace pdroot
{

std::uint64_t face_mask(const Face & face)
{
  std::uint64_t m = 0;
  for (int v : face) {
    if (v < 0 || v >= 64) throw std::out_of_range("vertex index does not fit a face mask");
    m |= std::uint64_t{1} << v;
  }
  return m;
}

Face mask_face(std::uint64_t mask)
{
  Face face;
  while (mask != 0) {
    face.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return face;
}

namespace
{

bool face_order(const Face & a, const Face & b)
{
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::unordered_set<std::uint64_t> closure(const std::vector<Face> & facets)
{
  std::unordered_set<std::uint64_t> all;
  for (const auto & facet : facets) {
    const auto m = face_mask(facet);
    // walk every submask of m
    std::uint64_t sub = m;
    while (true) {
      if (!all.insert(sub).second && sub == m) break;
      if (sub == 0) break;
      sub = (sub - 1) & m;
    }
  }
  return all;
}

}  // namespace

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<Face> facets)
: vertex_count_(vertex_count), facets_(std::move(facets))
{
  if (vertex_count_ < 0 || vertex_count_ > 64) throw std::invalid_argument("vertex count out of range");
  std::vector<bool> used(vertex_count_, false);
  for (auto & f : facets_) {
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
      throw std::invalid_argument("facet repeats a vertex");
    }
    for (int v : f) {
      if (v < 0 || v >= vertex_count_) throw std::invalid_argument("facet vertex out of range");
      used[v] = true;
    }
  }
  std::sort(facets_.begin(), facets_.end(), face_order);
  facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    for (std::size_t j = 0; j < facets_.size(); ++j) {
      if (i != j && std::includes(facets_[j].begin(), facets_[j].end(), facets_[i].begin(),
                                  facets_[i].end())) {
        throw std::invalid_argument("facet contained in another facet");
      }
    }
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    throw std::invalid_argument("vertex lies in no facet");
  }
}

int SimplicialComplex::d() const
{
  std::size_t d = 0;
  for (const auto & f : facets_) d = std::max(d, f.size());
  return static_cast<int>(d);
}

bool SimplicialComplex::is_pure() const
{
  return std::all_of(facets_.begin(), facets_.end(), [&](const Face & f) {
    return static_cast<int>(f.size()) == d();
  });
}

std::vector<Face> SimplicialComplex::faces() const
{
  std::vector<Face> out;
  for (auto m : closure(facets_)) out.push_back(mask_face(m));
  std::sort(out.begin(), out.end(), face_order);
  return out;
}

bool SimplicialComplex::has_face(const Face & face) const
{
  const auto m = face_mask(face);
  return std::any_of(facets_.begin(), facets_.end(), [&](const Face & f) {
    return (face_mask(f) & m) == m;
  });
}

FaceVector f_vector(const SimplicialComplex & c)
{
  FaceVector fv;
  fv.d = c.d();
  fv.f.assign(fv.d + 1, 0);
  for (auto m : closure(c.facets())) ++fv.f[std::popcount(m)];
  return fv;
}

std::vector<BigInt> h_vector(const FaceVector & fv)
{
  const int d = fv.d;
  // coefficient of x^{d-i} in sum_k f_{k-1} (x-1)^{d-k}
  std::vector<BigInt> h(d + 1, 0);
  for (int k = 0; k <= d; ++k) {
    const int e = d - k;
    BigInt binom = 1;  // C(e, j)
    for (int j = 0; j <= e; ++j) {
      // term f_{k-1} * C(e, j) x^j (-1)^{e-j}
      const BigInt term = BigInt(fv.f[k]) * binom;
      h[d - j] += ((e - j) % 2 == 0) ? term : BigInt(-term);
      binom = binom * (e - j) / (j + 1);
    }
  }
  return h;
}

Polynomial h_polynomial(const SimplicialComplex & c)
{
  if (!c.is_pure()) throw std::logic_error("h-polynomial requested for a non-pure complex");
  return Polynomial::from_coefficients("x", h_vector(f_vector(c)));
}

std::set<Face> boundary_faces(const SimplicialComplex & c)
{
  std::map<std::uint64_t, int> ridge_count;
  for (const auto & f : c.facets()) {
    const auto m = face_mask(f);
    for (int v : f) ++ridge_count[m & ~(std::uint64_t{1} << v)];
  }
  std::vector<Face> generators;
  for (const auto & [m, count] : ridge_count) {
    if (count == 1) generators.push_back(mask_face(m));
  }
  std::set<Face> out;
  for (auto m : closure(generators)) out.insert(mask_face(m));
  return out;
}

}  // namespace pdroot
