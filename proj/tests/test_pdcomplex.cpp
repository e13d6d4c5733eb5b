#include <doctest.h>

#include "oracles.hpp"
#include "pdroot/pd_complex.hpp"

using namespace pdroot;

namespace
{

std::vector<std::int64_t> f_of(const SimplicialComplex & c) { return f_vector(c).f; }

Polynomial shift_to_x(const Polynomial & p)
{
  const std::vector<std::string> x{"x"};
  return p.substitute({{"b", Polynomial::variable(x, "x") - Polynomial::constant(x, 1)}}, x);
}

}  // namespace

TEST_SUITE("pdcomplex")
{
  TEST_CASE("PD(1432) is a triangulated pentagon")
  {
    const auto pdc = build_pdc(Permutation::parse("1432"));
    CHECK(pdc.vertices.size() == 6);
    CHECK(pdc.complex.facets().size() == 5);
    for (const auto & f : pdc.complex.facets()) CHECK(f.size() == 3);
    CHECK(f_of(pdc.complex) == std::vector<std::int64_t>{1, 6, 10, 5});
    CHECK(h_polynomial(pdc.complex).to_string(true) == "1 + 3*x + x^2");
    CHECK(h_from_interior(pdc).to_string() == "b^2 + 5*b + 5");

    const auto interior = interior_faces(pdc);
    CHECK(interior.size() == 11);
    std::map<int, int> by_codim;
    for (const auto & f : interior) ++by_codim[f.codim];
    CHECK(by_codim == std::map<int, int>{{0, 5}, {1, 5}, {2, 1}});
  }

  TEST_CASE("degenerate and trivial complexes")
  {
    const auto sphere = build_pdc(Permutation::parse("21"));
    CHECK(sphere.complex.facets() == std::vector<Face>{Face{}});
    CHECK(interior_faces(sphere).size() == 1);
    CHECK(interior_faces(sphere).front().face.empty());
    CHECK(h_from_interior(sphere).to_string() == "1");

    const auto simplex = build_pdc(Permutation::identity(3));
    CHECK(simplex.complex.facets() == std::vector<Face>{Face{0, 1, 2}});
    CHECK(f_of(simplex.complex) == std::vector<std::int64_t>{1, 3, 3, 1});
    CHECK(h_polynomial(simplex.complex).to_string() == "1");

    CHECK(f_of(SimplicialComplex(2, {{0, 1}})) == std::vector<std::int64_t>{1, 2, 1});
  }

  TEST_CASE("PD(15432)")
  {
    const auto pdc = build_pdc(Permutation::parse("15432"));
    CHECK(h_polynomial(pdc.complex).to_string(true) == "1 + 6*x + 6*x^2 + x^3");
    CHECK(shift_to_x(h_from_interior(pdc)) == h_polynomial(pdc.complex));
  }

  TEST_CASE("complex validation")
  {
    CHECK_THROWS_AS(SimplicialComplex(3, {{0, 1}, {0, 1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(SimplicialComplex(3, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(SimplicialComplex(2, {{0, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(h_polynomial(SimplicialComplex(3, {{0, 1}, {2}})), std::logic_error);
  }

  TEST_CASE("f and h vectors match brute force on S_4 and S_5")
  {
    for (int n = 4; n <= 5; ++n) {
      for (const auto & w : Permutation::all(n)) {
        const auto pdc = build_pdc(w);
        const auto f = oracle::f_vector(pdc.complex.vertex_count(), pdc.complex.facets());
        CHECK_MESSAGE(f_of(pdc.complex) == f, w.to_string());
        auto h = h_polynomial(pdc.complex).univariate_coefficients();
        auto expected = oracle::h_vector(f);
        while (expected.size() > 1 && expected.back() == 0) expected.pop_back();
        CHECK_MESSAGE(h == expected, w.to_string());
        for (const auto & c : h) CHECK(c >= 0);
      }
    }
  }

  TEST_CASE("interior-face formula equals the f-to-h transform (rank <= 5)")
  {
    for (int n = 1; n <= 5; ++n) {
      for (const auto & w : Permutation::all(n)) {
        const auto pdc = build_pdc(w);
        CHECK_MESSAGE(shift_to_x(h_from_interior(pdc)) == h_polynomial(pdc.complex), w.to_string());
      }
    }
  }

  TEST_CASE("crosses = length + codim for every pipe dream (rank <= 5)")
  {
    for (int n = 2; n <= 5; ++n) {
      for (const auto & w : Permutation::all(n)) {
        const auto pdc = build_pdc(w);
        const auto interior = interior_faces(pdc);
        CHECK(interior.size() == enumerate_pipe_dreams(w).size());
        for (const auto & f : interior) {
          CHECK(static_cast<int>(f.pipe_dream.size()) == w.length() + f.codim);
        }
      }
    }
  }

  TEST_CASE("facets biject with reduced pipe dreams")
  {
    SearchOptions reduced;
    reduced.reduced_only = true;
    for (const auto & w : Permutation::all(4)) {
      const auto pdc = build_pdc(w);
      const auto pipes = enumerate_pipe_dreams(w, reduced);
      CHECK(pdc.complex.facets().size() == pipes.size());
      for (const auto & facet : pdc.complex.facets()) {
        CHECK(std::find(pipes.begin(), pipes.end(), pdc.complement(facet)) != pipes.end());
      }
      const auto f = f_vector(pdc.complex).f;
      CHECK(f.back() == static_cast<std::int64_t>(pipes.size()));
      CHECK(pdc.complex.is_pure());
    }
  }

  TEST_CASE("boundary and interior faces partition PD(w), w in S_4")
  {
    for (const auto & w : Permutation::all(4)) {
      if (w == Permutation::longest(4)) continue;
      const auto pdc = build_pdc(w);
      const auto & facets = pdc.complex.facets();
      // ridges in exactly one facet, then their subfaces
      std::map<Face, int> ridge_count;
      for (const auto & f : facets) {
        for (std::size_t k = 0; k < f.size(); ++k) {
          Face r = f;
          r.erase(r.begin() + static_cast<std::ptrdiff_t>(k));
          ++ridge_count[r];
        }
      }
      std::set<Face> boundary;
      for (const auto & [r, count] : ridge_count) {
        if (count != 1) continue;
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << r.size()); ++s) {
          Face sub;
          for (std::size_t k = 0; k < r.size(); ++k) {
            if (s >> k & 1) sub.push_back(r[k]);
          }
          boundary.insert(sub);
        }
      }
      CHECK(boundary == boundary_faces(pdc.complex));
      std::set<Face> interior;
      for (const auto & f : interior_faces(pdc)) interior.insert(f.face);
      for (const auto & f : interior) CHECK_FALSE(boundary.count(f));
      CHECK(interior.size() + boundary.size() == pdc.complex.faces().size());
    }
  }
}
