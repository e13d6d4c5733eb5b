#pragma once

#include "pdroot/pd_complex.hpp"
#include "pdroot/polynomial.hpp"
#include "pdroot/verification.hpp"

namespace pdroot
{

/// sum over Pipes(w) of b^codim * prod_{(i,j) cross} (x_i - y_j), over xy_beta_vars(n).
Polynomial double_beta_grothendieck(const Permutation & w, const SearchOptions & options = {});

/// The b = -1 specialization, over x1..x{n-1}, y1..y{n-1}.
Polynomial double_grothendieck(const Permutation & w, const SearchOptions & options = {});

/// (q - t)^l(w) * sum_P [b (q - t)]^codim, over {q, t, b}.
Polynomial specialize_qt(const Permutation & w, const SearchOptions & options = {});

/// sum_P b^codim, i.e. the x = 1, y = 0 specialization, over {b}.
Polynomial groth_beta(const Permutation & w, const SearchOptions & options = {});

/// Substitutes b -> b - 1, x_i -> q, y_j -> q - 1 symbolically and checks that the
/// result is free of q and equals h(PD(w), b).
Verification verify_groth_h(const Permutation & w, const SearchOptions & options = {});

/// Number of pipe dreams of w by codimension (index = codim).
std::vector<BigInt> codim_census(const Permutation & w, const SearchOptions & options = {});

}  // namespace pdroot
