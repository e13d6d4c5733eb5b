#include "pdroot/grothendieck.hpp"

#include <string>

namespace pdroot
{

std::vector<BigInt> codim_census(const Permutation & w, const SearchOptions & options)
{
  const int length = w.length();
  std::vector<BigInt> counts;
  for (const auto & p : enumerate_pipe_dreams(w, options)) {
    const int codim = static_cast<int>(p.size()) - length;
    if (static_cast<int>(counts.size()) <= codim) counts.resize(codim + 1);
    counts[codim] += 1;
  }
  return counts;
}

Polynomial double_beta_grothendieck(const Permutation & w, const SearchOptions & options)
{
  const auto vars = xy_beta_vars(w.n());
  const auto beta = Polynomial::variable(vars, "b");
  const int length = w.length();
  Polynomial sum(vars);
  for (const auto & p : enumerate_pipe_dreams(w, options)) {
    sum += beta.pow(static_cast<int>(p.size()) - length) * weight(p);
  }
  return sum;
}

Polynomial double_grothendieck(const Permutation & w, const SearchOptions & options)
{
  auto xy = xy_beta_vars(w.n());
  xy.pop_back();
  return double_beta_grothendieck(w, options).substitute({{"b", Polynomial::constant(xy, -1)}}, xy);
}

Polynomial specialize_qt(const Permutation & w, const SearchOptions & options)
{
  const std::vector<std::string> vars{"q", "t", "b"};
  const auto q_minus_t = Polynomial::variable(vars, "q") - Polynomial::variable(vars, "t");
  const auto step = Polynomial::variable(vars, "b") * q_minus_t;
  const auto census = codim_census(w, options);

  Polynomial inner(vars);
  auto power = Polynomial::constant(vars, 1);
  for (const auto & count : census) {
    inner += power * count;
    power *= step;
  }
  return q_minus_t.pow(w.length()) * inner;
}

Polynomial groth_beta(const Permutation & w, const SearchOptions & options)
{
  return Polynomial::from_coefficients("b", codim_census(w, options));
}

Verification verify_groth_h(const Permutation & w, const SearchOptions & options)
{
  const std::vector<std::string> qb{"q", "b"};
  const auto q = Polynomial::variable(qb, "q");
  const auto one = Polynomial::constant(qb, 1);

  std::map<std::string, Polynomial> images{{"b", Polynomial::variable(qb, "b") - one}};
  for (int i = 1; i < w.n(); ++i) {
    images.emplace("x" + std::to_string(i), q);
    images.emplace("y" + std::to_string(i), q - one);
  }
  const auto lhs = double_beta_grothendieck(w, options).substitute(images, qb);
  if (lhs.degree_in("q") != 0) {
    return Verification::fail("specialization still depends on q: " + lhs.to_string());
  }
  const auto lhs_b = lhs.with_vars({"b"});

  const auto h = h_polynomial(build_pdc(w, options).complex);
  const auto rhs = h.substitute({{"x", Polynomial::variable({"b"}, "b")}}, {"b"});

  if (lhs_b != rhs) return Verification::fail(polynomial_diff(lhs_b, rhs));
  return Verification::pass(rhs.to_string(true));
}

}  // namespace pdroot
