#pragma once

#include <map>
#include <string>
#include <vector>

#include "pdroot/types.hpp"

namespace pdroot
{

using Exponents = std::vector<int>;

/// Sparse multivariate polynomial with arbitrary-precision integer coefficients
/// over an explicitly declared, ordered variable list. Zero coefficients are never stored.
class Polynomial
{
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> vars);

  static Polynomial constant(std::vector<std::string> vars, const BigInt & c);
  static Polynomial variable(std::vector<std::string> vars, const std::string & name);
  /// Univariate polynomial sum_i coeffs[i] * var^i.
  static Polynomial from_coefficients(const std::string & var, const std::vector<BigInt> & coeffs);

  const std::vector<std::string> & vars() const { return vars_; }
  const std::map<Exponents, BigInt> & terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  int var_index(const std::string & name) const;

  BigInt coefficient(const Exponents & e) const;
  /// Adds c * monomial(e).
  void add_term(const Exponents & e, const BigInt & c);

  Polynomial & operator+=(const Polynomial & rhs);
  Polynomial & operator-=(const Polynomial & rhs);
  Polynomial & operator*=(const Polynomial & rhs);
  Polynomial & operator*=(const BigInt & c);
  friend Polynomial operator+(Polynomial lhs, const Polynomial & rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial & rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Polynomial & rhs) { return lhs *= rhs; }
  friend Polynomial operator*(Polynomial lhs, const BigInt & c) { return lhs *= c; }
  Polynomial operator-() const;
  Polynomial pow(int k) const;

  /// Replaces each variable named in `images` by its image; images and the result
  /// live over `target_vars`. Variables without an image must appear in `target_vars`.
  Polynomial substitute(const std::map<std::string, Polynomial> & images,
                        const std::vector<std::string> & target_vars) const;
  /// Same polynomial over a different variable list (must contain every variable used).
  Polynomial with_vars(const std::vector<std::string> & target_vars) const;

  int degree_in(const std::string & name) const;
  /// Coefficients c_0..c_d of a polynomial in a single variable.
  std::vector<BigInt> univariate_coefficients() const;
  /// True iff every term has the same weighted degree sum_i weights[i] * e_i.
  bool is_homogeneous(const std::vector<int> & weights, int * degree = nullptr) const;

  /// Highest total degree first; ascending=true reverses ("1 + 3*x + x^2").
  std::string to_string(bool ascending = false) const;

  friend bool operator==(const Polynomial &, const Polynomial &) = default;

private:
  void require_same_vars(const Polynomial & rhs) const;

  std::vector<std::string> vars_;
  std::map<Exponents, BigInt> terms_;
};

/// Human-readable "lhs - rhs = ..." explanation, empty when equal.
std::string polynomial_diff(const Polynomial & lhs, const Polynomial & rhs);

/// Variable lists used throughout: x1..x{n-1}, y1..y{n-1}, b.
std::vector<std::string> xy_beta_vars(int n);

}  // namespace pdroot
