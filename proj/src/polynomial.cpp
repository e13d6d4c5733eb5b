#include "pdroot/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pdroot
{

Polynomial::Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

Polynomial Polynomial::constant(std::vector<std::string> vars, const BigInt & c)
{
  Polynomial p(std::move(vars));
  p.add_term(Exponents(p.vars_.size(), 0), c);
  return p;
}

Polynomial Polynomial::variable(std::vector<std::string> vars, const std::string & name)
{
  Polynomial p(std::move(vars));
  Exponents e(p.vars_.size(), 0);
  e[p.var_index(name)] = 1;
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::from_coefficients(const std::string & var, const std::vector<BigInt> & coeffs)
{
  Polynomial p({var});
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term({static_cast<int>(i)}, coeffs[i]);
  return p;
}

int Polynomial::var_index(const std::string & name) const
{
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw std::invalid_argument("unknown variable '" + name + "'");
  return static_cast<int>(it - vars_.begin());
}

BigInt Polynomial::coefficient(const Exponents & e) const
{
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void Polynomial::add_term(const Exponents & e, const BigInt & c)
{
  if (e.size() != vars_.size()) throw std::invalid_argument("exponent vector size mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::require_same_vars(const Polynomial & rhs) const
{
  if (vars_ != rhs.vars_) throw std::invalid_argument("polynomials over different variable lists");
}

Polynomial & Polynomial::operator+=(const Polynomial & rhs)
{
  require_same_vars(rhs);
  for (const auto & [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial & Polynomial::operator-=(const Polynomial & rhs)
{
  require_same_vars(rhs);
  for (const auto & [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Polynomial & Polynomial::operator*=(const Polynomial & rhs)
{
  require_same_vars(rhs);
  Polynomial out(vars_);
  Exponents e(vars_.size());
  for (const auto & [ea, ca] : terms_) {
    for (const auto & [eb, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

Polynomial & Polynomial::operator*=(const BigInt & c)
{
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto & [e, coef] : terms_) coef *= c;
  return *this;
}

Polynomial Polynomial::operator-() const
{
  Polynomial out = *this;
  for (auto & [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::pow(int k) const
{
  if (k < 0) throw std::invalid_argument("negative power");
  auto result = constant(vars_, 1);
  auto base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial> & images,
                                  const std::vector<std::string> & target_vars) const
{
  std::vector<Polynomial> image_of;
  image_of.reserve(vars_.size());
  for (const auto & v : vars_) {
    auto it = images.find(v);
    if (it != images.end()) {
      if (it->second.vars() != target_vars) {
        throw std::invalid_argument("image of '" + v + "' is over the wrong variable list");
      }
      image_of.push_back(it->second);
    } else {
      image_of.push_back(variable(target_vars, v));
    }
  }

  // powers[i][k] = image_of[i]^k, grown on demand
  std::vector<std::vector<Polynomial>> powers(vars_.size());
  auto power = [&](std::size_t i, int k) -> const Polynomial & {
    auto & cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target_vars, 1));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * image_of[i]);
    return cache[k];
  };

  Polynomial out(target_vars);
  for (const auto & [e, c] : terms_) {
    auto term = constant(target_vars, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) term *= power(i, e[i]);
    }
    out += term;
  }
  return out;
}

Polynomial Polynomial::with_vars(const std::vector<std::string> & target_vars) const
{
  std::vector<int> where(vars_.size(), -1);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(target_vars.begin(), target_vars.end(), vars_[i]);
    if (it != target_vars.end()) where[i] = static_cast<int>(it - target_vars.begin());
  }
  Polynomial out(target_vars);
  for (const auto & [e, c] : terms_) {
    Exponents te(target_vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (where[i] < 0) throw std::invalid_argument("variable '" + vars_[i] + "' is in use");
      te[where[i]] = e[i];
    }
    out.add_term(te, c);
  }
  return out;
}

int Polynomial::degree_in(const std::string & name) const
{
  const int i = var_index(name);
  int d = 0;
  for (const auto & [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

std::vector<BigInt> Polynomial::univariate_coefficients() const
{
  if (vars_.size() > 1) throw std::logic_error("not a univariate polynomial");
  std::vector<BigInt> out;
  for (const auto & [e, c] : terms_) {
    const int k = vars_.empty() ? 0 : e[0];
    if (static_cast<int>(out.size()) <= k) out.resize(k + 1);
    out[k] = c;
  }
  return out;
}

bool Polynomial::is_homogeneous(const std::vector<int> & weights, int * degree) const
{
  if (weights.size() != vars_.size()) throw std::invalid_argument("weight vector size mismatch");
  bool first = true;
  int d0 = 0;
  for (const auto & [e, c] : terms_) {
    const int d = std::inner_product(e.begin(), e.end(), weights.begin(), 0);
    if (first) {
      d0 = d;
      first = false;
    } else if (d != d0) {
      return false;
    }
  }
  if (degree != nullptr) *degree = d0;
  return true;
}

std::string Polynomial::to_string(bool ascending) const
{
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, BigInt>> sorted(terms_.begin(), terms_.end());
  auto total = [](const Exponents & e) { return std::accumulate(e.begin(), e.end(), 0); };
  std::sort(sorted.begin(), sorted.end(), [&](const auto & a, const auto & b) {
    const int da = total(a.first);
    const int db = total(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  if (ascending) std::reverse(sorted.begin(), sorted.end());

  std::string out;
  for (std::size_t t = 0; t < sorted.size(); ++t) {
    const auto & [e, c] = sorted[t];
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (t == 0) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag.str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.str() + "*" + mono;
    }
  }
  return out;
}

std::string polynomial_diff(const Polynomial & lhs, const Polynomial & rhs)
{
  if (lhs == rhs) return {};
  if (lhs.vars() != rhs.vars()) return "variable lists differ";
  return "lhs = " + lhs.to_string() + "; rhs = " + rhs.to_string() + "; lhs - rhs = " +
         (lhs - rhs).to_string();
}

std::vector<std::string> xy_beta_vars(int n)
{
  std::vector<std::string> vars;
  for (int i = 1; i < n; ++i) vars.push_back("x" + std::to_string(i));
  for (int j = 1; j < n; ++j) vars.push_back("y" + std::to_string(j));
  vars.push_back("b");
  return vars;
}

}  // namespace pdroot
