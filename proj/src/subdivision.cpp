#include "pdroot/subdivision.hpp"

#include <algorithm>
#include <random>
#include <regex>
#include <stdexcept>

#include "pdroot/grothendieck.hpp"

namespace pdroot
{

EdgeMonomial EdgeMonomial::of(const Graph & g) { return {g.n(), g.edges(), 0, 1}; }

std::int64_t EdgeMonomial::potential() const
{
  std::int64_t total = static_cast<std::int64_t>(edges.size()) * (n - 1);
  for (const auto & e : edges) total -= e.j - e.i;
  return total;
}

Strategy Strategy::parse(const std::string & text, std::uint64_t seed)
{
  if (text == "lex") return lex();
  if (text == "rlex") return rlex();
  if (text == "random") return random(seed);
  if (text.rfind("script:", 0) == 0) {
    std::vector<Triple> script;
    const auto body = text.substr(7);
    static const std::regex digits_re(R"(^\d{3}$)");
    static const std::regex tuple_re(R"(^\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)$)");
    // split on ';' when parenthesized, else on ','
    const char sep = body.find('(') != std::string::npos ? ';' : ',';
    std::size_t pos = 0;
    while (pos <= body.size() && !body.empty()) {
      auto next = body.find(sep, pos);
      if (next == std::string::npos) next = body.size();
      const auto token = body.substr(pos, next - pos);
      std::smatch m;
      if (std::regex_match(token, digits_re)) {
        script.push_back({token[0] - '0', token[1] - '0', token[2] - '0'});
      } else if (std::regex_match(token, m, tuple_re)) {
        script.push_back({std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3])});
      } else {
        throw std::invalid_argument("cannot parse script triple '" + token + "'");
      }
      const auto & t = script.back();
      if (!(t.i < t.j && t.j < t.k)) throw std::invalid_argument("script triple must satisfy i<j<k");
      pos = next + 1;
    }
    return scripted(std::move(script));
  }
  throw std::invalid_argument("unknown strategy '" + text + "'");
}

std::string Strategy::name() const
{
  switch (kind) {
    case Kind::lex:
      return "lex";
    case Kind::rlex:
      return "rlex";
    case Kind::random:
      return "random(" + std::to_string(seed) + ")";
    case Kind::script: {
      std::string out = "script:";
      for (std::size_t s = 0; s < script.size(); ++s) {
        if (s > 0) out += ";";
        out += "(" + std::to_string(script[s].i) + "," + std::to_string(script[s].j) + "," +
               std::to_string(script[s].k) + ")";
      }
      return out;
    }
  }
  return "?";
}

Strategy worked_example_strategy() { return Strategy::scripted({{2, 3, 4}, {1, 2, 3}, {1, 2, 4}}); }

std::vector<Triple> reducible_triples(const std::vector<Edge> & edges)
{
  std::vector<Triple> out;
  for (const auto & a : edges) {
    for (const auto & b : edges) {
      if (a.j == b.i) out.push_back({a.i, a.j, b.j});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Triple> reducible_pair(const EdgeMonomial & m, const Strategy & strategy)
{
  const auto triples = reducible_triples(m.edges);
  if (triples.empty()) return std::nullopt;
  switch (strategy.kind) {
    case Strategy::Kind::lex:
      return triples.front();
    case Strategy::Kind::rlex:
      return triples.back();
    case Strategy::Kind::random: {
      std::vector<std::uint32_t> material{static_cast<std::uint32_t>(strategy.seed),
                                          static_cast<std::uint32_t>(strategy.seed >> 32)};
      for (const auto & e : m.edges) {
        material.push_back(static_cast<std::uint32_t>(e.i));
        material.push_back(static_cast<std::uint32_t>(e.j));
      }
      material.push_back(static_cast<std::uint32_t>(m.beta_power));
      std::seed_seq seq(material.begin(), material.end());
      std::mt19937_64 rng(seq);
      std::uniform_int_distribution<std::size_t> pick(0, triples.size() - 1);
      return triples[pick(rng)];
    }
    case Strategy::Kind::script:
      for (const auto & t : strategy.script) {
        if (std::binary_search(triples.begin(), triples.end(), t)) return t;
      }
      return triples.front();
  }
  return triples.front();
}

namespace
{

void replace_one(std::vector<Edge> & edges, const Edge & from, const Edge & to)
{
  auto it = std::lower_bound(edges.begin(), edges.end(), from);
  edges.erase(it);
  edges.insert(std::upper_bound(edges.begin(), edges.end(), to), to);
}

}  // namespace

std::array<EdgeMonomial, 3> reduce_once(const EdgeMonomial & m, const Triple & t)
{
  const Edge ij{t.i, t.j};
  const Edge jk{t.j, t.k};
  const Edge ik{t.i, t.k};
  if (!std::binary_search(m.edges.begin(), m.edges.end(), ij) ||
      !std::binary_search(m.edges.begin(), m.edges.end(), jk)) {
    throw std::invalid_argument("reducible pair not present in monomial");
  }
  std::array<EdgeMonomial, 3> out{m, m, m};
  replace_one(out[0].edges, jk, ik);
  replace_one(out[1].edges, ij, ik);
  replace_one(out[2].edges, ij, ik);
  out[2].edges.erase(std::lower_bound(out[2].edges.begin(), out[2].edges.end(), jk));
  out[2].beta_power += 1;
  return out;
}

void ReducedForm::add(const EdgeMonomial & m)
{
  auto [it, inserted] = terms_.try_emplace(Key{m.edges, m.beta_power}, m.coefficient);
  if (!inserted) {
    it->second += m.coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

std::string edge_variable(const Edge & e, int n)
{
  if (n <= 9) return "x" + std::to_string(e.i) + std::to_string(e.j);
  return "x" + std::to_string(e.i) + "_" + std::to_string(e.j);
}

std::vector<std::string> edge_vars(int n)
{
  std::vector<std::string> vars;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) vars.push_back(edge_variable({i, j}, n));
  }
  vars.push_back("b");
  return vars;
}

Polynomial ReducedForm::to_polynomial() const
{
  const auto vars = edge_vars(n_);
  Polynomial p(vars);
  for (const auto & [key, c] : terms_) {
    Exponents e(vars.size(), 0);
    for (const auto & edge : key.first) {
      // index of x_ij in the lexicographic list
      int index = 0;
      for (int a = 1; a < edge.i; ++a) index += n_ - a;
      index += edge.j - edge.i - 1;
      ++e[index];
    }
    e.back() = key.second;
    p.add_term(e, c);
  }
  return p;
}

Polynomial ReducedForm::specialize() const
{
  std::vector<BigInt> coeffs;
  for (const auto & [key, c] : terms_) {
    if (static_cast<int>(coeffs.size()) <= key.second) coeffs.resize(key.second + 1);
    coeffs[key.second] += c;
  }
  return Polynomial::from_coefficients("b", coeffs);
}

ReducedForm reduced_form(const EdgeMonomial & m, const Strategy & strategy)
{
  ReducedForm result(m.n);
  std::map<ReducedForm::Key, EdgeMonomial> layer;
  layer.emplace(ReducedForm::Key{m.edges, m.beta_power}, m);
  while (!layer.empty()) {
    std::map<ReducedForm::Key, EdgeMonomial> next;
    for (const auto & [key, mono] : layer) {
      const auto pair = reducible_pair(mono, strategy);
      if (!pair) {
        result.add(mono);
        continue;
      }
      const auto before = mono.potential();
      for (auto & child : reduce_once(mono, *pair)) {
        const auto after = child.potential();
        if (!(after < before || (after == before && child.edges.size() < mono.edges.size()))) {
          throw std::logic_error("rewriting potential failed to decrease");
        }
        auto [it, inserted] = next.try_emplace(ReducedForm::Key{child.edges, child.beta_power}, child);
        if (!inserted) it->second.coefficient += child.coefficient;
      }
    }
    std::erase_if(next, [](const auto & kv) { return kv.second.coefficient == 0; });
    layer = std::move(next);
  }
  return result;
}

std::unique_ptr<ReductionNode> reduction_tree(const EdgeMonomial & m, const Strategy & strategy)
{
  auto node = std::make_unique<ReductionNode>();
  node->monomial = m;
  node->pair = reducible_pair(m, strategy);
  if (node->pair) {
    for (auto & child : reduce_once(m, *node->pair)) {
      node->children.push_back(reduction_tree(child, strategy));
    }
  }
  return node;
}

Polynomial q_polynomial(const Graph & g, const Strategy & strategy)
{
  return reduced_form(EdgeMonomial::of(g), strategy).specialize();
}

Verification verify_kirillov(int n)
{
  const auto q = q_polynomial(Graph::path(n));
  const auto g = groth_beta(Permutation::dominant_path(n));
  if (q != g) return Verification::fail(polynomial_diff(q, g));
  return Verification::pass(q.to_string());
}

}  // namespace pdroot
