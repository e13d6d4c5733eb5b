#include "pdroot/graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <regex>
#include <stdexcept>

namespace pdroot
{

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges))
{
  for (const auto & e : edges_) {
    if (e.i < 1 || e.i >= e.j || e.j > n_) {
      throw std::invalid_argument(
        "edge (" + std::to_string(e.i) + "," + std::to_string(e.j) + ") invalid on [" +
        std::to_string(n_) + "]");
    }
  }
  std::sort(edges_.begin(), edges_.end());
}

Graph Graph::path(int n)
{
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph Graph::parse(std::string_view text, int n)
{
  std::vector<Edge> edges;
  const std::string s(text);
  if (s.find('(') != std::string::npos) {
    static const std::regex pair_re(R"(\(\s*(\d+)\s*,\s*(\d+)\s*\))");
    for (std::sregex_iterator it(s.begin(), s.end(), pair_re), end; it != end; ++it) {
      edges.push_back({std::stoi((*it)[1]), std::stoi((*it)[2])});
    }
    const auto rest = std::regex_replace(s, pair_re, "");
    if (rest.find_first_not_of(", ") != std::string::npos) {
      throw std::invalid_argument("cannot parse edge list '" + s + "'");
    }
  } else if (!s.empty()) {
    std::size_t pos = 0;
    while (pos <= s.size()) {
      auto next = s.find(',', pos);
      if (next == std::string::npos) next = s.size();
      const auto token = s.substr(pos, next - pos);
      if (token.size() != 2 || !std::isdigit(static_cast<unsigned char>(token[0])) ||
          !std::isdigit(static_cast<unsigned char>(token[1]))) {
        throw std::invalid_argument("cannot parse edge '" + token + "'");
      }
      edges.push_back({token[0] - '0', token[1] - '0'});
      pos = next + 1;
    }
  }
  int max_vertex = 0;
  for (const auto & e : edges) max_vertex = std::max({max_vertex, e.i, e.j});
  return Graph(n > 0 ? n : max_vertex, std::move(edges));
}

bool Graph::has_edge(const Edge & e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

std::size_t Graph::count(const Edge & e) const
{
  auto [lo, hi] = std::equal_range(edges_.begin(), edges_.end(), e);
  return static_cast<std::size_t>(hi - lo);
}

Graph Graph::without(const Edge & e) const
{
  auto out = *this;
  auto it = std::lower_bound(out.edges_.begin(), out.edges_.end(), e);
  if (it == out.edges_.end() || *it != e) throw std::invalid_argument("edge not present");
  out.edges_.erase(it);
  return out;
}

Graph Graph::with(const Edge & e) const
{
  std::vector<Edge> edges = edges_;
  edges.push_back(e);
  return Graph(n_, std::move(edges));
}

bool Graph::is_acyclic() const
{
  std::vector<int> parent(n_ + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto & e : edges_) {
    const int a = find(e.i);
    const int b = find(e.j);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

bool Graph::is_spanning_tree() const
{
  return static_cast<int>(edges_.size()) == n_ - 1 && is_acyclic();
}

bool Graph::is_alternating() const
{
  for (const auto & a : edges_) {
    for (const auto & b : edges_) {
      if (a.j == b.i) return false;
    }
  }
  return true;
}

bool Graph::is_noncrossing() const
{
  for (const auto & a : edges_) {
    for (const auto & b : edges_) {
      if (a.i < b.i && b.i < a.j && a.j < b.j) return false;
    }
  }
  return true;
}

std::string Graph::to_string() const
{
  std::string out;
  const bool compact = n_ <= 9;
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    if (k > 0) out += ",";
    if (compact) {
      out += std::to_string(edges_[k].i) + std::to_string(edges_[k].j);
    } else {
      out += "(" + std::to_string(edges_[k].i) + "," + std::to_string(edges_[k].j) + ")";
    }
  }
  return out;
}

Graph intersect(const Graph & a, const Graph & b)
{
  std::vector<Edge> common;
  std::set_intersection(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end(),
                        std::back_inserter(common));
  return Graph(std::max(a.n(), b.n()), std::move(common));
}

}  // namespace pdroot
