#pragma once

// Brute-force reference implementations. They share no code with the library beyond
// its value types, so agreement is evidence rather than tautology.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "pdroot/types.hpp"

namespace oracle
{

inline int inversions(const std::vector<int> & w)
{
  int count = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) count += w[i] > w[j];
  }
  return count;
}

/// 0-Hecke fold: swap positions a, a+1 when the inversion count goes up.
inline std::vector<int> hecke(const std::vector<int> & word, int n)
{
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  for (int a : word) {
    auto next = w;
    std::swap(next[a - 1], next[a]);
    if (inversions(next) > inversions(w)) w = next;
  }
  return w;
}

/// Staircase boxes (row, col) in reading order with their letters.
inline std::vector<std::pair<std::pair<int, int>, int>> staircase(int n)
{
  std::vector<std::pair<std::pair<int, int>, int>> out;
  for (int r = 1; r < n; ++r) {
    for (int c = n - r; c >= 1; --c) out.push_back({{r, c}, r + c - 1});
  }
  return out;
}

/// Every subset of the staircase grouped by its Demazure product; subsets as sorted cross lists.
inline std::map<std::vector<int>, std::vector<std::vector<std::pair<int, int>>>> all_pipe_dreams(int n)
{
  const auto boxes = staircase(n);
  std::map<std::vector<int>, std::vector<std::vector<std::pair<int, int>>>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << boxes.size()); ++mask) {
    std::vector<int> word;
    std::vector<std::pair<int, int>> crosses;
    for (std::size_t k = 0; k < boxes.size(); ++k) {
      if (mask >> k & 1) {
        word.push_back(boxes[k].second);
        crosses.push_back(boxes[k].first);
      }
    }
    std::sort(crosses.begin(), crosses.end());
    out[hecke(word, n)].push_back(crosses);
  }
  return out;
}

/// Follows pipes through a reduced pipe dream: pipe entering row r on the left exits
/// at the top of column w(r). Boxes with r + c = n are followed by the outer elbows.
inline std::vector<int> trace_pipes(int n, const std::set<std::pair<int, int>> & crosses)
{
  std::vector<int> w(n);
  for (int start = 1; start <= n; ++start) {
    int r = start;
    int c = 1;
    bool east = true;  // moving east, otherwise north
    while (r >= 1) {
      if (r + c > n) {
        // outer elbow: arrive from the west, leave north
        --r;
        east = false;
        continue;
      }
      const bool cross = crosses.count({r, c}) > 0;
      if (cross) {
        if (east) ++c; else --r;
      } else if (east) {
        // elbow: west -> north
        --r;
        east = false;
      } else {
        // elbow: south -> east
        ++c;
        east = true;
      }
    }
    w[start - 1] = c;
  }
  return w;
}

inline pdroot::BigInt binomial(int m, int k)
{
  if (k < 0 || k > m) return 0;
  // Pascal's triangle
  std::vector<pdroot::BigInt> row{1};
  for (int i = 1; i <= m; ++i) {
    std::vector<pdroot::BigInt> next(i + 1, 1);
    for (int j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k];
}

inline pdroot::BigInt catalan(int m)
{
  std::vector<pdroot::BigInt> c{1};
  for (int k = 1; k <= m; ++k) {
    pdroot::BigInt s = 0;
    for (int i = 0; i < k; ++i) s += c[i] * c[k - 1 - i];
    c.push_back(s);
  }
  return c[m];
}

inline pdroot::BigInt narayana(int m, int k) { return binomial(m, k) * binomial(m, k - 1) / m; }

/// f_{-1}, f_0, ... by testing every vertex subset against the facets.
inline std::vector<std::int64_t> f_vector(int vertex_count, const std::vector<std::vector<int>> & facets)
{
  std::vector<std::uint64_t> masks;
  for (const auto & f : facets) {
    std::uint64_t m = 0;
    for (int v : f) m |= std::uint64_t{1} << v;
    masks.push_back(m);
  }
  std::vector<std::int64_t> f(vertex_count + 2, 0);
  int top = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << vertex_count); ++s) {
    for (auto m : masks) {
      if ((s & m) == s) {
        const int size = __builtin_popcountll(s);
        ++f[size];
        top = std::max(top, size);
        break;
      }
    }
  }
  f.resize(top + 1);
  return f;
}

/// h_k = sum_i (-1)^(k-i) C(d-i, k-i) f_{i-1}.
inline std::vector<pdroot::BigInt> h_vector(const std::vector<std::int64_t> & f)
{
  const int d = static_cast<int>(f.size()) - 1;
  std::vector<pdroot::BigInt> h(d + 1, 0);
  for (int k = 0; k <= d; ++k) {
    for (int i = 0; i <= k; ++i) {
      const pdroot::BigInt term = binomial(d - i, k - i) * f[i];
      h[k] += ((k - i) % 2 == 0) ? term : pdroot::BigInt(-term);
    }
  }
  return h;
}

/// Spanning trees of K_n as sorted edge lists, by filtering all (n-1)-subsets of edges.
inline std::vector<std::vector<std::pair<int, int>>> spanning_trees(int n)
{
  std::vector<std::pair<int, int>> all;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) all.push_back({i, j});
  }
  std::vector<std::vector<std::pair<int, int>>> out;
  const int m = static_cast<int>(all.size());
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    if (__builtin_popcountll(s) != n - 1) continue;
    std::vector<std::pair<int, int>> edges;
    for (int k = 0; k < m; ++k) {
      if (s >> k & 1) edges.push_back(all[k]);
    }
    // connected iff flood fill from 1 reaches everything
    std::vector<bool> seen(n + 1, false);
    std::vector<int> stack{1};
    seen[1] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (auto [a, b] : edges) {
        const int u = a == v ? b : b == v ? a : 0;
        if (u && !seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
    if (std::count(seen.begin() + 1, seen.end(), true) == n) out.push_back(edges);
  }
  return out;
}

inline bool noncrossing(const std::vector<std::pair<int, int>> & edges)
{
  for (auto [i, k] : edges) {
    for (auto [j, l] : edges) {
      if (i < j && j < k && k < l) return false;
    }
  }
  return true;
}

inline bool alternating(const std::vector<std::pair<int, int>> & edges)
{
  for (auto [i, j] : edges) {
    for (auto [a, k] : edges) {
      if (a == j && i < j && j < k) return false;
    }
  }
  return true;
}

/// Pairs (p, q) with e_p - e_q a 0/1 combination of the edge vectors; for a forest this
/// is the whole cone intersection since representations are unique with entries in {-1,0,1}.
inline std::set<std::pair<int, int>> roots_in_cone(int n, const std::vector<std::pair<int, int>> & edges)
{
  std::set<std::pair<int, int>> out;
  const int m = static_cast<int>(edges.size());
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << m); ++s) {
    std::vector<int> v(n + 1, 0);
    for (int k = 0; k < m; ++k) {
      if (s >> k & 1) {
        ++v[edges[k].first];
        --v[edges[k].second];
      }
    }
    int p = 0;
    int q = 0;
    bool ok = true;
    for (int x = 1; x <= n; ++x) {
      if (v[x] == 1 && !p) {
        p = x;
      } else if (v[x] == -1 && !q) {
        q = x;
      } else if (v[x] != 0) {
        ok = false;
      }
    }
    if (ok && p && q && p < q) out.insert({p, q});
  }
  return out;
}

}  // namespace oracle
