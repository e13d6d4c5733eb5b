#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pdroot/permutation.hpp"
#include "pdroot/polynomial.hpp"

namespace pdroot
{

/// A box (row, col) of the staircase; valid for rank n when row + col <= n.
struct Box
{
  int row = 1;
  int col = 1;

  friend bool operator==(const Box &, const Box &) = default;
  friend auto operator<=>(const Box &, const Box &) = default;
};

/// Staircases above this rank do not fit the 64-bit box masks.
inline constexpr int kMaxMaskRank = 11;
/// Default guard for exhaustive pipe-dream search.
inline constexpr int kDefaultSearchLimit = 9;

class SearchLimitError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Boxes of the staircase for S_n in reading order: rows top to bottom, each
/// row right to left. The box (r, c) carries the letter s_{r+c-1}.
std::vector<Box> staircase(int n);
/// Position of a box in reading order (0-based).
int reading_index(const Box & box, int n);
/// (s_{n-1},...,s_1, s_{n-1},...,s_2, ..., s_{n-1}).
Word triangular_word(int n);

/// Cross positions in the staircase; elbows everywhere else.
class PipeDream
{
public:
  PipeDream() = default;
  /// Sorts and deduplicates; throws std::invalid_argument on boxes outside the staircase.
  PipeDream(int n, std::vector<Box> crosses);
  static PipeDream from_mask(int n, std::uint64_t mask);

  int n() const { return n_; }
  const std::vector<Box> & crosses() const { return crosses_; }
  std::vector<Box> elbows() const;
  std::size_t size() const { return crosses_.size(); }
  /// Bit i set iff the i-th box in reading order is a cross.
  std::uint64_t mask() const;
  /// Letters of the triangular word at the cross positions, in reading order.
  Word word() const;

  friend bool operator==(const PipeDream &, const PipeDream &) = default;
  /// Canonical order: by number of crosses, then lexicographically by cross list.
  friend bool operator<(const PipeDream & a, const PipeDream & b);

private:
  int n_ = 1;
  std::vector<Box> crosses_;
};

Permutation permutation_of(const PipeDream & p);
bool is_pipe_dream_for(const PipeDream & p, const Permutation & w);
bool is_reduced_for(const PipeDream & p, const Permutation & w);

struct SearchOptions
{
  int limit_n = kDefaultSearchLimit;
  /// Only pipe dreams with exactly length(w) crosses.
  bool reduced_only = false;
};

/// Every pipe dream of w (reduced and nonreduced), in canonical order.
/// Throws SearchLimitError when w.n() exceeds options.limit_n or kMaxMaskRank.
std::vector<PipeDream> enumerate_pipe_dreams(const Permutation & w, const SearchOptions & options = {});

/// prod over crosses (i, j) of (x_i - y_j), over the variables xy_beta_vars(n).
Polynomial weight(const PipeDream & p);

}  // namespace pdroot
