#include "pdroot/pipe_dream.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <unordered_map>

namespace pdroot
{

std::vector<Box> staircase(int n)
{
  std::vector<Box> boxes;
  for (int r = 1; r < n; ++r) {
    for (int c = n - r; c >= 1; --c) boxes.push_back({r, c});
  }
  return boxes;
}

int reading_index(const Box & box, int n)
{
  if (box.row < 1 || box.col < 1 || box.row + box.col > n) {
    throw std::invalid_argument("box outside the staircase");
  }
  // rows 1..r-1 hold (n-1) + (n-2) + ... + (n-r+1) boxes
  int before = 0;
  for (int r = 1; r < box.row; ++r) before += n - r;
  return before + (n - box.row - box.col);
}

Word triangular_word(int n)
{
  Word word;
  for (const auto & b : staircase(n)) word.push_back(b.row + b.col - 1);
  return word;
}

PipeDream::PipeDream(int n, std::vector<Box> crosses) : n_(n), crosses_(std::move(crosses))
{
  if (n < 1) throw std::invalid_argument("rank must be positive");
  for (const auto & b : crosses_) {
    if (b.row < 1 || b.col < 1 || b.row + b.col > n) {
      throw std::invalid_argument(
        "box (" + std::to_string(b.row) + "," + std::to_string(b.col) + ") outside the staircase");
    }
  }
  std::sort(crosses_.begin(), crosses_.end());
  crosses_.erase(std::unique(crosses_.begin(), crosses_.end()), crosses_.end());
}

PipeDream PipeDream::from_mask(int n, std::uint64_t mask)
{
  std::vector<Box> crosses;
  const auto boxes = staircase(n);
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    if (mask >> i & 1U) crosses.push_back(boxes[i]);
  }
  return PipeDream(n, std::move(crosses));
}

std::vector<Box> PipeDream::elbows() const
{
  std::vector<Box> out;
  for (const auto & b : staircase(n_)) {
    if (!std::binary_search(crosses_.begin(), crosses_.end(), b)) out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t PipeDream::mask() const
{
  if (n_ > kMaxMaskRank) throw SearchLimitError("rank too large for box masks");
  std::uint64_t m = 0;
  for (const auto & b : crosses_) m |= std::uint64_t{1} << reading_index(b, n_);
  return m;
}

Word PipeDream::word() const
{
  std::vector<int> positions;
  for (const auto & b : crosses_) positions.push_back(reading_index(b, n_));
  std::sort(positions.begin(), positions.end());
  const auto full = triangular_word(n_);
  Word w;
  for (int p : positions) w.push_back(full[p]);
  return w;
}

bool operator<(const PipeDream & a, const PipeDream & b)
{
  if (a.n_ != b.n_) return a.n_ < b.n_;
  if (a.crosses_.size() != b.crosses_.size()) return a.crosses_.size() < b.crosses_.size();
  return a.crosses_ < b.crosses_;
}

Permutation permutation_of(const PipeDream & p) { return demazure_product(p.word(), p.n()); }

bool is_pipe_dream_for(const PipeDream & p, const Permutation & w)
{
  return p.n() == w.n() && permutation_of(p) == w;
}

bool is_reduced_for(const PipeDream & p, const Permutation & w)
{
  return is_pipe_dream_for(p, w) && static_cast<int>(p.size()) == w.length();
}

namespace
{

// Depth-first search over the staircase in reading order. The running Demazure
// product u always satisfies Inv(u) subset Inv(w) (right weak order), and a memo
// of (position, u) -> "w still reachable" keeps dead branches from being revisited.
class PipeDreamSearch
{
public:
  PipeDreamSearch(const Permutation & w, bool reduced_only)
  : n_(w.n()), letters_(triangular_word(w.n())), reduced_only_(reduced_only)
  {
    for (int a = 1; a <= n_; ++a) {
      for (int b = a + 1; b <= n_; ++b) pair_bit_[a][b] = next_bit_++;
    }
    for (int i = 1; i <= n_; ++i) {
      for (int j = i + 1; j <= n_; ++j) {
        if (w(i) > w(j)) target_ |= bit(w(j), w(i));
      }
    }
  }

  std::vector<std::uint64_t> run()
  {
    State s{};
    for (int i = 0; i < n_; ++i) s.values[i] = static_cast<std::uint8_t>(i + 1);
    std::vector<std::uint64_t> out;
    if (reachable(0, s)) collect(0, s, 0, out);
    return out;
  }

private:
  struct State
  {
    std::array<std::uint8_t, kMaxMaskRank> values{};
    std::uint64_t inversions = 0;
  };

  std::uint64_t bit(int a, int b) const { return std::uint64_t{1} << pair_bit_[a][b]; }

  std::uint64_t key(int pos, const State & s) const
  {
    std::uint64_t k = 0;
    for (int i = 0; i < n_; ++i) k = (k << 4) | (s.values[i] - 1U);
    return (k << 6) | static_cast<std::uint64_t>(pos);
  }

  // Cross at position pos applied to s. Returns false if the cross would leave
  // the weak-order interval below w (or is an absorbed cross in reduced mode).
  bool cross(int pos, const State & s, State & out) const
  {
    const int a = letters_[pos];
    const int left = s.values[a - 1];
    const int right = s.values[a];
    out = s;
    if (left > right) return !reduced_only_;
    const auto b = bit(left, right);
    if ((target_ & b) == 0) return false;
    std::swap(out.values[a - 1], out.values[a]);
    out.inversions |= b;
    return true;
  }

  bool reachable(int pos, const State & s)
  {
    if (pos == static_cast<int>(letters_.size())) return s.inversions == target_;
    const auto k = key(pos, s);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    bool ok = reachable(pos + 1, s);
    State next;
    if (!ok && cross(pos, s, next)) ok = reachable(pos + 1, next);
    memo_.emplace(k, ok);
    return ok;
  }

  void collect(int pos, const State & s, std::uint64_t mask, std::vector<std::uint64_t> & out)
  {
    if (pos == static_cast<int>(letters_.size())) {
      out.push_back(mask);
      return;
    }
    if (reachable(pos + 1, s)) collect(pos + 1, s, mask, out);
    State next;
    if (cross(pos, s, next) && reachable(pos + 1, next)) {
      collect(pos + 1, next, mask | (std::uint64_t{1} << pos), out);
    }
  }

  int n_;
  Word letters_;
  bool reduced_only_;
  std::array<std::array<int, kMaxMaskRank + 1>, kMaxMaskRank + 1> pair_bit_{};
  int next_bit_ = 0;
  std::uint64_t target_ = 0;
  std::unordered_map<std::uint64_t, bool> memo_;
};

}  // namespace

std::vector<PipeDream> enumerate_pipe_dreams(const Permutation & w, const SearchOptions & options)
{
  if (w.n() > options.limit_n || w.n() > kMaxMaskRank) {
    throw SearchLimitError(
      "rank " + std::to_string(w.n()) + " exceeds the pipe dream search limit " +
      std::to_string(std::min(options.limit_n, kMaxMaskRank)));
  }
  PipeDreamSearch search(w, options.reduced_only);
  std::vector<PipeDream> out;
  for (auto mask : search.run()) out.push_back(PipeDream::from_mask(w.n(), mask));
  std::sort(out.begin(), out.end());
  return out;
}

Polynomial weight(const PipeDream & p)
{
  const auto vars = xy_beta_vars(p.n());
  auto result = Polynomial::constant(vars, 1);
  for (const auto & b : p.crosses()) {
    result *= Polynomial::variable(vars, "x" + std::to_string(b.row)) -
              Polynomial::variable(vars, "y" + std::to_string(b.col));
  }
  return result;
}

}  // namespace pdroot
