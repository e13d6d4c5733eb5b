#include "pdroot/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace pdroot
{

namespace
{

std::vector<int> parse_int_list(std::string_view text, char sep)
{
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find(sep, pos);
    if (next == std::string_view::npos) next = text.size();
    auto token = text.substr(pos, next - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw std::invalid_argument("cannot parse integer '" + std::string(token) + "'");
    }
    out.push_back(value);
    pos = next + 1;
  }
  return out;
}

}  // namespace

Permutation::Permutation(std::vector<int> window) : window_(std::move(window))
{
  std::vector<bool> seen(window_.size() + 1, false);
  for (int v : window_) {
    if (v < 1 || v > static_cast<int>(window_.size()) || seen[v]) {
      throw std::invalid_argument("not a permutation of {1..n}");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n)
{
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::dominant_path(int n)
{
  std::vector<int> w{1};
  for (int v = n; v >= 2; --v) w.push_back(v);
  w.resize(n);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n)
{
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text)
{
  if (text.find(',') != std::string_view::npos) {
    return Permutation(parse_int_list(text, ','));
  }
  std::vector<int> w;
  for (char c : text) {
    if (c < '1' || c > '9') {
      throw std::invalid_argument("invalid permutation digit in '" + std::string(text) + "'");
    }
    w.push_back(c - '0');
  }
  if (w.empty()) throw std::invalid_argument("empty permutation");
  return Permutation(std::move(w));
}

std::vector<Permutation> Permutation::all(int n)
{
  std::vector<Permutation> out;
  auto w = identity(n).window_;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

int Permutation::length() const
{
  int count = 0;
  for (std::size_t i = 0; i < window_.size(); ++i) {
    for (std::size_t j = i + 1; j < window_.size(); ++j) {
      if (window_[i] > window_[j]) ++count;
    }
  }
  return count;
}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0; i < window_.size(); ++i) {
    if (window_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

Permutation Permutation::times_simple(int a) const
{
  if (a < 1 || a >= n()) throw std::out_of_range("simple reflection index out of range");
  Permutation out = *this;
  std::swap(out.window_[a - 1], out.window_[a]);
  return out;
}

Permutation Permutation::inverse() const
{
  std::vector<int> inv(window_.size());
  for (std::size_t i = 0; i < window_.size(); ++i) inv[window_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation & other) const
{
  if (other.n() != n()) throw std::invalid_argument("rank mismatch");
  std::vector<int> out(window_.size());
  for (std::size_t i = 0; i < window_.size(); ++i) out[i] = window_[other.window_[i] - 1];
  return Permutation(std::move(out));
}

std::string Permutation::to_string() const
{
  std::string out;
  const bool digits = n() <= 9;
  for (std::size_t i = 0; i < window_.size(); ++i) {
    if (!digits && i > 0) out += ',';
    out += std::to_string(window_[i]);
  }
  return out;
}

std::uint64_t Permutation::key() const
{
  std::uint64_t k = 0;
  for (int v : window_) k = (k << 4) | static_cast<std::uint64_t>(v - 1);
  return k;
}

void check_word(const Word & word, int n)
{
  for (int a : word) {
    if (a < 1 || a > n - 1) {
      throw std::invalid_argument(
        "letter s" + std::to_string(a) + " out of range for rank " + std::to_string(n));
    }
  }
}

Word parse_word(std::string_view text)
{
  if (text.empty()) return {};
  return parse_int_list(text, ',');
}

std::string word_to_string(const Word & word)
{
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(word[i]);
  }
  return out;
}

Permutation demazure_product(const Word & word, int n)
{
  check_word(word, n);
  auto w = Permutation::identity(n);
  for (int a : word) {
    // w * s_a is longer exactly when positions a, a+1 are not yet inverted.
    if (w(a) < w(a + 1)) w = w.times_simple(a);
  }
  return w;
}

Permutation ordered_product(const Word & word, int n)
{
  check_word(word, n);
  auto w = Permutation::identity(n);
  for (int a : word) w = w.times_simple(a);
  return w;
}

bool is_reduced_word(const Word & word, const Permutation & w)
{
  return static_cast<int>(word.size()) == w.length() && demazure_product(word, w.n()) == w;
}

}  // namespace pdroot
