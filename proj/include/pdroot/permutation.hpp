#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace pdroot
{

/// A permutation of {1..n} in one-line notation, 1-indexed.
class Permutation
{
public:
  Permutation() = default;
  /// Throws std::invalid_argument unless window is a bijection of {1..n}.
  explicit Permutation(std::vector<int> window);

  static Permutation identity(int n);
  /// 1 n n-1 ... 2
  static Permutation dominant_path(int n);
  /// n n-1 ... 1
  static Permutation longest(int n);
  /// Digit string for n <= 9 ("1432"), otherwise comma separated ("1,10,9,...").
  static Permutation parse(std::string_view text);
  /// Every permutation of rank n, in lexicographic order of the window.
  static std::vector<Permutation> all(int n);

  int n() const { return static_cast<int>(window_.size()); }
  /// Value at position i (1-indexed).
  int operator()(int i) const { return window_[i - 1]; }
  const std::vector<int> & window() const { return window_; }

  /// Number of inversions.
  int length() const;
  bool is_identity() const;

  /// w * s_a: swaps positions a and a+1.
  Permutation times_simple(int a) const;
  Permutation inverse() const;
  Permutation operator*(const Permutation & other) const;

  std::string to_string() const;
  /// Packs the window into 4-bit nibbles; valid for n <= 16.
  std::uint64_t key() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  std::vector<int> window_;
};

/// Sequence of simple reflections; letter a means s_a.
using Word = std::vector<int>;

/// Throws std::invalid_argument if a letter lies outside {1..n-1}.
void check_word(const Word & word, int n);
Word parse_word(std::string_view text);
std::string word_to_string(const Word & word);

/// 0-Hecke product: fold from the identity, applying s_a only when it raises the length.
Permutation demazure_product(const Word & word, int n);
/// Plain product s_{a1} s_{a2} ... in the symmetric group.
Permutation ordered_product(const Word & word, int n);
bool is_reduced_word(const Word & word, const Permutation & w);

}  // namespace pdroot

template <>
struct std::hash<pdroot::Permutation>
{
  std::size_t operator()(const pdroot::Permutation & w) const noexcept
  {
    return std::hash<std::uint64_t>{}(w.key());
  }
};
