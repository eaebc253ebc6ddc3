#pragma once

// Permutations, cyclic intervals, subsets, the Gale order and the descent
// statistics shared by every other module. Letters and positions are 1-based
// throughout; arithmetic modulo n always lands in [n], never at 0.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace positroid {

/// Reduce any integer into [1, n].
constexpr int wrap_index(long long i, int n) {
  long long r = (i - 1) % n;
  if (r < 0) r += n;
  return static_cast<int>(r) + 1;
}

/// Position of `a` in the rotated order i <_i i+1 <_i ... <_i i-1, starting at 0.
constexpr int rank_in_order(int a, int i, int n) { return wrap_index(a - i + 1, n) - 1; }

/// A permutation of [n] in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `word` is a bijection on [n], n >= 1.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  /// Accepts "32415", "3 2 4 1 5" or "3,2,4,1,5".
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(word_.size()); }
  /// Letter at 1-based position `pos`.
  int at(int pos) const { return word_[static_cast<std::size_t>(pos - 1)]; }
  int last() const { return word_.back(); }
  const std::vector<int>& word() const { return word_; }
  /// 1-based position of `letter`.
  int position_of(int letter) const;
  Permutation inverse() const;
  /// w_1 ... w_{n-1}
  std::vector<int> without_last() const { return {word_.begin(), word_.end() - 1}; }

  /// Digits when every letter is a single digit, comma separated otherwise.
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> word_;
};

/// The cyclic interval [i, j] of [n] with its associated sum x_i + ... + x_{j-1}.
struct CyclicInterval {
  int start = 1;
  int end = 1;
  int n = 1;

  bool wraps() const { return start > end; }
  /// Elements of [i, j] listed in the order <_i.
  std::vector<int> members() const;
  /// Indices of the sum functional: i, i+1, ..., j-1 (empty when i == j).
  std::vector<int> sum_indices() const;
  std::uint32_t sum_mask() const;
  bool sum_is_empty() const { return start == end; }

  auto operator<=>(const CyclicInterval&) const = default;
  bool operator==(const CyclicInterval&) const = default;
};

/// A subset of [n], stored sorted.
class KSubset {
 public:
  KSubset() = default;
  /// Throws std::invalid_argument on repeats or elements outside [n].
  KSubset(int n, std::vector<int> elements);
  static KSubset from_mask(int n, std::uint32_t mask);

  int n() const { return n_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<int>& elements() const { return elements_; }
  std::uint32_t mask() const { return mask_; }
  bool contains(int a) const { return (mask_ >> (a - 1)) & 1u; }
  /// Elements sorted by <_i.
  std::vector<int> sorted_by_order(int i) const;
  /// 0/1 indicator vector of length n.
  std::vector<int> indicator() const;

  std::string to_string() const;

  auto operator<=>(const KSubset& other) const { return elements_ <=> other.elements_; }
  bool operator==(const KSubset& other) const { return n_ == other.n_ && mask_ == other.mask_; }

 private:
  int n_ = 0;
  std::vector<int> elements_;
  std::uint32_t mask_ = 0;
};

/// A word over a totally ordered ground set. `ground` lists the ground set in
/// increasing order; `letters` is a permutation of it.
struct OrderedWord {
  std::vector<int> letters;
  std::vector<int> ground;
};

/// S <=_i T in the Gale order with respect to <_i.
bool gale_leq(const KSubset& s, const KSubset& t, int i);

/// Cyclic left descents of a word over an arbitrary totally ordered ground set.
/// Singletons have no cyclic left descents.
std::vector<int> cyclic_left_descent_set(const OrderedWord& word);
/// Cyclic left descents of a permutation of [n] under the natural order.
std::vector<int> cyclic_left_descent_set(const Permutation& w);
int cyclic_left_descent_count(const OrderedWord& word);
int cyclic_left_descent_count(const Permutation& w);

/// Subword of w on the letters of [i, j], ordered by <_i.
OrderedWord restrict(const Permutation& w, const CyclicInterval& interval);

/// The cyclic rotation of w whose last letter is `a`.
Permutation rotation_ending_at(const Permutation& w, int a);

/// I_{w_1}, ..., I_{w_n} in circuit order. Requires w_n = n.
std::vector<KSubset> circuit_subsets(const Permutation& w);

/// Number of positions p with word_p > word_{p+1}.
int descent_count(std::span<const int> word);

/// All permutations of [n] that end with n, in lexicographic order.
std::vector<Permutation> permutations_fixing_last(int n);

}  // namespace positroid
