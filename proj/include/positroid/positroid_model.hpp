#pragma once

#include "positroid/combinatorics.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace positroid {

/// Malformed input; `index` names the first offending entry (1-based, 0 when
/// the problem is global).
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(int index, const std::string& what) : std::invalid_argument(what), index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

/// Grassmann necklace (J_1, ..., J_n). Construct through validate_necklace.
class GrassmannNecklace {
 public:
  int n() const { return n_; }
  int rank() const { return rank_; }
  /// J_i for 1-based i.
  const KSubset& at(int i) const { return subsets_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<KSubset>& subsets() const { return subsets_; }
  /// a_1^i <_i ... <_i a_r^i
  std::vector<int> sorted_entry(int i) const { return at(i).sorted_by_order(i); }

  /// Compact form, e.g. "123,235,345,145,125" (elements space separated when n > 9).
  std::string to_string() const;

  bool operator==(const GrassmannNecklace&) const = default;

 private:
  friend GrassmannNecklace validate_necklace(int n, const std::vector<std::vector<int>>& raw);
  int n_ = 0;
  int rank_ = 0;
  std::vector<KSubset> subsets_;
};

enum class FixedPointColor { black, white };

struct DecoratedPermutation {
  Permutation pi;
  /// Keyed by fixed point; must cover exactly the fixed points of pi.
  std::map<int, FixedPointColor> colors;

  int n() const { return pi.size(); }
  /// Throws ValidationError when the color keys differ from the fixed points.
  void validate() const;
  std::string to_string() const;
  auto operator<=>(const DecoratedPermutation&) const = default;
};

/// An explicit basis collection over [n]; bases are kept sorted.
class PositroidBases {
 public:
  PositroidBases() = default;
  /// Throws std::invalid_argument when empty or when sizes differ.
  PositroidBases(int n, std::vector<KSubset> bases);

  int n() const { return n_; }
  int rank() const { return rank_; }
  const std::vector<KSubset>& bases() const { return bases_; }
  std::size_t size() const { return bases_.size(); }
  bool contains(std::uint32_t mask) const;
  bool satisfies_exchange_axiom() const;

  bool operator==(const PositroidBases&) const = default;

 private:
  int n_ = 0;
  int rank_ = 0;
  std::vector<KSubset> bases_;
  std::vector<std::uint32_t> masks_;  // sorted
};

enum class Sense { less_equal, greater_equal };

/// sum_{a in interval} x_a  (sense)  bound, possibly strict.
struct IntervalInequality {
  CyclicInterval interval;
  long long bound = 0;
  Sense sense = Sense::less_equal;
  bool strict = false;

  auto operator<=>(const IntervalInequality&) const = default;
};

struct IntervalEquality {
  CyclicInterval interval;
  long long bound = 0;
  auto operator<=>(const IntervalEquality&) const = default;
};

/// x_1 + ... + x_n = rank, x_i >= 0 (implicit), plus interval inequalities.
struct HRepresentation {
  int n = 0;
  int rank = 0;
  std::vector<IntervalInequality> inequalities;

  /// Membership of an integer point in the dilate t * P (strict rows as f <= t*c - 1).
  bool contains(const std::vector<long long>& x, long long t = 1) const;
};

GrassmannNecklace validate_necklace(int n, const std::vector<std::vector<int>>& raw);
/// Length of `raw` is taken as n.
GrassmannNecklace validate_necklace(const std::vector<std::vector<int>>& raw);

PositroidBases bases_from_necklace(const GrassmannNecklace& necklace);
/// J_i is the Gale-minimal basis for <_i.
GrassmannNecklace necklace_from_bases(const PositroidBases& bases);

DecoratedPermutation decorated_from_necklace(const GrassmannNecklace& necklace);
GrassmannNecklace necklace_from_decorated(const DecoratedPermutation& decorated);

/// Matroid rank of a subset given as a bitmask over [n].
int rank_of(std::uint32_t subset_mask, const PositroidBases& bases);
bool is_connected(const PositroidBases& bases);

/// No proper nonempty interval [i, j] with i <= j is mapped onto itself.
bool is_stabilized_interval_free_linear(const Permutation& pi);
/// No proper nonempty cyclic interval is mapped onto itself.
bool is_stabilized_interval_free_cyclic(const Permutation& pi);

struct DirectSumComponent {
  /// Original labels, increasing.
  std::vector<int> ground;
  /// Bases relabelled to [ground.size()] preserving order.
  PositroidBases bases;
};

/// Finest decomposition into connected components, ordered by least element.
std::vector<DirectSumComponent> decompose_direct_sum(const PositroidBases& bases);

HRepresentation h_representation(const GrassmannNecklace& necklace);

/// Basis indicator vectors, in the basis order.
std::vector<std::vector<int>> vertices(const PositroidBases& bases);

/// Every size-r subset of [n] as a bitmask, increasing.
std::vector<std::uint32_t> all_subsets_of_size(int n, int r);

/// All decorated permutations of [n] in lexicographic order (pi first, then
/// colors with black before white).
std::vector<DecoratedPermutation> all_decorated_permutations(int n);

}  // namespace positroid
