#include "positroid/positroid_model.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace positroid {

namespace {

std::string subset_list(const std::vector<KSubset>& subsets) {
  std::string out;
  for (std::size_t k = 0; k < subsets.size(); ++k) {
    if (k > 0) out += ',';
    out += subsets[k].to_string();
  }
  return out;
}

// Key for comparing subsets in the lexicographic order induced by <_i.
std::vector<int> order_key(const KSubset& s, int i) {
  std::vector<int> key;
  for (int a : s.sorted_by_order(i)) key.push_back(rank_in_order(a, i, s.n()));
  return key;
}

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[static_cast<std::size_t>(a)] != a) a = parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

}  // namespace

std::string GrassmannNecklace::to_string() const { return subset_list(subsets_); }

void DecoratedPermutation::validate() const {
  for (int i = 1; i <= n(); ++i) {
    const bool fixed = pi.at(i) == i;
    const bool colored = colors.contains(i);
    if (fixed && !colored) throw ValidationError(i, "fixed point " + std::to_string(i) + " has no color");
    if (!fixed && colored) throw ValidationError(i, "non-fixed point " + std::to_string(i) + " carries a color");
  }
  for (const auto& [point, color] : colors)
    if (point < 1 || point > n()) throw ValidationError(point, "colored point outside [n]");
}

std::string DecoratedPermutation::to_string() const {
  std::string out = pi.to_string();
  if (!colors.empty()) {
    out += " [";
    bool first = true;
    for (const auto& [point, color] : colors) {
      if (!first) out += ',';
      first = false;
      out += std::to_string(point) + (color == FixedPointColor::white ? ":white" : ":black");
    }
    out += ']';
  }
  return out;
}

PositroidBases::PositroidBases(int n, std::vector<KSubset> bases) : n_(n), bases_(std::move(bases)) {
  if (bases_.empty()) throw std::invalid_argument("a matroid needs at least one basis");
  rank_ = bases_.front().size();
  for (const auto& b : bases_) {
    if (b.n() != n) throw std::invalid_argument("basis over the wrong ground set");
    if (b.size() != rank_) throw std::invalid_argument("bases of unequal size");
  }
  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  for (const auto& b : bases_) masks_.push_back(b.mask());
  std::sort(masks_.begin(), masks_.end());
}

bool PositroidBases::contains(std::uint32_t mask) const {
  return std::binary_search(masks_.begin(), masks_.end(), mask);
}

bool PositroidBases::satisfies_exchange_axiom() const {
  for (std::uint32_t b1 : masks_) {
    for (std::uint32_t b2 : masks_) {
      for (std::uint32_t rest = b1 & ~b2; rest; rest &= rest - 1) {
        const std::uint32_t drop = rest & -rest;
        bool found = false;
        for (std::uint32_t add_set = b2 & ~b1; add_set && !found; add_set &= add_set - 1)
          found = contains((b1 & ~drop) | (add_set & -add_set));
        if (!found) return false;
      }
    }
  }
  return true;
}

bool HRepresentation::contains(const std::vector<long long>& x, long long t) const {
  if (static_cast<int>(x.size()) != n) return false;
  long long total = 0;
  for (long long v : x) {
    if (v < 0) return false;
    total += v;
  }
  if (total != t * rank) return false;
  for (const auto& ineq : inequalities) {
    long long s = 0;
    for (int a : ineq.interval.sum_indices()) s += x[static_cast<std::size_t>(a - 1)];
    const long long bound = t * ineq.bound;
    if (ineq.sense == Sense::less_equal) {
      if (ineq.strict ? s > bound - 1 : s > bound) return false;
    } else {
      if (ineq.strict ? s < bound + 1 : s < bound) return false;
    }
  }
  return true;
}

GrassmannNecklace validate_necklace(int n, const std::vector<std::vector<int>>& raw) {
  if (n < 1) throw ValidationError(0, "necklace needs n >= 1");
  if (static_cast<int>(raw.size()) != n)
    throw ValidationError(0, "necklace has " + std::to_string(raw.size()) + " entries, expected n = " + std::to_string(n));
  GrassmannNecklace out;
  out.n_ = n;
  for (int i = 1; i <= n; ++i) {
    try {
      out.subsets_.emplace_back(n, raw[static_cast<std::size_t>(i - 1)]);
    } catch (const std::invalid_argument& e) {
      throw ValidationError(i, "entry " + std::to_string(i) + ": " + e.what());
    }
  }
  out.rank_ = out.subsets_.front().size();
  for (int i = 1; i <= n; ++i)
    if (out.at(i).size() != out.rank_)
      throw ValidationError(i, "entry " + std::to_string(i) + " has size " + std::to_string(out.at(i).size()) +
                                   ", expected " + std::to_string(out.rank_));
  for (int i = 1; i <= n; ++i) {
    const KSubset& cur = out.at(i);
    const KSubset& next = out.at(wrap_index(i + 1, n));
    const std::uint32_t bit = 1u << (i - 1);
    bool ok;
    if (cur.contains(i)) {
      ok = (next.mask() & (cur.mask() & ~bit)) == (cur.mask() & ~bit);
    } else {
      ok = next.mask() == cur.mask();
    }
    if (!ok) throw ValidationError(i, "successor rule violated between J_" + std::to_string(i) + " and J_" +
                                          std::to_string(wrap_index(i + 1, n)));
  }
  return out;
}

GrassmannNecklace validate_necklace(const std::vector<std::vector<int>>& raw) {
  return validate_necklace(static_cast<int>(raw.size()), raw);
}

std::vector<std::uint32_t> all_subsets_of_size(int n, int r) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    if (std::popcount(m) == r) out.push_back(m);
  return out;
}

PositroidBases bases_from_necklace(const GrassmannNecklace& necklace) {
  const int n = necklace.n();
  std::vector<KSubset> bases;
  for (std::uint32_t m : all_subsets_of_size(n, necklace.rank())) {
    const KSubset b = KSubset::from_mask(n, m);
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) ok = gale_leq(necklace.at(i), b, i);
    if (ok) bases.push_back(b);
  }
  return PositroidBases(n, std::move(bases));
}

GrassmannNecklace necklace_from_bases(const PositroidBases& bases) {
  const int n = bases.n();
  std::vector<std::vector<int>> raw;
  for (int i = 1; i <= n; ++i) {
    const KSubset* best = &bases.bases().front();
    auto best_key = order_key(*best, i);
    for (const auto& b : bases.bases()) {
      auto key = order_key(b, i);
      if (key < best_key) {
        best = &b;
        best_key = std::move(key);
      }
    }
    raw.push_back(best->elements());
  }
  return validate_necklace(n, raw);
}

DecoratedPermutation decorated_from_necklace(const GrassmannNecklace& necklace) {
  const int n = necklace.n();
  std::vector<int> word(static_cast<std::size_t>(n));
  std::map<int, FixedPointColor> colors;
  for (int i = 1; i <= n; ++i) {
    const KSubset& cur = necklace.at(i);
    const KSubset& next = necklace.at(wrap_index(i + 1, n));
    const std::uint32_t entering = next.mask() & ~cur.mask();
    if (entering == 0) {
      word[static_cast<std::size_t>(i - 1)] = i;
      colors[i] = cur.contains(i) ? FixedPointColor::white : FixedPointColor::black;
    } else {
      word[static_cast<std::size_t>(i - 1)] = std::countr_zero(entering) + 1;
    }
  }
  return {Permutation(std::move(word)), std::move(colors)};
}

GrassmannNecklace necklace_from_decorated(const DecoratedPermutation& decorated) {
  decorated.validate();
  const int n = decorated.n();
  const Permutation inv = decorated.pi.inverse();
  std::vector<std::vector<int>> raw(static_cast<std::size_t>(n));
  for (int m = 1; m <= n; ++m) {
    for (int j = 1; j <= n; ++j) {
      const int source = inv.at(j);
      bool member;
      if (source == j) {
        member = decorated.colors.at(j) == FixedPointColor::white;
      } else {
        // m in the cyclic interval (source, j]
        const int from = wrap_index(source + 1, n);
        member = rank_in_order(m, from, n) <= rank_in_order(j, from, n);
      }
      if (member) raw[static_cast<std::size_t>(m - 1)].push_back(j);
    }
  }
  return validate_necklace(n, raw);
}

int rank_of(std::uint32_t subset_mask, const PositroidBases& bases) {
  int best = 0;
  for (const auto& b : bases.bases()) best = std::max(best, std::popcount(b.mask() & subset_mask));
  return best;
}

bool is_connected(const PositroidBases& bases) {
  const int n = bases.n();
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  for (std::uint32_t a = 1; a < full; ++a) {
    if (!(a & 1u)) continue;  // complements cover the rest
    if (rank_of(a, bases) + rank_of(full & ~a, bases) == bases.rank()) return false;
  }
  return true;
}

namespace {

bool stabilizes(const Permutation& pi, const std::vector<int>& block) {
  std::vector<bool> inside(static_cast<std::size_t>(pi.size()) + 1, false);
  for (int a : block) inside[static_cast<std::size_t>(a)] = true;
  for (int a : block)
    if (!inside[static_cast<std::size_t>(pi.at(a))]) return false;
  return true;
}

}  // namespace

bool is_stabilized_interval_free_linear(const Permutation& pi) {
  const int n = pi.size();
  for (int i = 1; i <= n; ++i) {
    std::vector<int> block;
    for (int j = i; j <= n; ++j) {
      block.push_back(j);
      if (i == 1 && j == n) break;
      if (stabilizes(pi, block)) return false;
    }
  }
  return true;
}

bool is_stabilized_interval_free_cyclic(const Permutation& pi) {
  const int n = pi.size();
  for (int i = 1; i <= n; ++i) {
    std::vector<int> block;
    for (int len = 1; len < n; ++len) {
      block.push_back(wrap_index(i + len - 1, n));
      if (stabilizes(pi, block)) return false;
    }
  }
  return true;
}

std::vector<DirectSumComponent> decompose_direct_sum(const PositroidBases& bases) {
  const int n = bases.n();
  DisjointSets sets(n);
  for (const auto& b : bases.bases()) {
    for (int i : b.elements()) {
      for (int j = 1; j <= n; ++j) {
        if (b.contains(j)) continue;
        if (bases.contains((b.mask() & ~(1u << (i - 1))) | (1u << (j - 1)))) sets.unite(i - 1, j - 1);
      }
    }
  }
  std::map<int, std::vector<int>> groups;
  for (int a = 1; a <= n; ++a) groups[sets.find(a - 1)].push_back(a);

  std::vector<DirectSumComponent> out;
  std::size_t product = 1;
  for (auto& [root, ground] : groups) {
    const int m = static_cast<int>(ground.size());
    std::vector<KSubset> restricted;
    for (const auto& b : bases.bases()) {
      std::vector<int> elements;
      for (int k = 0; k < m; ++k)
        if (b.contains(ground[static_cast<std::size_t>(k)])) elements.push_back(k + 1);
      restricted.emplace_back(m, std::move(elements));
    }
    PositroidBases component(m, std::move(restricted));
    product *= component.size();
    out.push_back({std::move(ground), std::move(component)});
  }
  if (product != bases.size()) throw std::logic_error("component bases do not multiply to the basis count");
  return out;
}

HRepresentation h_representation(const GrassmannNecklace& necklace) {
  const int n = necklace.n();
  HRepresentation h{n, necklace.rank(), {}};
  for (int i = 1; i <= n; ++i) {
    const auto sorted = necklace.sorted_entry(i);
    for (std::size_t j = 0; j < sorted.size(); ++j) {
      const CyclicInterval interval{i, sorted[j], n};
      if (interval.sum_is_empty()) continue;
      h.inequalities.push_back({interval, static_cast<long long>(j), Sense::less_equal, false});
    }
  }
  std::sort(h.inequalities.begin(), h.inequalities.end());
  h.inequalities.erase(std::unique(h.inequalities.begin(), h.inequalities.end()), h.inequalities.end());
  return h;
}

std::vector<std::vector<int>> vertices(const PositroidBases& bases) {
  std::vector<std::vector<int>> out;
  out.reserve(bases.size());
  for (const auto& b : bases.bases()) out.push_back(b.indicator());
  return out;
}

std::vector<DecoratedPermutation> all_decorated_permutations(int n) {
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  std::vector<DecoratedPermutation> out;
  do {
    std::vector<int> fixed;
    for (int i = 1; i <= n; ++i)
      if (word[static_cast<std::size_t>(i - 1)] == i) fixed.push_back(i);
    const std::size_t f = fixed.size();
    for (std::uint32_t code = 0; code < (1u << f); ++code) {
      DecoratedPermutation d{Permutation(word), {}};
      for (std::size_t k = 0; k < f; ++k) {
        const bool white = (code >> (f - 1 - k)) & 1u;
        d.colors[fixed[k]] = white ? FixedPointColor::white : FixedPointColor::black;
      }
      out.push_back(std::move(d));
    }
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

}  // namespace positroid
