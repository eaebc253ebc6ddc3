#include "positroid/combinatorics.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace positroid {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  if (n < 1) throw std::invalid_argument("permutation must have at least one letter");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int a : word_) {
    if (a < 1 || a > n) throw std::invalid_argument("permutation letter " + std::to_string(a) + " outside [n]");
    if (seen[static_cast<std::size_t>(a)])
      throw std::invalid_argument("permutation letter " + std::to_string(a) + " repeated");
    seen[static_cast<std::size_t>(a)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  return Permutation(std::move(word));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> word;
  const bool separated = text.find_first_of(", ") != std::string_view::npos;
  if (separated) {
    std::string token;
    auto flush = [&] {
      if (!token.empty()) word.push_back(std::stoi(token));
      token.clear();
    };
    for (char c : text) {
      if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
        flush();
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        token += c;
      } else {
        throw std::invalid_argument("unexpected character in permutation: " + std::string(text));
      }
    }
    flush();
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("unexpected character in permutation: " + std::string(text));
      word.push_back(c - '0');
    }
  }
  return Permutation(std::move(word));
}

int Permutation::position_of(int letter) const {
  auto it = std::find(word_.begin(), word_.end(), letter);
  if (it == word_.end()) throw std::invalid_argument("letter " + std::to_string(letter) + " not in permutation");
  return static_cast<int>(it - word_.begin()) + 1;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (std::size_t p = 0; p < word_.size(); ++p) inv[static_cast<std::size_t>(word_[p] - 1)] = static_cast<int>(p) + 1;
  return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
  const bool compact = size() <= 9;
  std::string out;
  for (std::size_t p = 0; p < word_.size(); ++p) {
    if (!compact && p > 0) out += ',';
    out += std::to_string(word_[p]);
  }
  return out;
}

std::vector<int> CyclicInterval::members() const {
  std::vector<int> out;
  for (int a = start;; a = wrap_index(a + 1, n)) {
    out.push_back(a);
    if (a == end) break;
  }
  return out;
}

std::vector<int> CyclicInterval::sum_indices() const {
  std::vector<int> out;
  for (int a = start; a != end; a = wrap_index(a + 1, n)) out.push_back(a);
  return out;
}

std::uint32_t CyclicInterval::sum_mask() const {
  std::uint32_t m = 0;
  for (int a : sum_indices()) m |= 1u << (a - 1);
  return m;
}

KSubset::KSubset(int n, std::vector<int> elements) : n_(n), elements_(std::move(elements)) {
  if (n < 0 || n > 31) throw std::invalid_argument("ground set size must lie in [0, 31]");
  std::sort(elements_.begin(), elements_.end());
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    const int a = elements_[k];
    if (a < 1 || a > n) throw std::invalid_argument("subset element " + std::to_string(a) + " outside [n]");
    if (k > 0 && elements_[k - 1] == a)
      throw std::invalid_argument("subset element " + std::to_string(a) + " repeated");
    mask_ |= 1u << (a - 1);
  }
}

KSubset KSubset::from_mask(int n, std::uint32_t mask) {
  std::vector<int> elements;
  for (int a = 1; a <= n; ++a)
    if ((mask >> (a - 1)) & 1u) elements.push_back(a);
  return KSubset(n, std::move(elements));
}

std::vector<int> KSubset::sorted_by_order(int i) const {
  std::vector<int> out = elements_;
  std::sort(out.begin(), out.end(),
            [&](int a, int b) { return rank_in_order(a, i, n_) < rank_in_order(b, i, n_); });
  return out;
}

std::vector<int> KSubset::indicator() const {
  std::vector<int> out(static_cast<std::size_t>(n_), 0);
  for (int a : elements_) out[static_cast<std::size_t>(a - 1)] = 1;
  return out;
}

std::string KSubset::to_string() const {
  const bool compact = n_ <= 9;
  std::string out;
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (!compact && k > 0) out += ' ';
    out += std::to_string(elements_[k]);
  }
  return out;
}

bool gale_leq(const KSubset& s, const KSubset& t, int i) {
  if (s.size() != t.size()) throw std::invalid_argument("Gale order compares subsets of equal size");
  if (s.n() != t.n()) throw std::invalid_argument("Gale order compares subsets of the same ground set");
  const int n = s.n();
  if (i < 1 || i > n) throw std::invalid_argument("Gale order index outside [n]");
  const auto ss = s.sorted_by_order(i);
  const auto ts = t.sorted_by_order(i);
  for (std::size_t k = 0; k < ss.size(); ++k)
    if (rank_in_order(ss[k], i, n) > rank_in_order(ts[k], i, n)) return false;
  return true;
}

std::vector<int> cyclic_left_descent_set(const OrderedWord& word) {
  const std::size_t m = word.ground.size();
  if (m == 0) throw std::invalid_argument("cyclic left descents need a nonempty ground set");
  if (word.letters.size() != m) throw std::invalid_argument("word is not a permutation of its ground set");
  std::unordered_map<int, std::size_t> position;
  for (std::size_t p = 0; p < m; ++p) position.emplace(word.letters[p], p);
  if (position.size() != m) throw std::invalid_argument("word repeats a letter");
  for (int g : word.ground)
    if (!position.contains(g)) throw std::invalid_argument("word is not a permutation of its ground set");
  std::vector<int> out;
  if (m == 1) return out;
  for (std::size_t k = 0; k + 1 < m; ++k)
    if (position[word.ground[k]] > position[word.ground[k + 1]]) out.push_back(word.ground[k]);
  if (position[word.ground.front()] < position[word.ground.back()]) out.push_back(word.ground.back());
  return out;
}

std::vector<int> cyclic_left_descent_set(const Permutation& w) {
  OrderedWord word{w.word(), {}};
  word.ground.resize(w.word().size());
  std::iota(word.ground.begin(), word.ground.end(), 1);
  return cyclic_left_descent_set(word);
}

int cyclic_left_descent_count(const OrderedWord& word) {
  return static_cast<int>(cyclic_left_descent_set(word).size());
}

int cyclic_left_descent_count(const Permutation& w) {
  return static_cast<int>(cyclic_left_descent_set(w).size());
}

OrderedWord restrict(const Permutation& w, const CyclicInterval& interval) {
  if (interval.n != w.size()) throw std::invalid_argument("interval and permutation disagree on n");
  OrderedWord out;
  out.ground = interval.members();
  std::vector<bool> inside(static_cast<std::size_t>(w.size()) + 1, false);
  for (int a : out.ground) inside[static_cast<std::size_t>(a)] = true;
  for (int a : w.word())
    if (inside[static_cast<std::size_t>(a)]) out.letters.push_back(a);
  return out;
}

Permutation rotation_ending_at(const Permutation& w, int a) {
  const int n = w.size();
  if (a < 1 || a > n) throw std::invalid_argument("rotation target outside [n]");
  const int p = w.position_of(a);
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) word.push_back(w.at(wrap_index(p + k, n)));
  return Permutation(std::move(word));
}

std::vector<KSubset> circuit_subsets(const Permutation& w) {
  const int n = w.size();
  if (w.last() != n) throw std::invalid_argument("circuit labels must end with n");
  std::vector<KSubset> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int a : w.word()) out.emplace_back(n, cyclic_left_descent_set(rotation_ending_at(w, a)));
  return out;
}

int descent_count(std::span<const int> word) {
  int d = 0;
  for (std::size_t p = 0; p + 1 < word.size(); ++p)
    if (word[p] > word[p + 1]) ++d;
  return d;
}

std::vector<Permutation> permutations_fixing_last(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<int> head(static_cast<std::size_t>(n - 1));
  std::iota(head.begin(), head.end(), 1);
  std::vector<Permutation> out;
  do {
    std::vector<int> word = head;
    word.push_back(n);
    out.emplace_back(std::move(word));
  } while (std::next_permutation(head.begin(), head.end()));
  return out;
}

}  // namespace positroid
