#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "positroid/combinatorics.hpp"
#include "positroid/exact_polynomial.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace positroid;

namespace {

std::set<int> as_set(const std::vector<int>& v) { return {v.begin(), v.end()}; }

// Straight from the definition: i is a cyclic left descent when its successor
// in the ground order sits left of it; the largest letter wraps to the least.
std::set<int> descents_by_definition(const OrderedWord& word) {
  std::set<int> out;
  const std::size_t m = word.ground.size();
  if (m < 2) return out;
  auto pos = [&](int letter) { return std::find(word.letters.begin(), word.letters.end(), letter) - word.letters.begin(); };
  for (std::size_t g = 0; g + 1 < m; ++g)
    if (pos(word.ground[g + 1]) < pos(word.ground[g])) out.insert(word.ground[g]);
  if (pos(word.ground.front()) < pos(word.ground.back())) out.insert(word.ground.back());
  return out;
}

// S <=_i T iff every initial segment of <_i meets S at least as often as T.
bool gale_by_prefix_counts(const KSubset& s, const KSubset& t, int i) {
  const int n = s.n();
  int cs = 0, ct = 0;
  for (int step = 0; step < n; ++step) {
    const int a = wrap_index(i + step, n);
    cs += s.contains(a);
    ct += t.contains(a);
    if (cs < ct) return false;
  }
  return true;
}

std::vector<KSubset> all_subsets(int n, int k) {
  std::vector<KSubset> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    if (std::popcount(m) == k) out.push_back(KSubset::from_mask(n, m));
  return out;
}

}  // namespace

TEST_CASE("wrap_index lands in [1, n]") {
  CHECK(wrap_index(0, 5) == 5);
  CHECK(wrap_index(6, 5) == 1);
  CHECK(wrap_index(-4, 5) == 1);
  CHECK(rank_in_order(3, 3, 4) == 0);
  CHECK(rank_in_order(2, 3, 4) == 3);
}

TEST_CASE("permutation parsing and rejection") {
  CHECK(Permutation::parse("3 2 4 1 5") == Permutation::parse("32415"));
  CHECK(Permutation::parse("3,2,4,1,5").to_string() == "32415");
  CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK(Permutation::parse("2,1,3,4,5,6,7,8,9,10").to_string() == "2,1,3,4,5,6,7,8,9,10");
}

TEST_CASE("cyclic intervals") {
  const CyclicInterval wrap{4, 2, 5};
  CHECK(wrap.wraps());
  CHECK(wrap.members() == std::vector<int>{4, 5, 1, 2});
  CHECK(wrap.sum_indices() == std::vector<int>{4, 5, 1});
  CHECK(CyclicInterval{3, 3, 5}.sum_is_empty());
}

TEST_CASE("gale order examples") {
  CHECK(gale_leq(KSubset(3, {1, 3}), KSubset(3, {2, 3}), 1));
  CHECK(gale_leq(KSubset(4, {3, 1}), KSubset(4, {4, 2}), 3));
  // order 2 < 3 < 1: (2,1) against (3,1)
  CHECK(gale_leq(KSubset(3, {1, 2}), KSubset(3, {1, 3}), 2));
  CHECK_FALSE(gale_leq(KSubset(3, {1, 3}), KSubset(3, {1, 2}), 2));
}

TEST_CASE("gale order matches prefix counts and is a partial order") {
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= n; ++k) {
      const auto subsets = all_subsets(n, k);
      for (int i = 1; i <= n; ++i)
        for (const auto& s : subsets) {
          CHECK(gale_leq(s, s, i));
          for (const auto& t : subsets) {
            REQUIRE(gale_leq(s, t, i) == gale_by_prefix_counts(s, t, i));
            if (gale_leq(s, t, i) && gale_leq(t, s, i)) CHECK(s == t);
            for (const auto& u : subsets)
              if (gale_leq(s, t, i) && gale_leq(t, u, i)) CHECK(gale_leq(s, u, i));
          }
        }
    }
}

TEST_CASE("cyclic left descents") {
  CHECK(as_set(cyclic_left_descent_set(Permutation::parse("24135"))) == std::set<int>{1, 3, 5});
  CHECK(as_set(cyclic_left_descent_set(Permutation::parse("12345"))) == std::set<int>{5});
  const OrderedWord r = restrict(Permutation::parse("32415"), CyclicInterval{1, 3, 5});
  CHECK(r.letters == std::vector<int>{3, 2, 1});
  CHECK(as_set(cyclic_left_descent_set(r)) == std::set<int>{1, 2});
  CHECK(cyclic_left_descent_count(OrderedWord{{4}, {4}}) == 0);
}

TEST_CASE("restriction to cyclic intervals") {
  const Permutation w = Permutation::parse("32415");
  const OrderedWord wrap = restrict(w, CyclicInterval{3, 1, 5});
  CHECK(wrap.letters == std::vector<int>{3, 4, 1, 5});
  CHECK(wrap.ground == std::vector<int>{3, 4, 5, 1});
  CHECK(restrict(w, CyclicInterval{4, 4, 5}).letters == std::vector<int>{4});
}

TEST_CASE("cyclic left descents agree with the definition on random words") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    std::vector<int> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    std::shuffle(word.begin(), word.end(), rng);
    const Permutation w(word);
    const int i = 1 + static_cast<int>(rng() % n), j = 1 + static_cast<int>(rng() % n);
    const OrderedWord r = restrict(w, CyclicInterval{i, j, n});
    REQUIRE(as_set(cyclic_left_descent_set(r)) == descents_by_definition(r));
  }
}

TEST_CASE("rotations") {
  const Permutation w = Permutation::parse("32415");
  CHECK(rotation_ending_at(w, 3).to_string() == "24153");
  CHECK(rotation_ending_at(w, 5) == w);
  CHECK(rotation_ending_at(Permutation::parse("1234"), 1).to_string() == "2341");
}

TEST_CASE("circuit subsets") {
  std::vector<std::string> got;
  for (const auto& s : circuit_subsets(Permutation::parse("32415"))) got.push_back(s.to_string());
  CHECK(got == std::vector<std::string>{"135", "235", "245", "124", "125"});
  got.clear();
  for (const auto& s : circuit_subsets(Permutation::parse("2314"))) got.push_back(s.to_string());
  CHECK(got == std::vector<std::string>{"24", "34", "13", "14"});
  got.clear();
  for (const auto& s : circuit_subsets(Permutation::identity(4))) got.push_back(s.to_string());
  CHECK(got == std::vector<std::string>{"1", "2", "3", "4"});
}

TEST_CASE("circuit subsets are distinct with a constant size") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& w : permutations_fixing_last(n)) {
      const auto circuit = circuit_subsets(w);
      std::set<std::uint32_t> masks;
      for (const auto& s : circuit) masks.insert(s.mask());
      REQUIRE(masks.size() == static_cast<std::size_t>(n));
      for (int a = 1; a <= n; ++a)
        REQUIRE(cyclic_left_descent_count(rotation_ending_at(w, a)) == circuit.front().size());
    }
}

TEST_CASE("descent counts") {
  CHECK(descent_count(std::vector<int>{2, 4, 1, 3}) == 1);
  CHECK(descent_count(std::vector<int>{1, 2, 3}) == 0);
  CHECK(descent_count(std::vector<int>{3, 4, 2, 1}) == 2);
}

TEST_CASE("permutations ending in n") {
  const auto all = permutations_fixing_last(4);
  CHECK(all.size() == 6);
  CHECK(std::is_sorted(all.begin(), all.end()));
  for (const auto& w : all) CHECK(w.last() == 4);
}

TEST_CASE("polynomial arithmetic is exact") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> coeff(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<mpq_class> a, b;
    for (int i = 0; i < 4; ++i) a.push_back(mpq_class(coeff(rng)) / static_cast<long>(1 + rng() % 5));
    for (int i = 0; i < 3; ++i) b.push_back(mpq_class(coeff(rng)) / static_cast<long>(1 + rng() % 5));
    const ExactPolynomial p(a), q(b);
    const mpq_class t = mpq_class(coeff(rng)) / static_cast<long>(1 + rng() % 4);
    CHECK((p * q).evaluate(t) == p.evaluate(t) * q.evaluate(t));
    CHECK((p + q).evaluate(t) == p.evaluate(t) + q.evaluate(t));
    CHECK((p - p).is_zero());
  }
  CHECK(ExactPolynomial::one_minus_z_power(2) == ExactPolynomial({1, -2, 1}));
  CHECK(ExactPolynomial({1, 4, 3}).to_string() == "1 + 4z + 3z^2");
  CHECK(ExactPolynomial::shifted_binomial(2, 2).evaluate(3) == 10);
  CHECK_THROWS_AS(ExactPolynomial(std::vector<mpq_class>{mpq_class(1, 2)}).integer_coefficients(), std::domain_error);
}
