#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "positroid/lattice_geometry.hpp"
#include "positroid/positroid_model.hpp"
#include "test_support.hpp"

#include <algorithm>
#include <set>

using namespace positroid;
using testing_support::necklace;

namespace {

std::vector<std::string> basis_strings(const PositroidBases& b) {
  std::vector<std::string> out;
  for (const auto& s : b.bases()) out.push_back(s.to_string());
  return out;
}

PositroidBases bases_of(int n, std::initializer_list<std::vector<int>> list) {
  std::vector<KSubset> v;
  for (const auto& s : list) v.emplace_back(n, s);
  return PositroidBases(n, v);
}

// sum_{k} n!/k!
long decorated_count(int n) {
  long total = 0, term = 1;
  for (int k = n; k >= 0; --k) {
    total += term;
    term *= k;
  }
  return total;
}

bool holds(const HRepresentation& h, const std::vector<int>& point) {
  std::vector<long long> x(point.begin(), point.end());
  return h.contains(x);
}

}  // namespace

TEST_CASE("necklace validation") {
  const auto pyramid = necklace("12,23,13,14");
  CHECK(pyramid.n() == 4);
  CHECK(pyramid.rank() == 2);
  CHECK(necklace("123,235,345,145,125").rank() == 3);
  CHECK_THROWS_AS(validate_necklace(4, {{1, 2}, {3, 4}}), ValidationError);
  try {
    validate_necklace(4, {{1, 2}, {2, 3}, {1, 3}, {2, 4}});
    FAIL("accepted a broken exchange step");
  } catch (const ValidationError& e) {
    CHECK(e.index() > 0);
  }
  CHECK_THROWS_AS(validate_necklace(3, {{1, 1}, {2, 3}, {3, 1}}), std::invalid_argument);
}

TEST_CASE("bases from necklaces") {
  CHECK(basis_strings(bases_from_necklace(necklace("12,23,13,14"))) ==
        std::vector<std::string>{"12", "13", "14", "23", "24"});
  CHECK(bases_from_necklace(necklace("12,23,34,45,15")).size() == 10);
  CHECK(basis_strings(bases_from_necklace(necklace("124,234,134,145,125"))) ==
        std::vector<std::string>{"124", "125", "134", "135", "145", "234", "235", "245"});
}

TEST_CASE("necklaces from bases") {
  CHECK(necklace_from_bases(bases_of(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}})) == necklace("12,23,13,14"));
  std::vector<KSubset> all;
  for (auto m : all_subsets_of_size(5, 2)) all.push_back(KSubset::from_mask(5, m));
  CHECK(necklace_from_bases(PositroidBases(5, all)).to_string() == "12,23,34,45,15");
  const auto square = bases_of(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
  CHECK(bases_from_necklace(necklace_from_bases(square)) == square);
}

TEST_CASE("decorated permutations") {
  CHECK(decorated_from_necklace(necklace("12,23,13,14")).to_string() == "3142");
  CHECK(decorated_from_necklace(necklace("12,23,34,45,15")).pi.to_string() == "34512");
  const DecoratedPermutation loops = decorated_from_necklace(validate_necklace(2, {{1}, {1}}));
  CHECK(loops.pi == Permutation::identity(2));
  CHECK(loops.colors.at(1) == FixedPointColor::white);
  CHECK(loops.colors.at(2) == FixedPointColor::black);

  CHECK(necklace_from_decorated({Permutation::parse("3142"), {}}) == necklace("12,23,13,14"));
  CHECK(necklace_from_decorated({Permutation::parse("34512"), {}}) == necklace("12,23,34,45,15"));
  DecoratedPermutation coloops{Permutation::identity(3), {}};
  for (int a = 1; a <= 3; ++a) coloops.colors[a] = FixedPointColor::white;
  const auto full = necklace_from_decorated(coloops);
  CHECK(full.rank() == 3);
  for (int i = 1; i <= 3; ++i) CHECK(full.at(i).size() == 3);

  DecoratedPermutation missing{Permutation::identity(2), {{1, FixedPointColor::white}}};
  CHECK_THROWS_AS(missing.validate(), ValidationError);
}

TEST_CASE("decorated permutation enumeration has the expected size") {
  for (int n = 1; n <= 6; ++n) {
    const auto all = all_decorated_permutations(n);
    CHECK(static_cast<long>(all.size()) == decorated_count(n));
    CHECK(std::is_sorted(all.begin(), all.end()));
  }
}

TEST_CASE("round trips are identities for n <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& d : all_decorated_permutations(n)) {
      const GrassmannNecklace j = necklace_from_decorated(d);
      REQUIRE(decorated_from_necklace(j) == d);
      REQUIRE(validate_necklace(n, [&] {
                std::vector<std::vector<int>> raw;
                for (const auto& s : j.subsets()) raw.push_back(s.elements());
                return raw;
              }()) == j);
      const PositroidBases b = bases_from_necklace(j);
      REQUIRE(b.satisfies_exchange_axiom());
      REQUIRE(necklace_from_bases(b) == j);
    }
}

TEST_CASE("necklace closure contains every matroid on four elements") {
  // Every nonempty family of 2-subsets of [4] satisfying the exchange axiom.
  const auto masks = all_subsets_of_size(4, 2);
  int matroids = 0, positroids = 0;
  for (std::uint32_t family = 1; family < (1u << masks.size()); ++family) {
    std::vector<KSubset> list;
    for (std::size_t b = 0; b < masks.size(); ++b)
      if ((family >> b) & 1u) list.push_back(KSubset::from_mask(4, masks[b]));
    const PositroidBases m(4, list);
    if (!m.satisfies_exchange_axiom()) continue;
    ++matroids;
    const PositroidBases closure = bases_from_necklace(necklace_from_bases(m));
    for (const auto& s : m.bases()) REQUIRE(closure.contains(s.mask()));
    if (closure == m) ++positroids;
  }
  CHECK(matroids > positroids);
  CHECK(positroids > 0);
  // 1 parallel to 3 and 2 parallel to 4: parallel classes that are not cyclic intervals
  const auto crossed = bases_of(4, {{1, 2}, {1, 4}, {2, 3}, {3, 4}});
  CHECK(crossed.satisfies_exchange_axiom());
  CHECK_FALSE(bases_from_necklace(necklace_from_bases(crossed)) == crossed);
}

TEST_CASE("matroid rank") {
  const auto pyramid = bases_from_necklace(necklace("12,23,13,14"));
  CHECK(rank_of(0b1111, pyramid) == 2);
  CHECK(rank_of(0, pyramid) == 0);
  CHECK(rank_of(0b1100, pyramid) == 1);
}

TEST_CASE("connectivity and direct sums") {
  CHECK(is_connected(bases_from_necklace(necklace("12,23,13,14"))));
  CHECK(is_connected(bases_from_necklace(necklace("12,23,34,45,15"))));
  const auto square = bases_of(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
  CHECK_FALSE(is_connected(square));
  const auto parts = decompose_direct_sum(square);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].ground == std::vector<int>{1, 2});
  CHECK(parts[1].ground == std::vector<int>{3, 4});
  CHECK(basis_strings(parts[0].bases) == std::vector<std::string>{"1", "2"});
  CHECK(decompose_direct_sum(bases_from_necklace(necklace("12,23,13,14"))).size() == 1);
  DecoratedPermutation coloops{Permutation::identity(4), {}};
  for (int a = 1; a <= 4; ++a) coloops.colors[a] = FixedPointColor::white;
  CHECK(decompose_direct_sum(bases_from_necklace(necklace_from_decorated(coloops))).size() == 4);
  CHECK(decorated_from_necklace(necklace_from_bases(square)).pi.to_string() == "2143");
}

TEST_CASE("rank split connectivity agrees with interval-free permutations") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& d : all_decorated_permutations(n)) {
      const bool connected = is_connected(bases_from_necklace(necklace_from_decorated(d)));
      REQUIRE(connected == is_stabilized_interval_free_cyclic(d.pi));
      REQUIRE(connected == is_stabilized_interval_free_linear(d.pi));
    }
}

TEST_CASE("interval inequalities cut out exactly the bases") {
  const auto pyramid = h_representation(necklace("12,23,13,14"));
  CHECK(holds(pyramid, {1, 1, 0, 0}));
  CHECK_FALSE(holds(pyramid, {0, 0, 1, 1}));
  for (int n = 1; n <= 6; ++n)
    for (const auto& d : all_decorated_permutations(n)) {
      const GrassmannNecklace j = necklace_from_decorated(d);
      const PositroidBases b = bases_from_necklace(j);
      const HRepresentation h = h_representation(j);
      for (std::uint32_t m : all_subsets_of_size(n, j.rank()))
        REQUIRE(holds(h, KSubset::from_mask(n, m).indicator()) == b.contains(m));
    }
}

TEST_CASE("uniform necklace has only box constraints") {
  const auto h = h_representation(necklace("12,23,34,45,15"));
  for (const auto& q : h.inequalities) {
    const auto idx = q.interval.sum_indices();
    const bool box = idx.size() == 1 || idx.size() == 4;  // x_a <= 1, or its complement form
    CHECK(box);
  }
}

TEST_CASE("vertices and dimension") {
  std::set<std::vector<int>> got;
  for (const auto& v : vertices(bases_from_necklace(necklace("12,23,13,14")))) got.insert(v);
  CHECK(got == std::set<std::vector<int>>{{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}});
  CHECK(vertices(bases_of(2, {{1, 2}})) == std::vector<std::vector<int>>{{1, 1}});
  for (int n = 2; n <= 6; ++n)
    for (const auto& d : all_decorated_permutations(n)) {
      const PositroidBases b = bases_from_necklace(necklace_from_decorated(d));
      if (!is_connected(b)) continue;
      REQUIRE(geometry::affine_dimension(vertices(b)) == n - 1);
    }
}
