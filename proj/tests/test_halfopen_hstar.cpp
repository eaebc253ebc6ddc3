#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "positroid/ehrhart_oracle.hpp"
#include "positroid/halfopen_hstar.hpp"
#include "test_support.hpp"

#include <map>
#include <set>

using namespace positroid;
using testing_support::necklace;
using testing_support::poly;

namespace {

std::vector<std::string> facet_strings(const std::vector<CanonicalFacet>& facets, bool upper) {
  std::vector<std::string> out;
  for (const auto& f : facets)
    if (f.upper == upper) out.push_back(f.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GrassmannNecklace> connected_necklaces(int max_n) {
  std::vector<GrassmannNecklace> out;
  for (int n = 2; n <= max_n; ++n)
    for (const auto& d : all_decorated_permutations(n)) {
      const GrassmannNecklace j = necklace_from_decorated(d);
      if (is_connected(bases_from_necklace(j))) out.push_back(j);
    }
  return out;
}

// (dim, vertex count) -> Moebius values, sorted
std::map<std::pair<int, int>, std::multiset<long long>> poset_shape(const FacePoset& p) {
  const auto mu = moebius(p);
  std::map<std::pair<int, int>, std::multiset<long long>> out;
  for (std::size_t i = 1; i < p.nodes.size(); ++i)
    out[{p.nodes[i].dim, static_cast<int>(p.nodes[i].vertex_set.size())}].insert(mu[i]);
  return out;
}

}  // namespace

TEST_CASE("canonical facets of the worked examples") {
  const auto pyramid = canonical_facets(necklace("12,23,13,14"));
  CHECK(facet_strings(pyramid, true) == std::vector<std::string>{"x1 <= 1", "x1+x2+x3 <= 2", "x2 <= 1"});
  CHECK(facet_strings(pyramid, false) == std::vector<std::string>{"x1+x2 >= 1", "x3 >= 0"});
  CHECK(facet_strings(canonical_facets(necklace("124,234,134,145,125")), true) ==
        std::vector<std::string>{"x1 <= 1", "x1+x2+x3 <= 2", "x2 <= 1", "x4 <= 1"});
  CHECK(facet_strings(canonical_facets(necklace("12,23,34,45,15")), true) ==
        std::vector<std::string>{"x1 <= 1", "x1+x2+x3+x4 <= 2", "x2 <= 1", "x3 <= 1", "x4 <= 1"});
  CHECK_THROWS_AS(canonical_facets(necklace_from_decorated({Permutation::parse("2143"), {}})), DisconnectedInput);
}

TEST_CASE("half-open h* of the worked examples") {
  CHECK(hstar_half_open(necklace("124,234,134,145,125")) == poly({0, 0, 1, 4}));
  CHECK(hstar_half_open(necklace("12,23,13,14")) == poly({0, 0, 2}));
  CHECK(hstar_half_open(necklace("12,23,34,45,15")) == poly({0, 0, 10, 1}));
  CHECK(hstar_half_open_oracle(necklace("12,23,34,45,15")) == poly({0, 0, 10, 1}));
}

TEST_CASE("closed h* by inclusion-exclusion") {
  CHECK(hstar_closed_via_inclusion_exclusion(necklace("12,23,13,14")) == poly({1, 1}));
  CHECK(hstar_closed_via_inclusion_exclusion(necklace("124,234,134,145,125")) == poly({1, 3, 1}));
  CHECK(hstar_closed_via_inclusion_exclusion(necklace("12,23,34,45,15")) == poly({1, 5, 5}));
  CHECK(hstar_closed_via_inclusion_exclusion(necklace("123,235,345,145,125")) == poly({1, 4, 3}));
}

TEST_CASE("half-open cube simplices") {
  CHECK(cube_simplex_description(Permutation::parse("3241")) == "0 < y3 < y2 <= y4 < y1 <= 1");
  // Every point of a grid in (0, 1]^4 lies in exactly one half-open simplex.
  const int m = 3;
  const auto perms = [] {
    std::vector<Permutation> all;
    std::vector<int> w = {1, 2, 3, 4};
    do all.emplace_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return all;
  }();
  for (int code = 0; code < m * m * m * m; ++code) {
    std::vector<mpq_class> y;
    for (int c = code, k = 0; k < 4; ++k, c /= m) y.push_back(mpq_class(c % m + 1) / m);
    int hits = 0;
    for (const auto& u : perms) hits += in_cube_simplex(u, y);
    REQUIRE(hits == 1);
  }
  CHECK_FALSE(in_cube_simplex(Permutation::parse("12"), {0, mpq_class(1, 2)}));
}

TEST_CASE("half-open standard simplex") {
  const HRepresentation h = half_open_simplex(TriangulationLabel(Permutation::identity(4)));
  int strict = 0;
  for (const auto& q : h.inequalities)
    if (q.strict) {
      ++strict;
      CHECK(q.interval.start == 1);
      CHECK(q.interval.end == 4);
    }
  CHECK(strict == 1);
}

TEST_CASE("half-open simplices partition the half-open region") {
  const auto check = [](const GrassmannNecklace& j, int tmax) {
    const HRepresentation region = facet_region(j, true);
    std::vector<HRepresentation> pieces;
    for (const auto& label : enumerate_labels(j)) pieces.push_back(half_open_simplex(label));
    for (long long t = 0; t <= tmax; ++t) {
      long long sum = 0;
      for (const auto& piece : pieces) sum += count_points(piece, t);
      REQUIRE_MESSAGE(sum == count_points(region, t), j.to_string() << " t=" << t);
    }
  };
  check(necklace("124,234,134,145,125"), 4);
  for (const auto& j : connected_necklaces(5)) check(j, j.n() - 1);
}

TEST_CASE("half-open h* invariants up to n = 6") {
  for (const auto& j : connected_necklaces(6)) {
    const ExactPolynomial h = hstar_half_open(j);
    REQUIRE(h.coefficient(0) == 0);
    REQUIRE(h.evaluate(1) == static_cast<long>(enumerate_labels(j).size()));
    REQUIRE(h == hstar_half_open_oracle(j));
    REQUIRE(hstar_closed_via_inclusion_exclusion(j) == hstar_oracle(j));
  }
}

TEST_CASE("face posets and Moebius values") {
  const FacePoset pyramid = face_poset_of_uppers(necklace("12,23,13,14"));
  CHECK(pyramid.uppers.size() == 3);
  CHECK(poset_shape(pyramid) == std::map<std::pair<int, int>, std::multiset<long long>>{
                                    {{2, 3}, {-1, -1, -1}}, {{1, 2}, {1, 1}}, {{0, 1}, {0}}});
  CHECK(moebius(pyramid)[0] == 1);

  const FacePoset ex = face_poset_of_uppers(necklace("124,234,134,145,125"));
  CHECK(ex.uppers.size() == 4);
  CHECK(poset_shape(ex) == std::map<std::pair<int, int>, std::multiset<long long>>{
                               {{3, 5}, {-1, -1, -1}},  // pyramids
                               {{3, 6}, {-1}},          // prism
                               {{2, 3}, {1, 1, 1}},
                               {{2, 4}, {1, 1}},
                               {{1, 2}, {-1, -1, 0}},
                               {{0, 1}, {0}}});
}

TEST_CASE("Moebius sums vanish below the top") {
  for (const auto& j : connected_necklaces(6)) {
    const FacePoset p = face_poset_of_uppers(j);
    const auto mu = moebius(p);
    for (std::size_t f = 1; f < p.nodes.size(); ++f) {
      long long sum = 0;
      for (std::size_t g = 0; g < p.nodes.size(); ++g)
        if (p.below_or_equal(f, g)) sum += mu[g];
      REQUIRE(sum == 0);
    }
  }
}
