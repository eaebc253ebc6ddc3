#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "positroid/circuit_triangulation.hpp"
#include "positroid/tree_positroid.hpp"
#include "test_support.hpp"

#include <map>
#include <set>

using namespace positroid;
using testing_support::necklace;
using testing_support::poly;
using testing_support::words;

namespace {

const Cell black(std::vector<int> v) { return {CellColor::black, std::move(v)}; }
const Cell white(std::vector<int> v) { return {CellColor::white, std::move(v)}; }

BicoloredSubdivision square() { return validate_subdivision(4, {black({1, 2, 3}), white({1, 3, 4})}); }
BicoloredSubdivision pentagon() {
  return validate_subdivision(5, {black({1, 2, 3}), white({1, 3, 4}), black({1, 4, 5})});
}

const ArcInfo& arc(const std::vector<ArcInfo>& all, int from, int to) {
  for (const auto& a : all)
    if (a.from == from && a.to == to) return a;
  throw std::logic_error("no such arc");
}

std::set<std::vector<int>> chain_set(const BicoloredSubdivision& tau) {
  const auto chains = tau_order(tau);
  return {chains.begin(), chains.end()};
}

std::set<std::uint32_t> zero_one_points(const HRepresentation& h) {
  std::set<std::uint32_t> out;
  for (std::uint32_t m : all_subsets_of_size(h.n, h.rank)) {
    const auto ind = KSubset::from_mask(h.n, m).indicator();
    if (h.contains(std::vector<long long>(ind.begin(), ind.end()))) out.insert(m);
  }
  return out;
}

}  // namespace

TEST_CASE("subdivision types") {
  CHECK(square().k() == 1);
  CHECK(square().rank() == 2);
  CHECK(pentagon().k() == 2);
  CHECK(validate_subdivision(5, {white({1, 2, 3, 4, 5})}).k() == 0);
  CHECK(validate_subdivision(5, {black({1, 2, 3, 4, 5})}).k() == 3);
}

TEST_CASE("invalid subdivisions") {
  CHECK_THROWS_AS(validate_subdivision(4, {black({1, 2, 3}), black({1, 3, 4})}), ValidationError);
  CHECK_THROWS_AS(validate_subdivision(4, {black({1, 2, 3}), white({1, 2, 4})}), ValidationError);
  CHECK_THROWS_AS(validate_subdivision(4, {black({1, 3}), white({1, 2, 3, 4})}), ValidationError);
  CHECK_THROWS_AS(validate_subdivision(4, {black({1, 2, 3})}), ValidationError);
  CHECK_THROWS_AS(validate_subdivision(4, {black({1, 2, 5}), white({1, 3, 4})}), ValidationError);
  CHECK_THROWS_AS(validate_subdivision(5, {black({1, 2, 4}), white({2, 3, 4}), white({1, 4, 5}), white({1, 3, 5})}),
                  ValidationError);
  try {
    validate_subdivision(4, {black({1, 2, 3}), black({1, 3, 4})});
  } catch (const ValidationError& e) {
    CHECK(e.index() >= 1);
  }
}

TEST_CASE("bigons between cells") {
  // one bigon on the chord 13 flips the required colors
  const auto tau = validate_subdivision(4, {black({1, 2, 3}), white({1, 3}), black({1, 3, 4})});
  CHECK(tau.k() == 2);
  CHECK(bases_from_subdivision(tau) == bases_from_necklace(necklace_from_subdivision(tau)));
  CHECK(words(circular_extensions(tau_order(tau), 4)) == words(enumerate_labels(necklace_from_subdivision(tau))));
}

TEST_CASE("arcs of the square") {
  const auto all = arcs(square());
  CHECK(all.size() == 12);
  const ArcInfo& a13 = arc(all, 1, 3);
  CHECK(a13.compatible);
  CHECK(a13.facet_defining);
  CHECK(a13.area == 1);
  CHECK_FALSE(arc(all, 2, 4).facet_defining);
  CHECK_FALSE(arc(all, 2, 4).compatible);
  CHECK(arc(all, 3, 4).compatible);
  CHECK(arc(all, 3, 4).area == 0);
  CHECK(arc(all, 3, 1).area == 0);
}

TEST_CASE("H-representations from subdivisions") {
  CHECK(bases_from_subdivision(square()) == bases_from_necklace(necklace("12,23,13,14")));
  CHECK(bases_from_subdivision(pentagon()) == bases_from_necklace(necklace("124,234,134,145,125")));
  const auto simplex = validate_subdivision(5, {white({1, 2, 3, 4, 5})});
  CHECK(bases_from_subdivision(simplex).size() == 5);
  CHECK(h_rep_from_subdivision(simplex).rank == 1);
  CHECK(zero_one_points(facet_h_rep_from_subdivision(pentagon())) == zero_one_points(h_rep_from_subdivision(pentagon())));
}

TEST_CASE("tau orders") {
  CHECK(chain_set(square()) == std::set<std::vector<int>>{{3, 2, 1}, {1, 3, 4}});
  CHECK(chain_set(pentagon()) == std::set<std::vector<int>>{{3, 2, 1}, {1, 3, 4}, {5, 4, 1}});
  for (const auto& c : tau_order(validate_subdivision(5, {black({1, 2, 3}), white({1, 3, 4}), black({1, 4, 5})})))
    CHECK(c.size() == 3);
  const auto with_bigon = validate_subdivision(4, {black({1, 2, 3}), white({1, 3}), black({1, 3, 4})});
  CHECK(tau_order(with_bigon).size() == 2);
}

TEST_CASE("circular extensions") {
  CHECK(words(circular_extensions({{3, 2, 1}, {1, 3, 4}}, 4)) == std::vector<std::string>{"1324", "2134"});
  CHECK(words(circular_extensions(tau_order(pentagon()), 5)) == words(enumerate_labels(necklace("124,234,134,145,125"))));
  CHECK(circular_extensions({}, 4).size() == 6);
  CHECK(circular_extensions({{1, 2}}, 4).size() == 6);
  CHECK(circular_extensions({{1, 2, 3}, {3, 2, 1}}, 4).empty());
  CHECK(extends_chains(Permutation::parse("24135"), {{3, 2, 1}, {1, 3, 4}, {5, 4, 1}}));
}

TEST_CASE("tree h*") {
  CHECK(hstar_tree(square()) == poly({1, 1}));
  CHECK(hstar_tree(pentagon()) == poly({1, 3, 1}));
  CHECK(hstar_tree(validate_subdivision(6, {white({1, 2, 3, 4, 5, 6})})) == poly({1}));
  CHECK(hstar_tree(pentagon(), Permutation::parse("34215")) == poly({1, 3, 1}));
  CHECK_THROWS_AS(hstar_tree(pentagon(), Permutation::parse("12345")), std::invalid_argument);
}

TEST_CASE("random subdivisions agree with the necklace pipeline") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 240; ++trial) {
    const int n = 3 + trial % 5;
    const BicoloredSubdivision tau = random_subdivision(n, rng, trial % 3 == 2);
    // Round trip through validation.
    REQUIRE(validate_subdivision(n, tau.cells()).k() == tau.k());
    const GrassmannNecklace j = necklace_from_subdivision(tau);
    REQUIRE(j.rank() == tau.rank());
    REQUIRE(bases_from_necklace(j) == bases_from_subdivision(tau));
    REQUIRE(zero_one_points(facet_h_rep_from_subdivision(tau)) == zero_one_points(h_rep_from_subdivision(tau)));
    const auto ext = circular_extensions(tau_order(tau), n);
    REQUIRE(words(ext) == words(enumerate_labels(j)));
    const ExactPolynomial h = hstar_tree(tau);
    REQUIRE(h == hstar_shelling(j));
    for (const auto& w : ext) REQUIRE(hstar_tree(tau, w.w) == h);
    const auto all = arcs(tau);
    std::map<std::pair<int, int>, int> area;
    for (const auto& a : all) area[{a.from, a.to}] = a.area;
    for (const auto& a : all) {
      if (!a.compatible) continue;
      REQUIRE(a.area + area.at({a.to, a.from}) == tau.k());
      if (a.facet_defining) REQUIRE(fan_area(tau, a.from, a.to, true) == fan_area(tau, a.from, a.to, false));
    }
  }
}
