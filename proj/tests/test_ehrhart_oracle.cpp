#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "positroid/circuit_triangulation.hpp"
#include "positroid/ehrhart_oracle.hpp"
#include "test_support.hpp"

#include <random>

using namespace positroid;
using testing_support::necklace;
using testing_support::poly;

namespace {

// Every integer point of [0, t*r]^n, filtered by membership.
long long brute_count(const HRepresentation& h, const std::vector<IntervalEquality>& eqs, long long t) {
  const int n = h.n;
  std::vector<long long> x(static_cast<std::size_t>(n), 0);
  const long long top = t * h.rank;
  long long count = 0;
  while (true) {
    bool ok = h.contains(x, t);
    for (const auto& e : eqs) {
      long long s = 0;
      for (int a : e.interval.sum_indices()) s += x[static_cast<std::size_t>(a - 1)];
      ok = ok && s == t * e.bound;
    }
    count += ok;
    std::size_t k = 0;
    while (k < x.size() && x[k] == top) x[k++] = 0;
    if (k == x.size()) break;
    ++x[k];
  }
  return count;
}

long binomial(long a, long b) {
  if (b < 0 || b > a) return 0;
  long r = 1;
  for (long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

}  // namespace

TEST_CASE("lattice counts of small dilates") {
  const auto hyper = h_representation(necklace("12,23,34,45,15"));
  CHECK(count_points(hyper, 1) == 10);
  CHECK(count_points(hyper, 2) == 45);
  CHECK(count_points(h_representation(necklace("12,23,13,14")), 1) == 5);
  CHECK(count_points(hyper, 0) == 1);
}

TEST_CASE("depth-first counting agrees with box enumeration") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& d : all_decorated_permutations(n)) {
      const HRepresentation h = h_representation(necklace_from_decorated(d));
      for (long long t = 0; t <= 3; ++t) REQUIRE(count_points(h, t) == brute_count(h, {}, t));
    }
  const auto h = h_representation(necklace("124,234,134,145,125"));
  const std::vector<IntervalEquality> prism = {{CyclicInterval{1, 4, 5}, 2}};
  for (long long t = 0; t <= 3; ++t) CHECK(count_points(h, prism, t) == brute_count(h, prism, t));
}

TEST_CASE("interpolation") {
  const CountProfile simplex{3, {1, 4, 10, 20}};
  const EhrhartPolynomial e = ehrhart_interpolate(simplex);
  for (long t = 0; t < 8; ++t) CHECK(e.poly.evaluate(t) == binomial(t + 3, 3));

  const EhrhartPolynomial pyramid = ehrhart_interpolate({3, {1, 5, 14, 30}});
  CHECK(pyramid.poly == ExactPolynomial(std::vector<mpq_class>{1, mpq_class(13, 6), mpq_class(3, 2), mpq_class(1, 3)}));
  CHECK_THROWS_AS(ehrhart_interpolate({3, {1, 5, 14, 30, 99}}), ConsistencyFailure);
}

TEST_CASE("h* from counts") {
  CHECK(hstar_from_counts({3, {1, 4, 10, 20}}) == poly({1}));
  CHECK(hstar_from_counts({3, {0, 0, 2, 8}}) == poly({0, 0, 2}));
  const auto hyper = necklace("12,23,34,45,15");
  CHECK(hstar_from_counts(count_profile(h_representation(hyper), {}, 4)) == poly({1, 5, 5}));
  CHECK_THROWS_AS(hstar_from_counts({1, {1, 0}}), ConsistencyFailure);
}

TEST_CASE("products of Ehrhart polynomials") {
  const EhrhartPolynomial triangle{ExactPolynomial::shifted_binomial(2, 2), 2};
  const EhrhartPolynomial segment{ExactPolynomial({1, 1}), 1};
  const EhrhartPolynomial prism = ehrhart_product({triangle, segment});
  CHECK(prism.dim == 3);
  CHECK(hstar_from_ehrhart(prism) == poly({1, 2}));
  CHECK(hstar_from_ehrhart(ehrhart_product({segment, segment})) == poly({1, 1}));
  const EhrhartPolynomial point{ExactPolynomial::constant(1), 0};
  CHECK(ehrhart_product({prism, point}).poly == prism.poly);
}

TEST_CASE("face h* of the prism and square faces") {
  const auto j = necklace("124,234,134,145,125");
  const auto h = h_representation(j);
  CHECK(face_hstar(h, {{CyclicInterval{1, 4, 5}, 2}}, 3) == poly({1, 2}));
  const EhrhartPolynomial prism = ehrhart_interpolate(count_profile(h, {{CyclicInterval{1, 4, 5}, 2}}, 3));
  for (long t = 0; t < 6; ++t) CHECK(prism.poly.evaluate(t) == binomial(t + 2, 2) * (1 + t));
  CHECK(face_hstar(h, {{CyclicInterval{1, 2, 5}, 1}, {CyclicInterval{1, 4, 5}, 2}}, 2) == poly({1, 1}));
  CHECK(face_hstar(h, {{CyclicInterval{1, 2, 5}, 1}, {CyclicInterval{4, 5, 5}, 1}}, 2) == poly({1}));  // triangle 124, 134, 145
  CHECK(face_hstar(h, {{CyclicInterval{1, 3, 5}, 2}, {CyclicInterval{4, 5, 5}, 1}}, 0) == poly({1}));
  CHECK_THROWS_AS(face_hstar(h, {{CyclicInterval{1, 2, 5}, 5}}, 0), std::invalid_argument);
}

TEST_CASE("oracle invariants on every positroid up to n = 6") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& d : all_decorated_permutations(n)) {
      const GrassmannNecklace j = necklace_from_decorated(d);
      const PositroidBases b = bases_from_necklace(j);
      const EhrhartPolynomial e = ehrhart_by_counting(j);
      REQUIRE(e.poly.evaluate(1) == static_cast<long>(b.size()));
      const ExactPolynomial h = hstar_from_ehrhart(e);
      REQUIRE(h == hstar_oracle(j));
      REQUIRE(h.has_nonnegative_coefficients());
      REQUIRE(h == hstar_from_ehrhart(ehrhart_by_components(b)));
      mpz_class factorial = 1;
      for (int i = 2; i <= e.dim; ++i) factorial *= i;
      REQUIRE(h.evaluate(1) == e.poly.coefficient(e.dim) * factorial);
      if (is_connected(b)) REQUIRE(h.evaluate(1) == static_cast<long>(enumerate_labels(j).size()));
    }
}

TEST_CASE("disconnected square") {
  const PositroidBases square(4, {KSubset(4, {1, 3}), KSubset(4, {1, 4}), KSubset(4, {2, 3}), KSubset(4, {2, 4})});
  CHECK(decompose_direct_sum(square).size() == 2);
  CHECK(polytope_dimension(square) == 2);
  CHECK(hstar_from_ehrhart(ehrhart_by_components(square)) == poly({1, 1}));
  CHECK(hstar_oracle(necklace_from_bases(square)) == poly({1, 1}));
}

TEST_CASE("counting is monotone") {
  std::mt19937_64 rng(5);
  const auto all = all_decorated_permutations(5);
  for (int trial = 0; trial < 40; ++trial) {
    const GrassmannNecklace j = necklace_from_decorated(all[rng() % all.size()]);
    HRepresentation h = h_representation(j);
    for (long long t = 0; t < 3; ++t) CHECK(count_points(h, t) <= count_points(h, t + 1));
    HRepresentation strict = h;
    for (auto& q : strict.inequalities) q.strict = true;
    for (long long t = 0; t <= 3; ++t) CHECK(count_points(strict, t) <= count_points(h, t));
  }
}
