#include "positroid/halfopen_hstar.hpp"

#include "positroid/ehrhart_oracle.hpp"
#include "positroid/lattice_geometry.hpp"

#include <algorithm>
#include <deque>
#include <iterator>
#include <numeric>
#include <optional>
#include <set>

namespace positroid {

namespace {

// sum_{a in members} x_a (sense) bound over [n], before canonicalisation.
struct RawInequality {
  std::vector<bool> members;  // 1-based, size n + 1
  long long bound = 0;
  Sense sense = Sense::less_equal;
};

std::optional<CanonicalFacet> canonicalize(const RawInequality& raw, int n, int rank) {
  std::vector<bool> support = raw.members;
  long long bound = raw.bound;
  Sense sense = raw.sense;
  if (support[static_cast<std::size_t>(n)]) {
    for (int a = 1; a <= n; ++a) support[static_cast<std::size_t>(a)] = !support[static_cast<std::size_t>(a)];
    bound = rank - bound;
    sense = sense == Sense::less_equal ? Sense::greater_equal : Sense::less_equal;
  }
  int lo = 0, hi = 0;
  for (int a = 1; a < n; ++a) {
    if (!support[static_cast<std::size_t>(a)]) continue;
    if (lo == 0) lo = a;
    else if (hi != a) throw std::logic_error("interval functional is not a contiguous block after rewriting");
    hi = a + 1;
  }
  if (lo == 0) return std::nullopt;  // the functional is constant on the polytope
  return CanonicalFacet{lo, hi, bound, sense == Sense::less_equal};
}

long long evaluate_block(const std::vector<int>& point, int lo, int hi) {
  long long s = 0;
  for (int a = lo; a < hi; ++a) s += point[static_cast<std::size_t>(a - 1)];
  return s;
}

std::vector<RawInequality> candidate_inequalities(const GrassmannNecklace& necklace) {
  const int n = necklace.n();
  std::vector<RawInequality> out;
  const HRepresentation h = h_representation(necklace);
  for (const auto& ineq : h.inequalities) {
    RawInequality raw{std::vector<bool>(static_cast<std::size_t>(n) + 1, false), ineq.bound, ineq.sense};
    for (int a : ineq.interval.sum_indices()) raw.members[static_cast<std::size_t>(a)] = true;
    out.push_back(std::move(raw));
  }
  for (int a = 1; a <= n; ++a) {
    std::vector<bool> single(static_cast<std::size_t>(n) + 1, false);
    single[static_cast<std::size_t>(a)] = true;
    out.push_back({single, 0, Sense::greater_equal});
    out.push_back({single, 1, Sense::less_equal});
  }
  return out;
}

std::vector<int> vertices_on(const std::vector<std::vector<int>>& points, const CanonicalFacet& f) {
  std::vector<int> on;
  for (std::size_t k = 0; k < points.size(); ++k)
    if (evaluate_block(points[k], f.lo, f.hi) == f.bound) on.push_back(static_cast<int>(k));
  return on;
}

std::vector<std::vector<int>> select(const std::vector<std::vector<int>>& points, const std::vector<int>& idx) {
  std::vector<std::vector<int>> out;
  out.reserve(idx.size());
  for (int k : idx) out.push_back(points[static_cast<std::size_t>(k)]);
  return out;
}

}  // namespace

IntervalInequality CanonicalFacet::as_inequality(int n, bool strict_if_upper) const {
  return {CyclicInterval{lo, hi, n}, bound, upper ? Sense::less_equal : Sense::greater_equal,
          upper && strict_if_upper};
}

std::string CanonicalFacet::to_string() const {
  std::string s;
  for (int a = lo; a < hi; ++a) s += (a == lo ? "x" : "+x") + std::to_string(a);
  return s + (upper ? " <= " : " >= ") + std::to_string(bound);
}

std::vector<CanonicalFacet> canonical_facets(const GrassmannNecklace& necklace) {
  const PositroidBases bases = bases_from_necklace(necklace);
  if (!is_connected(bases)) throw DisconnectedInput("positroid " + necklace.to_string() + " is not connected");
  const int n = necklace.n();
  const auto points = vertices(bases);
  std::set<CanonicalFacet> facets;
  for (const auto& raw : candidate_inequalities(necklace)) {
    const auto candidate = canonicalize(raw, n, necklace.rank());
    if (!candidate) continue;
    for (const auto& p : points) {
      const long long v = evaluate_block(p, candidate->lo, candidate->hi);
      if (candidate->upper ? v > candidate->bound : v < candidate->bound)
        throw std::logic_error("vertex violates " + candidate->to_string());
    }
    const auto on = vertices_on(points, *candidate);
    if (!on.empty() && geometry::affine_dimension(select(points, on)) == n - 2) facets.insert(*candidate);
  }
  return {facets.begin(), facets.end()};
}

HRepresentation facet_region(const GrassmannNecklace& necklace, bool half_open) {
  HRepresentation h{necklace.n(), necklace.rank(), {}};
  for (const auto& f : canonical_facets(necklace)) h.inequalities.push_back(f.as_inequality(necklace.n(), half_open));
  return h;
}

ExactPolynomial hstar_half_open(const GrassmannNecklace& necklace) {
  ExactPolynomial out;
  for (const auto& label : enumerate_labels(necklace)) {
    const auto& word = label.w.word();
    const int des = descent_count(std::span<const int>(word.data(), word.size() - 1));
    out += ExactPolynomial::monomial(des + 1, 1);
  }
  return out;
}

ExactPolynomial hstar_half_open_oracle(const GrassmannNecklace& necklace, int tmax) {
  return hstar_from_counts(count_profile(facet_region(necklace, true), {}, necklace.n() - 1, tmax));
}

HRepresentation half_open_simplex(const TriangulationLabel& label) {
  HRepresentation h = simplex_facets(label);
  for (auto& ineq : h.inequalities) ineq.strict = ineq.sense == Sense::less_equal;
  return h;
}

std::string cube_simplex_description(const Permutation& u) {
  const auto& word = u.word();
  std::string s = "0 < y" + std::to_string(word.front());
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    s += (word[i] < word[i + 1] ? " <= y" : " < y") + std::to_string(word[i + 1]);
  return s + " <= 1";
}

bool in_cube_simplex(const Permutation& u, const std::vector<mpq_class>& y) {
  const auto& word = u.word();
  if (y.size() != word.size()) throw std::invalid_argument("point and permutation differ in length");
  auto at = [&](int letter) -> const mpq_class& { return y[static_cast<std::size_t>(letter - 1)]; };
  if (!(at(word.front()) > 0) || !(at(word.back()) <= 1)) return false;
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    const mpq_class& a = at(word[i]);
    const mpq_class& b = at(word[i + 1]);
    if (word[i] < word[i + 1] ? !(a <= b) : !(a < b)) return false;
  }
  return true;
}

bool FacePoset::below_or_equal(std::size_t a, std::size_t b) const {
  const auto& small = nodes[a].vertex_set;
  const auto& large = nodes[b].vertex_set;
  return std::includes(large.begin(), large.end(), small.begin(), small.end());
}

FacePoset face_poset_of_uppers(const GrassmannNecklace& necklace) {
  FacePoset poset;
  for (const auto& f : canonical_facets(necklace))
    if (f.upper) poset.uppers.push_back(f);
  if (poset.uppers.size() > 64) throw std::length_error("too many upper facets");

  const auto points = vertices(bases_from_necklace(necklace));
  std::vector<std::vector<int>> facet_vertices;
  for (const auto& f : poset.uppers) facet_vertices.push_back(vertices_on(points, f));

  std::vector<int> all(points.size());
  std::iota(all.begin(), all.end(), 0);
  std::set<std::vector<int>> seen{all};
  std::deque<std::vector<int>> queue{all};
  while (!queue.empty()) {
    const std::vector<int> current = std::move(queue.front());
    queue.pop_front();
    for (const auto& fv : facet_vertices) {
      std::vector<int> meet;
      std::set_intersection(current.begin(), current.end(), fv.begin(), fv.end(), std::back_inserter(meet));
      if (meet.empty() || !seen.insert(meet).second) continue;
      queue.push_back(std::move(meet));
    }
  }

  for (const auto& vs : seen) {
    FaceNode node{vs, static_cast<int>(geometry::affine_dimension(select(points, vs))), 0};
    for (std::size_t f = 0; f < facet_vertices.size(); ++f)
      if (std::includes(facet_vertices[f].begin(), facet_vertices[f].end(), vs.begin(), vs.end()))
        node.generators |= std::uint64_t{1} << f;
    poset.nodes.push_back(std::move(node));
  }
  std::sort(poset.nodes.begin(), poset.nodes.end(), [](const FaceNode& a, const FaceNode& b) {
    if (a.dim != b.dim) return a.dim > b.dim;
    return a.vertex_set < b.vertex_set;
  });
  return poset;
}

std::vector<long long> moebius(const FacePoset& poset) {
  std::vector<long long> mu(poset.nodes.size(), 0);
  if (mu.empty()) return mu;
  mu[0] = 1;
  for (std::size_t k = 1; k < mu.size(); ++k) {
    long long s = 0;
    for (std::size_t g = 0; g < k; ++g)
      if (poset.below_or_equal(k, g)) s += mu[g];
    mu[k] = -s;
  }
  return mu;
}

ExactPolynomial hstar_closed_via_inclusion_exclusion(const GrassmannNecklace& necklace) {
  const int n = necklace.n();
  const FacePoset poset = face_poset_of_uppers(necklace);
  const auto mu = moebius(poset);
  const HRepresentation closed = facet_region(necklace, false);
  ExactPolynomial out = hstar_half_open(necklace);
  for (std::size_t k = 1; k < poset.nodes.size(); ++k) {
    if (mu[k] == 0) continue;
    const FaceNode& face = poset.nodes[k];
    std::vector<IntervalEquality> eqs;
    for (std::size_t f = 0; f < poset.uppers.size(); ++f)
      if ((face.generators >> f) & 1u)
        eqs.push_back({CyclicInterval{poset.uppers[f].lo, poset.uppers[f].hi, n}, poset.uppers[f].bound});
    out -= face_hstar(closed, eqs, face.dim) * ExactPolynomial::one_minus_z_power(n - 1 - face.dim) *
           mpq_class(static_cast<long>(mu[k]));
  }
  if (!out.has_integer_coefficients() || !out.has_nonnegative_coefficients() || out.coefficient(0) != 1)
    throw ConsistencyFailure("inclusion-exclusion produced " + out.to_string());
  return out;
}

}  // namespace positroid
