#pragma once

// Half-open positroid polytopes: the projected polytope with its upper facets
// removed, its h* as a descent generating function, and the closed h*
// recovered by inclusion-exclusion over the faces cut out by upper facets.

#include "positroid/circuit_triangulation.hpp"
#include "positroid/exact_polynomial.hpp"
#include "positroid/positroid_model.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace positroid {

/// x_lo + ... + x_{hi-1} (<= if upper, >= otherwise) bound, with 1 <= lo < hi <= n.
struct CanonicalFacet {
  int lo = 1;
  int hi = 2;
  long long bound = 0;
  bool upper = false;

  IntervalInequality as_inequality(int n, bool strict_if_upper) const;
  std::string to_string() const;
  auto operator<=>(const CanonicalFacet&) const = default;
};

/// Facets of the projected polytope in canonical block form, sorted by (lo, hi).
/// Throws DisconnectedInput for disconnected positroids.
std::vector<CanonicalFacet> canonical_facets(const GrassmannNecklace& necklace);

/// The polytope described by its canonical facets; upper facets strict when
/// `half_open` is set.
HRepresentation facet_region(const GrassmannNecklace& necklace, bool half_open);

/// sum over D_J of z^(des(w_1 ... w_{n-1}) + 1).
ExactPolynomial hstar_half_open(const GrassmannNecklace& necklace);

/// h* of the half-open region by lattice counting.
ExactPolynomial hstar_half_open_oracle(const GrassmannNecklace& necklace, int tmax = -1);

/// Facets of the (w)-simplex with the upper ones strict.
HRepresentation half_open_simplex(const TriangulationLabel& label);

/// Description of the half-open cube simplex of u in y-coordinates, e.g.
/// "0 < y3 < y2 <= y4 < y1 <= 1" for u = 3241.
std::string cube_simplex_description(const Permutation& u);
/// Membership of y in that half-open cube simplex.
bool in_cube_simplex(const Permutation& u, const std::vector<mpq_class>& y);

struct FaceNode {
  /// Indices into the basis list of the polytope, increasing.
  std::vector<int> vertex_set;
  int dim = 0;
  /// Bit f set when upper facet f (index into the upper facet list) contains the face.
  std::uint64_t generators = 0;
};

struct FacePoset {
  std::vector<CanonicalFacet> uppers;
  /// nodes[0] is the whole polytope; the rest by decreasing dimension, then vertex set.
  std::vector<FaceNode> nodes;

  /// vertex_set(a) is a subset of vertex_set(b).
  bool below_or_equal(std::size_t a, std::size_t b) const;
};

/// All distinct nonempty intersections of upper facets with P, plus P itself.
FacePoset face_poset_of_uppers(const GrassmannNecklace& necklace);

/// mu(F, P) for every node, top-down.
std::vector<long long> moebius(const FacePoset& poset);

/// h*(half-open) - sum_{F != P} mu(F, P) (1 - z)^(dim P - dim F) h*(F), with the
/// face terms counted by the oracle.
ExactPolynomial hstar_closed_via_inclusion_exclusion(const GrassmannNecklace& necklace);

}  // namespace positroid
