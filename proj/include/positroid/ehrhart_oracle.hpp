#pragma once

// Independent ground truth: lattice points in dilates, counted by bounded
// depth-first search, and the transforms from counts to Ehrhart and h*.

#include "positroid/exact_polynomial.hpp"
#include "positroid/positroid_model.hpp"

#include <vector>

namespace positroid {

struct CountProfile {
  int dim = 0;
  /// E(0), E(1), ..., at least dim + 1 entries.
  std::vector<long long> counts;
};

struct EhrhartPolynomial {
  ExactPolynomial poly;
  int dim = 0;
};

/// Thrown when counts do not transform into a nonnegative integer h*.
class ConsistencyFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integer points of t * P, with every extra equality scaled by t as well.
long long count_points(const HRepresentation& h, const std::vector<IntervalEquality>& equalities, long long t);
inline long long count_points(const HRepresentation& h, long long t) { return count_points(h, {}, t); }

/// Counts for t = 0 .. max(dim, tmax).
CountProfile count_profile(const HRepresentation& h, const std::vector<IntervalEquality>& equalities, int dim,
                           int tmax = -1);

/// Lagrange interpolation through the first dim + 1 counts.
EhrhartPolynomial ehrhart_interpolate(const CountProfile& profile);

/// h*_j = sum_{i <= j} (-1)^i binom(d+1, i) E(j - i). Extra counts beyond
/// t = d must produce vanishing coefficients. Throws ConsistencyFailure on a
/// negative, fractional or nonvanishing coefficient.
ExactPolynomial hstar_from_counts(const CountProfile& profile);

/// h* of an Ehrhart polynomial (evaluated at t = 0 .. d, then transformed).
ExactPolynomial hstar_from_ehrhart(const EhrhartPolynomial& e);

EhrhartPolynomial ehrhart_product(const std::vector<EhrhartPolynomial>& factors);

/// h* of the face of P cut out by the given interval equalities.
/// Throws std::invalid_argument when the face has no lattice points.
ExactPolynomial face_hstar(const HRepresentation& h, const std::vector<IntervalEquality>& face_equalities, int face_dim);

/// Affine dimension of a positroid polytope: n minus the number of components.
int polytope_dimension(const PositroidBases& bases);

/// Ehrhart polynomial of a positroid polytope by direct counting.
EhrhartPolynomial ehrhart_by_counting(const GrassmannNecklace& necklace, int tmax = -1);
/// h* of a positroid polytope by direct counting.
ExactPolynomial hstar_oracle(const GrassmannNecklace& necklace, int tmax = -1);
/// Ehrhart polynomial as the product over direct-sum components, each counted on its own.
EhrhartPolynomial ehrhart_by_components(const PositroidBases& bases);

}  // namespace positroid
