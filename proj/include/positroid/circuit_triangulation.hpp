#pragma once

#include "positroid/combinatorics.hpp"
#include "positroid/exact_polynomial.hpp"
#include "positroid/positroid_model.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace positroid {

/// Raised when a connected-only computation receives a disconnected positroid.
class DisconnectedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One maximal simplex of the circuit triangulation: w with w_n = n together
/// with its circuit I_{w_1} -> ... -> I_{w_n}.
struct TriangulationLabel {
  Permutation w;
  std::vector<KSubset> circuit;

  explicit TriangulationLabel(Permutation label);
  int n() const { return w.size(); }
  /// Common size of the circuit subsets.
  int rank() const { return circuit.front().size(); }
};

/// Triangulation labels D_J, lexicographic in one-line notation. Throws
/// DisconnectedInput when the positroid is not connected and
/// std::invalid_argument when n < 2.
std::vector<TriangulationLabel> enumerate_labels(const GrassmannNecklace& necklace);

/// D_J through the interval-restriction filter cdes_L(w|[i, a_j^i]) <= j - 1.
std::vector<TriangulationLabel> enumerate_labels_by_restriction(const GrassmannNecklace& necklace);

/// Indicator vectors of the circuit, in circuit order.
std::vector<std::vector<int>> simplex_vertices(const TriangulationLabel& label);

/// Facets of the simplex projected to the first n - 1 coordinates, each in
/// non-wrapping interval form x_lo + ... + x_{hi-1} (sense) bound with hi <= n.
/// Computed from the vertices with exact arithmetic.
HRepresentation simplex_facets(const TriangulationLabel& label);

struct GraphEdge {
  int a = 0;  // label index
  int b = 0;  // label index, a < b
  /// Position i in labels[a]'s one-line word: the cycle of labels[b] is the
  /// cycle of labels[a] with the letters at i and i + 1 (mod n) exchanged.
  int swap_position = 0;
  /// The two exchanged letters, smaller first.
  std::pair<int, int> letters;
};

struct TriangulationGraph {
  std::vector<TriangulationLabel> labels;
  std::vector<GraphEdge> edges;
  /// Neighbor label indices, each list sorted by one-line notation.
  std::vector<std::vector<int>> adjacency;

  std::optional<int> index_of(const Permutation& w) const;
  std::size_t size() const { return labels.size(); }
};

/// Cycle of w with the cyclically adjacent positions i, i+1 exchanged,
/// rotated to end at n.
Permutation swap_in_cycle(const Permutation& w, int i);

/// Adjacency by the swap rule. Throws std::logic_error if swap adjacency ever
/// disagrees with sharing n - 1 circuit vertices.
TriangulationGraph build_graph(std::vector<TriangulationLabel> labels);

struct ShellingPoset {
  int base = 0;
  std::vector<int> dist;
  std::vector<int> cover;
  /// Labels in BFS discovery order; a valid shelling order.
  std::vector<int> order;
};

/// BFS from the base label. Throws std::invalid_argument when the base is not
/// a label and std::logic_error when the graph is disconnected.
ShellingPoset shelling_poset(const TriangulationGraph& graph, int base);
ShellingPoset shelling_poset(const TriangulationGraph& graph, const Permutation& base);

/// sum_w z^cover(w)
ExactPolynomial hstar_from_covers(const ShellingPoset& poset);

/// h* of a connected positroid polytope through the shelling, from the given
/// base label (default: the lexicographically first label).
ExactPolynomial hstar_shelling(const GrassmannNecklace& necklace,
                               const std::optional<Permutation>& base = std::nullopt);

/// Affine permutation in window notation [u(1), ..., u(n)].
struct AffineWindow {
  std::vector<long long> window;

  static AffineWindow identity(int n);
  int n() const { return static_cast<int>(window.size()); }
  /// Right multiplication by the simple reflection s_i, i in [n].
  AffineWindow times_simple(int i) const;
  /// Coxeter length: sum_{i<j} |floor((u(j) - u(i)) / n)|.
  long long length() const;
  bool operator==(const AffineWindow&) const = default;
};

struct AffineLabeling {
  std::vector<AffineWindow> windows;
  /// Empty when every check passed.
  std::vector<std::string> violations;
  bool consistent() const { return violations.empty(); }
};

/// Windows along BFS tree paths from the base, then checks every edge and
/// that Coxeter length equals BFS distance.
AffineLabeling affine_consistency_check(const TriangulationGraph& graph, int base);

enum class PhiConvention {
  /// y_i = ceil(T_i) - T_i, in [0, 1)
  fractional,
  /// y_i = 1 + floor(T_i) - T_i, in (0, 1]
  upper_closed,
};

/// Inverse of the measure preserving map: with T_i = x_i + ... + x_m,
/// returns y with entries from T_i according to the convention.
std::vector<mpq_class> phi_inverse_point(const std::vector<mpq_class>& x,
                                         PhiConvention convention = PhiConvention::fractional);

}  // namespace positroid
