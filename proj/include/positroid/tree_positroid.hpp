#pragma once

// Bicolored subdivisions of a convex n-gon (vertices 1..n clockwise), the
// interval inequalities they induce, their cyclic-order chains and the
// circular extensions that label the simplices of the tree positroid polytope.

#include "positroid/circuit_triangulation.hpp"
#include "positroid/exact_polynomial.hpp"
#include "positroid/positroid_model.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace positroid {

enum class CellColor { black, white };

struct Cell {
  CellColor color = CellColor::white;
  /// Increasing, i.e. clockwise from the least vertex.
  std::vector<int> vertices;

  bool operator==(const Cell&) const = default;
};

/// Construct through validate_subdivision.
class BicoloredSubdivision {
 public:
  int n() const { return n_; }
  /// Number of black triangles in any triangulation of the black cells.
  int k() const { return k_; }
  /// Rank of the associated positroid.
  int rank() const { return k_ + 1; }
  const std::vector<Cell>& cells() const { return cells_; }

 private:
  friend BicoloredSubdivision validate_subdivision(int n, std::vector<Cell> cells);
  int n_ = 0;
  int k_ = 0;
  std::vector<Cell> cells_;
};

/// Throws ValidationError (index = first offending cell, 1-based) on repeated
/// or out-of-range vertices, crossing edges, a color clash across an edge, or
/// cells that do not tile the polygon.
BicoloredSubdivision validate_subdivision(int n, std::vector<Cell> cells);

struct ArcInfo {
  int from = 0;
  int to = 0;
  bool compatible = false;
  bool facet_defining = false;
  /// Black triangles left of the arc; -1 when the arc is not compatible.
  int area = -1;
};

/// Every ordered pair i != j, ordered by (from, to).
std::vector<ArcInfo> arcs(const BicoloredSubdivision& tau);

/// Black triangles of the fan triangulation rooted at each black cell's
/// least (or greatest) vertex whose vertices all lie in [i, j].
int fan_area(const BicoloredSubdivision& tau, int i, int j, bool root_at_least);

/// area(i -> j) <= x_[i,j] <= area(i -> j) + 1 over all compatible arcs.
HRepresentation h_rep_from_subdivision(const BicoloredSubdivision& tau);
/// x_i >= 0 at white-cell vertices and x_[i,j] >= area(i -> j) on facet-defining arcs.
HRepresentation facet_h_rep_from_subdivision(const BicoloredSubdivision& tau);

/// 0/1 points of the first H-representation, as a basis collection.
PositroidBases bases_from_subdivision(const BicoloredSubdivision& tau);
/// Necklace of the positroid cut out by the subdivision.
GrassmannNecklace necklace_from_subdivision(const BicoloredSubdivision& tau);

/// One chain per cell with at least three vertices: white cells clockwise from
/// the least vertex, black cells counterclockwise from the greatest.
std::vector<std::vector<int>> tau_order(const BicoloredSubdivision& tau);

/// Whether the cyclic word (w) restricted to each chain is a rotation of it.
bool extends_chains(const Permutation& w, const std::vector<std::vector<int>>& chains);

/// All w with w_n = n whose cycle extends every chain, lexicographic.
std::vector<TriangulationLabel> circular_extensions(const std::vector<std::vector<int>>& chains, int n);

/// h* from the shelling of the circular extensions. Throws std::invalid_argument
/// when there is no circular extension or w0 is not one of them.
ExactPolynomial hstar_tree(const BicoloredSubdivision& tau, const std::optional<Permutation>& w0 = std::nullopt);

/// Random dissection of the n-gon (n >= 3) with its dual tree 2-colored.
/// With `bigons` set, some chords are doubled by a stack of bigons.
BicoloredSubdivision random_subdivision(int n, std::mt19937_64& rng, bool bigons = false);

std::string to_string(CellColor color);

}  // namespace positroid
