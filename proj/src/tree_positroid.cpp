#include "positroid/tree_positroid.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <utility>

namespace positroid {

namespace {

using Edge = std::pair<int, int>;  // first < second

bool in_interval(int a, int i, int j, int n) { return rank_in_order(a, i, n) <= rank_in_order(j, i, n); }

bool is_side(const Edge& e, int n) { return e.second == e.first + 1 || (e.first == 1 && e.second == n); }

bool crosses(const Edge& a, const Edge& b) {
  return (a.first < b.first && b.first < a.second && a.second < b.second) ||
         (b.first < a.first && a.first < b.second && b.second < a.second);
}

std::vector<Edge> cell_edges(const Cell& c) {
  const auto& v = c.vertices;
  if (v.size() == 2) return {{v[0], v[1]}};
  std::vector<Edge> out;
  for (std::size_t t = 0; t < v.size(); ++t) {
    const int a = v[t], b = v[(t + 1) % v.size()];
    out.push_back({std::min(a, b), std::max(a, b)});
  }
  return out;
}

std::string cell_name(std::size_t idx) { return "cell " + std::to_string(idx + 1); }

bool contains_vertex(const Cell& c, int a) { return std::binary_search(c.vertices.begin(), c.vertices.end(), a); }

}  // namespace

std::string to_string(CellColor color) { return color == CellColor::black ? "black" : "white"; }

BicoloredSubdivision validate_subdivision(int n, std::vector<Cell> cells) {
  if (n < 3) throw ValidationError(0, "a subdivided polygon needs at least 3 vertices");
  if (n > 31) throw ValidationError(0, "polygon size above 31 is not supported");
  if (cells.empty()) throw ValidationError(0, "no cells");
  for (std::size_t c = 0; c < cells.size(); ++c) {
    auto& v = cells[c].vertices;
    std::sort(v.begin(), v.end());
    const int idx = static_cast<int>(c) + 1;
    if (v.size() < 2) throw ValidationError(idx, cell_name(c) + " has fewer than 2 vertices");
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
      throw ValidationError(idx, cell_name(c) + " repeats a vertex");
    if (v.front() < 1 || v.back() > n) throw ValidationError(idx, cell_name(c) + " has a vertex outside [n]");
  }

  std::map<Edge, std::vector<std::size_t>> polygon_cells;  // cells with >= 3 vertices on each edge
  std::map<Edge, std::vector<std::size_t>> bigons;
  std::vector<std::pair<Edge, std::size_t>> all_edges;
  int triangles = 0;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const bool bigon = cells[c].vertices.size() == 2;
    if (!bigon) triangles += static_cast<int>(cells[c].vertices.size()) - 2;
    for (const auto& e : cell_edges(cells[c])) {
      (bigon ? bigons : polygon_cells)[e].push_back(c);
      all_edges.push_back({e, c});
    }
  }

  for (std::size_t a = 0; a < all_edges.size(); ++a)
    for (std::size_t b = a + 1; b < all_edges.size(); ++b)
      if (crosses(all_edges[a].first, all_edges[b].first))
        throw ValidationError(static_cast<int>(std::min(all_edges[a].second, all_edges[b].second)) + 1,
                              cell_name(all_edges[a].second) + " and " + cell_name(all_edges[b].second) +
                                  " have crossing edges");

  for (int i = 1; i <= n; ++i) {
    const Edge side = i < n ? Edge{i, i + 1} : Edge{1, n};
    const auto it = polygon_cells.find(side);
    if (it == polygon_cells.end() || it->second.size() != 1)
      throw ValidationError(it == polygon_cells.end() ? 0 : static_cast<int>(it->second[1]) + 1,
                            "polygon side " + std::to_string(side.first) + "-" + std::to_string(side.second) +
                                " is not covered by exactly one cell");
  }
  for (const auto& [edge, owners] : polygon_cells) {
    if (is_side(edge, n)) continue;
    if (owners.size() != 2) {
      std::string names;
      for (auto c : owners) names += (names.empty() ? "" : ", ") + cell_name(c);
      throw ValidationError(static_cast<int>(owners.front()) + 1,
                            "chord " + std::to_string(edge.first) + "-" + std::to_string(edge.second) +
                                " must border exactly two cells, found " + names);
    }
  }
  if (triangles != n - 2) throw ValidationError(0, "cells do not partition the polygon (triangle count " +
                                                       std::to_string(triangles) + ", expected " +
                                                       std::to_string(n - 2) + ")");

  for (const auto& [edge, stack] : bigons) {
    const auto it = polygon_cells.find(edge);
    if (it == polygon_cells.end() || is_side(edge, n))
      throw ValidationError(static_cast<int>(stack.front()) + 1,
                            cell_name(stack.front()) + " is a bigon off the interior chords");
  }
  for (const auto& [edge, owners] : polygon_cells) {
    if (is_side(edge, n)) continue;
    const CellColor a = cells[owners[0]].color;
    const CellColor b = cells[owners[1]].color;
    const auto stack_it = bigons.find(edge);
    const std::size_t m = stack_it == bigons.end() ? 0 : stack_it->second.size();
    std::size_t same = 0;
    if (m > 0)
      for (auto c : stack_it->second) same += cells[c].color == a;
    // Colors along A, bigon_1, ..., bigon_m, B must alternate.
    const bool ok = same == m / 2 && (a == b) == (m % 2 == 1);
    if (!ok)
      throw ValidationError(static_cast<int>(std::min(owners[0], owners[1])) + 1,
                            cell_name(owners[0]) + " and " + cell_name(owners[1]) +
                                " clash in color across chord " + std::to_string(edge.first) + "-" +
                                std::to_string(edge.second));
  }

  BicoloredSubdivision tau;
  tau.n_ = n;
  tau.cells_ = std::move(cells);
  for (const auto& c : tau.cells_)
    if (c.color == CellColor::black && c.vertices.size() >= 3) tau.k_ += static_cast<int>(c.vertices.size()) - 2;
  return tau;
}

std::vector<ArcInfo> arcs(const BicoloredSubdivision& tau) {
  const int n = tau.n();
  std::vector<ArcInfo> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      ArcInfo info{i, j, false, false, -1};
      for (const auto& c : tau.cells())
        if (contains_vertex(c, i) && contains_vertex(c, j)) info.compatible = true;
      if (info.compatible) {
        // A compatible arc is a chord of some triangulation of the black
        // cells; a black cell meeting [i, j] in m vertices contributes m - 2.
        info.area = 0;
        for (const auto& c : tau.cells()) {
          if (c.color != CellColor::black) continue;
          int m = 0;
          for (int a : c.vertices) m += in_interval(a, i, j, n);
          info.area += std::max(0, m - 2);
          const bool left = m == static_cast<int>(c.vertices.size());
          if (!left || !contains_vertex(c, i) || !contains_vertex(c, j)) continue;
          for (const auto& e : cell_edges(c))
            if (e == Edge{std::min(i, j), std::max(i, j)}) info.facet_defining = true;
        }
      }
      out.push_back(info);
    }
  }
  return out;
}

int fan_area(const BicoloredSubdivision& tau, int i, int j, bool root_at_least) {
  const int n = tau.n();
  int area = 0;
  for (const auto& c : tau.cells()) {
    if (c.color != CellColor::black || c.vertices.size() < 3) continue;
    std::vector<int> v = c.vertices;
    if (!root_at_least) std::rotate(v.begin(), v.end() - 1, v.end());
    for (std::size_t t = 1; t + 1 < v.size(); ++t)
      area += in_interval(v[0], i, j, n) && in_interval(v[t], i, j, n) && in_interval(v[t + 1], i, j, n);
  }
  return area;
}

HRepresentation h_rep_from_subdivision(const BicoloredSubdivision& tau) {
  const int n = tau.n();
  HRepresentation h{n, tau.rank(), {}};
  for (const auto& a : arcs(tau)) {
    if (!a.compatible) continue;
    const CyclicInterval interval{a.from, a.to, n};
    h.inequalities.push_back({interval, a.area, Sense::greater_equal, false});
    h.inequalities.push_back({interval, a.area + 1, Sense::less_equal, false});
  }
  std::sort(h.inequalities.begin(), h.inequalities.end());
  return h;
}

HRepresentation facet_h_rep_from_subdivision(const BicoloredSubdivision& tau) {
  const int n = tau.n();
  HRepresentation h{n, tau.rank(), {}};
  for (const auto& c : tau.cells())
    if (c.color == CellColor::white)
      for (int a : c.vertices) h.inequalities.push_back({CyclicInterval{a, wrap_index(a + 1, n), n}, 0, Sense::greater_equal, false});
  for (const auto& a : arcs(tau))
    if (a.facet_defining) h.inequalities.push_back({CyclicInterval{a.from, a.to, n}, a.area, Sense::greater_equal, false});
  std::sort(h.inequalities.begin(), h.inequalities.end());
  h.inequalities.erase(std::unique(h.inequalities.begin(), h.inequalities.end()), h.inequalities.end());
  return h;
}

PositroidBases bases_from_subdivision(const BicoloredSubdivision& tau) {
  const int n = tau.n();
  const HRepresentation h = h_rep_from_subdivision(tau);
  std::vector<KSubset> bases;
  for (std::uint32_t mask : all_subsets_of_size(n, tau.rank())) {
    const KSubset s = KSubset::from_mask(n, mask);
    const auto ind = s.indicator();
    if (h.contains(std::vector<long long>(ind.begin(), ind.end()))) bases.push_back(s);
  }
  return PositroidBases(n, std::move(bases));
}

GrassmannNecklace necklace_from_subdivision(const BicoloredSubdivision& tau) {
  return necklace_from_bases(bases_from_subdivision(tau));
}

std::vector<std::vector<int>> tau_order(const BicoloredSubdivision& tau) {
  std::vector<std::vector<int>> chains;
  for (const auto& c : tau.cells()) {
    if (c.vertices.size() < 3) continue;
    std::vector<int> chain = c.vertices;
    if (c.color == CellColor::black) std::reverse(chain.begin(), chain.end());
    chains.push_back(std::move(chain));
  }
  return chains;
}

bool extends_chains(const Permutation& w, const std::vector<std::vector<int>>& chains) {
  for (const auto& chain : chains) {
    std::vector<int> seen = chain;
    std::sort(seen.begin(), seen.end(), [&](int a, int b) { return w.position_of(a) < w.position_of(b); });
    const auto start = std::find(seen.begin(), seen.end(), chain.front());
    std::rotate(seen.begin(), start, seen.end());
    if (seen != chain) return false;
  }
  return true;
}

std::vector<TriangulationLabel> circular_extensions(const std::vector<std::vector<int>>& chains, int n) {
  std::vector<TriangulationLabel> out;
  for (auto& w : permutations_fixing_last(n))
    if (extends_chains(w, chains)) out.emplace_back(std::move(w));
  return out;
}

ExactPolynomial hstar_tree(const BicoloredSubdivision& tau, const std::optional<Permutation>& w0) {
  auto labels = circular_extensions(tau_order(tau), tau.n());
  if (labels.empty()) throw std::invalid_argument("the chains of the subdivision have no circular extension");
  const TriangulationGraph g = build_graph(std::move(labels));
  return hstar_from_covers(w0 ? shelling_poset(g, *w0) : shelling_poset(g, 0));
}

BicoloredSubdivision random_subdivision(int n, std::mt19937_64& rng, bool bigons) {
  if (n < 3) throw std::invalid_argument("random subdivision needs n >= 3");
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
  std::deque<std::vector<int>> pending{all};
  std::vector<std::vector<int>> pieces;
  std::bernoulli_distribution split(0.6);
  while (!pending.empty()) {
    std::vector<int> v = std::move(pending.front());
    pending.pop_front();
    const int m = static_cast<int>(v.size());
    if (m < 4 || !split(rng)) {
      pieces.push_back(std::move(v));
      continue;
    }
    // A diagonal between positions a < b that are not cyclically adjacent.
    std::uniform_int_distribution<int> pick(0, m - 1);
    int a = 0, b = 0;
    do {
      a = pick(rng);
      b = pick(rng);
      if (a > b) std::swap(a, b);
    } while (b - a < 2 || (a == 0 && b == m - 1));
    pending.emplace_back(v.begin() + a, v.begin() + b + 1);
    std::vector<int> rest(v.begin(), v.begin() + a + 1);
    rest.insert(rest.end(), v.begin() + b, v.end());
    pending.push_back(std::move(rest));
  }

  // Dual tree: pieces joined across chords, optionally through stacks of bigons.
  std::map<Edge, std::vector<std::size_t>> owners;
  for (std::size_t p = 0; p < pieces.size(); ++p)
    for (const auto& e : cell_edges(Cell{CellColor::white, pieces[p]}))
      if (!is_side(e, n)) owners[e].push_back(p);
  std::vector<std::vector<std::size_t>> adjacent(pieces.size());
  std::uniform_int_distribution<int> stack_size(0, 2);
  for (const auto& [edge, ps] : owners) {
    std::size_t prev = ps[0];
    const int m = bigons ? stack_size(rng) : 0;
    for (int s = 0; s < m; ++s) {
      pieces.push_back({edge.first, edge.second});
      adjacent.emplace_back();
      adjacent[prev].push_back(pieces.size() - 1);
      adjacent.back().push_back(prev);
      prev = pieces.size() - 1;
    }
    adjacent[prev].push_back(ps[1]);
    adjacent[ps[1]].push_back(prev);
  }
  std::vector<int> color(pieces.size(), -1);
  color[0] = std::bernoulli_distribution(0.5)(rng) ? 1 : 0;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t p = queue.front();
    queue.pop_front();
    for (std::size_t q : adjacent[p])
      if (color[q] < 0) {
        color[q] = 1 - color[p];
        queue.push_back(q);
      }
  }
  std::vector<Cell> cells;
  for (std::size_t p = 0; p < pieces.size(); ++p)
    cells.push_back({color[p] == 1 ? CellColor::black : CellColor::white, pieces[p]});
  return validate_subdivision(n, std::move(cells));
}

}  // namespace positroid
