#include "positroid/circuit_triangulation.hpp"

#include "positroid/lattice_geometry.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace positroid {

namespace {

void require_triangulable(const GrassmannNecklace& necklace, const PositroidBases& bases) {
  if (necklace.n() < 2) throw std::invalid_argument("circuit triangulations need n >= 2");
  if (!is_connected(bases))
    throw DisconnectedInput("positroid is not connected; split it with decompose_direct_sum and combine with ehrhart_product");
}

mpz_class floor_of(const mpq_class& q) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

TriangulationLabel::TriangulationLabel(Permutation label) : w(std::move(label)), circuit(circuit_subsets(w)) {}

std::vector<TriangulationLabel> enumerate_labels(const GrassmannNecklace& necklace) {
  const PositroidBases bases = bases_from_necklace(necklace);
  require_triangulable(necklace, bases);
  std::vector<TriangulationLabel> out;
  for (auto& w : permutations_fixing_last(necklace.n())) {
    if (cyclic_left_descent_count(w) != necklace.rank()) continue;
    TriangulationLabel label(std::move(w));
    const bool inside = std::all_of(label.circuit.begin(), label.circuit.end(),
                                    [&](const KSubset& s) { return bases.contains(s.mask()); });
    if (inside) out.push_back(std::move(label));
  }
  return out;
}

std::vector<TriangulationLabel> enumerate_labels_by_restriction(const GrassmannNecklace& necklace) {
  const PositroidBases bases = bases_from_necklace(necklace);
  require_triangulable(necklace, bases);
  const int n = necklace.n();
  std::vector<TriangulationLabel> out;
  for (auto& w : permutations_fixing_last(n)) {
    if (cyclic_left_descent_count(w) != necklace.rank()) continue;
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) {
      const auto sorted = necklace.sorted_entry(i);
      for (std::size_t j = 0; j < sorted.size() && ok; ++j)
        ok = cyclic_left_descent_count(restrict(w, CyclicInterval{i, sorted[j], n})) <= static_cast<int>(j);
    }
    if (ok) out.emplace_back(std::move(w));
  }
  return out;
}

std::vector<std::vector<int>> simplex_vertices(const TriangulationLabel& label) {
  std::vector<std::vector<int>> out;
  for (const auto& s : label.circuit) out.push_back(s.indicator());
  return out;
}

HRepresentation simplex_facets(const TriangulationLabel& label) {
  using geometry::IntMatrix;
  const int n = label.n();
  const int dim = n - 1;
  IntMatrix projected(n, dim);
  for (int k = 0; k < n; ++k)
    for (int c = 0; c < dim; ++c) projected(k, c) = label.circuit[static_cast<std::size_t>(k)].contains(c + 1) ? 1 : 0;

  HRepresentation h{n, label.rank(), {}};
  for (int omitted = 0; omitted < n; ++omitted) {
    const int anchor = omitted == 0 ? 1 : 0;
    IntMatrix diffs(n - 2, dim);
    for (int k = 0, row = 0; k < n; ++k) {
      if (k == omitted || k == anchor) continue;
      diffs.row(row++) = projected.row(k) - projected.row(anchor);
    }
    geometry::IntVector normal = geometry::primitive_kernel_vector(diffs);
    // Must be +-(indicator of a contiguous block).
    int lo = 0, hi = 0;
    for (int c = 0; c < dim; ++c) {
      if (normal(c) == 0) continue;
      if (normal(c) != 1) throw std::logic_error("facet normal of " + label.w.to_string() + " is not an interval sum");
      if (lo == 0) lo = c + 1;
      if (hi != 0 && hi != c + 1) throw std::logic_error("facet normal of " + label.w.to_string() + " is not contiguous");
      hi = c + 2;
    }
    const long long on_facet = projected.row(anchor).dot(normal);
    const long long off_facet = projected.row(omitted).dot(normal);
    const Sense sense = off_facet < on_facet ? Sense::less_equal : Sense::greater_equal;
    h.inequalities.push_back({CyclicInterval{lo, hi, n}, on_facet, sense, false});
  }
  return h;
}

std::optional<int> TriangulationGraph::index_of(const Permutation& w) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), w,
                             [](const TriangulationLabel& l, const Permutation& p) { return l.w < p; });
  if (it == labels.end() || it->w != w) return std::nullopt;
  return static_cast<int>(it - labels.begin());
}

Permutation swap_in_cycle(const Permutation& w, int i) {
  const int n = w.size();
  std::vector<int> word = w.word();
  std::swap(word[static_cast<std::size_t>(i - 1)], word[static_cast<std::size_t>(wrap_index(i + 1, n) - 1)]);
  Permutation swapped(std::move(word));
  return rotation_ending_at(swapped, n);
}

TriangulationGraph build_graph(std::vector<TriangulationLabel> labels) {
  TriangulationGraph g;
  std::sort(labels.begin(), labels.end(), [](const auto& a, const auto& b) { return a.w < b.w; });
  g.labels = std::move(labels);
  const int count = static_cast<int>(g.labels.size());
  g.adjacency.assign(static_cast<std::size_t>(count), {});
  if (count == 0) return g;
  const int n = g.labels.front().n();
  for (const auto& l : g.labels)
    if (l.n() != n || l.rank() != g.labels.front().rank())
      throw std::invalid_argument("labels disagree on ambient size or rank");

  std::set<std::pair<int, int>> seen;
  for (int a = 0; a < count; ++a) {
    const Permutation& u = g.labels[static_cast<std::size_t>(a)].w;
    for (int i = 1; i <= n; ++i) {
      const int x = u.at(i), y = u.at(wrap_index(i + 1, n));
      const int diff = wrap_index(x - y, n);
      if (diff == 1 || diff == n - 1) continue;
      const auto b = g.index_of(swap_in_cycle(u, i));
      if (!b || *b <= a) continue;
      if (!seen.insert({a, *b}).second) continue;
      g.edges.push_back({a, *b, i, {std::min(x, y), std::max(x, y)}});
      g.adjacency[static_cast<std::size_t>(a)].push_back(*b);
      g.adjacency[static_cast<std::size_t>(*b)].push_back(a);
    }
  }
  for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());

  // Swap adjacency must coincide with sharing a facet (n - 1 common vertices).
  std::vector<std::vector<std::uint32_t>> masks;
  for (const auto& l : g.labels) {
    std::vector<std::uint32_t> m;
    for (const auto& s : l.circuit) m.push_back(s.mask());
    std::sort(m.begin(), m.end());
    masks.push_back(std::move(m));
  }
  for (int a = 0; a < count; ++a) {
    for (int b = a + 1; b < count; ++b) {
      std::vector<std::uint32_t> common;
      std::set_intersection(masks[static_cast<std::size_t>(a)].begin(), masks[static_cast<std::size_t>(a)].end(),
                            masks[static_cast<std::size_t>(b)].begin(), masks[static_cast<std::size_t>(b)].end(),
                            std::back_inserter(common));
      const bool share_facet = static_cast<int>(common.size()) == n - 1;
      if (share_facet != seen.contains({a, b}))
        throw std::logic_error("swap rule and shared facets disagree on " + g.labels[static_cast<std::size_t>(a)].w.to_string() +
                               " / " + g.labels[static_cast<std::size_t>(b)].w.to_string());
    }
  }
  return g;
}

ShellingPoset shelling_poset(const TriangulationGraph& graph, int base) {
  const int count = static_cast<int>(graph.size());
  if (base < 0 || base >= count) throw std::invalid_argument("base is not a triangulation label");
  ShellingPoset p;
  p.base = base;
  p.dist.assign(static_cast<std::size_t>(count), -1);
  p.cover.assign(static_cast<std::size_t>(count), 0);
  std::deque<int> queue{base};
  p.dist[static_cast<std::size_t>(base)] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    p.order.push_back(v);
    for (int u : graph.adjacency[static_cast<std::size_t>(v)]) {
      if (p.dist[static_cast<std::size_t>(u)] >= 0) continue;
      p.dist[static_cast<std::size_t>(u)] = p.dist[static_cast<std::size_t>(v)] + 1;
      queue.push_back(u);
    }
  }
  if (static_cast<int>(p.order.size()) != count) throw std::logic_error("triangulation graph is disconnected");
  for (int v = 0; v < count; ++v)
    for (int u : graph.adjacency[static_cast<std::size_t>(v)])
      if (p.dist[static_cast<std::size_t>(u)] == p.dist[static_cast<std::size_t>(v)] - 1) ++p.cover[static_cast<std::size_t>(v)];
  return p;
}

ShellingPoset shelling_poset(const TriangulationGraph& graph, const Permutation& base) {
  const auto idx = graph.index_of(base);
  if (!idx) throw std::invalid_argument(base.to_string() + " is not a triangulation label");
  return shelling_poset(graph, *idx);
}

ExactPolynomial hstar_from_covers(const ShellingPoset& poset) {
  ExactPolynomial h;
  for (int c : poset.cover) h += ExactPolynomial::monomial(c);
  return h;
}

ExactPolynomial hstar_shelling(const GrassmannNecklace& necklace, const std::optional<Permutation>& base) {
  const TriangulationGraph g = build_graph(enumerate_labels(necklace));
  return hstar_from_covers(base ? shelling_poset(g, *base) : shelling_poset(g, 0));
}

AffineWindow AffineWindow::identity(int n) {
  AffineWindow u;
  for (int i = 1; i <= n; ++i) u.window.push_back(i);
  return u;
}

AffineWindow AffineWindow::times_simple(int i) const {
  const int size = n();
  if (i < 1 || i > size) throw std::invalid_argument("simple reflection index outside [n]");
  AffineWindow out = *this;
  if (i < size) {
    std::swap(out.window[static_cast<std::size_t>(i - 1)], out.window[static_cast<std::size_t>(i)]);
  } else {
    out.window.front() = window.back() - size;
    out.window.back() = window.front() + size;
  }
  return out;
}

long long AffineWindow::length() const {
  const long long size = n();
  long long total = 0;
  for (std::size_t i = 0; i < window.size(); ++i)
    for (std::size_t j = i + 1; j < window.size(); ++j) total += std::llabs(floor_div(window[j] - window[i], size));
  return total;
}

namespace {

// Letters of the base cycle read through the window: position p holds base_{u(p) mod n}.
std::vector<int> anchored_word(const Permutation& base, const AffineWindow& u) {
  std::vector<int> out;
  for (long long v : u.window) out.push_back(base.at(wrap_index(v, base.size())));
  return out;
}

// Simple reflection index exchanging the letters x and y in an anchored word,
// or 0 when they are not cyclically adjacent.
int reflection_between(const std::vector<int>& word, int x, int y) {
  const int n = static_cast<int>(word.size());
  const int px = static_cast<int>(std::find(word.begin(), word.end(), x) - word.begin()) + 1;
  const int py = static_cast<int>(std::find(word.begin(), word.end(), y) - word.begin()) + 1;
  if (wrap_index(px + 1, n) == py) return px;
  if (wrap_index(py + 1, n) == px) return py;
  return 0;
}

Permutation as_label(const std::vector<int>& word) {
  Permutation p(word);
  return rotation_ending_at(p, p.size());
}

}  // namespace

AffineLabeling affine_consistency_check(const TriangulationGraph& graph, int base) {
  const ShellingPoset bfs = shelling_poset(graph, base);
  const int count = static_cast<int>(graph.size());
  const int n = graph.labels.front().n();
  const Permutation& w0 = graph.labels[static_cast<std::size_t>(base)].w;

  std::map<std::pair<int, int>, std::pair<int, int>> letters_of;
  for (const auto& e : graph.edges) {
    letters_of[{e.a, e.b}] = e.letters;
    letters_of[{e.b, e.a}] = e.letters;
  }

  AffineLabeling out;
  out.windows.assign(static_cast<std::size_t>(count), AffineWindow{});
  std::vector<bool> assigned(static_cast<std::size_t>(count), false);
  out.windows[static_cast<std::size_t>(base)] = AffineWindow::identity(n);
  assigned[static_cast<std::size_t>(base)] = true;
  for (int v : bfs.order) {
    const auto word = anchored_word(w0, out.windows[static_cast<std::size_t>(v)]);
    for (int u : graph.adjacency[static_cast<std::size_t>(v)]) {
      if (assigned[static_cast<std::size_t>(u)] || bfs.dist[static_cast<std::size_t>(u)] != bfs.dist[static_cast<std::size_t>(v)] + 1) continue;
      const auto [x, y] = letters_of.at({v, u});
      const int i = reflection_between(word, x, y);
      if (i == 0) {
        out.violations.push_back("letters " + std::to_string(x) + "," + std::to_string(y) + " not adjacent in the anchored word of " +
                                 graph.labels[static_cast<std::size_t>(v)].w.to_string());
        continue;
      }
      out.windows[static_cast<std::size_t>(u)] = out.windows[static_cast<std::size_t>(v)].times_simple(i);
      assigned[static_cast<std::size_t>(u)] = true;
    }
  }

  for (int v = 0; v < count; ++v) {
    const auto& label = graph.labels[static_cast<std::size_t>(v)].w;
    if (!assigned[static_cast<std::size_t>(v)]) {
      out.violations.push_back("no window assigned to " + label.to_string());
      continue;
    }
    if (as_label(anchored_word(w0, out.windows[static_cast<std::size_t>(v)])) != label)
      out.violations.push_back("window of " + label.to_string() + " does not reproduce its cycle");
    if (out.windows[static_cast<std::size_t>(v)].length() != bfs.dist[static_cast<std::size_t>(v)])
      out.violations.push_back("length of the window of " + label.to_string() + " differs from its BFS distance");
  }
  for (const auto& e : graph.edges) {
    if (!assigned[static_cast<std::size_t>(e.a)] || !assigned[static_cast<std::size_t>(e.b)]) continue;
    const auto word = anchored_word(w0, out.windows[static_cast<std::size_t>(e.a)]);
    const int i = reflection_between(word, e.letters.first, e.letters.second);
    if (i == 0 || out.windows[static_cast<std::size_t>(e.a)].times_simple(i) != out.windows[static_cast<std::size_t>(e.b)])
      out.violations.push_back("edge " + graph.labels[static_cast<std::size_t>(e.a)].w.to_string() + " - " +
                               graph.labels[static_cast<std::size_t>(e.b)].w.to_string() + " is not a right multiplication by a simple reflection");
  }
  return out;
}

std::vector<mpq_class> phi_inverse_point(const std::vector<mpq_class>& x, PhiConvention convention) {
  std::vector<mpq_class> y(x.size());
  mpq_class tail = 0;
  for (std::size_t k = x.size(); k-- > 0;) {
    tail += x[k];
    const mpq_class fl(floor_of(tail));
    if (convention == PhiConvention::upper_closed) {
      y[k] = 1 + fl - tail;
    } else {
      y[k] = fl == tail ? mpq_class(0) : mpq_class(fl + 1 - tail);
    }
  }
  return y;
}

}  // namespace positroid
