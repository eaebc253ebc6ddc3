#include "positroid/circuit_triangulation.hpp"
#include "positroid/ehrhart_oracle.hpp"
#include "positroid/halfopen_hstar.hpp"
#include "positroid/workbench.hpp"
#include "workbench_internal.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <map>
#include <random>

namespace positroid::workbench {

namespace {

struct CheckRow {
  std::string check;
  bool ok = false;
  Json instance;
  std::string detail;
};

class Rows {
 public:
  explicit Rows(Json instance) : instance_(std::move(instance)) {}

  // Runs `fn`, which returns an empty string on success and a description otherwise.
  void check(const std::string& name, const std::function<std::string()>& fn) {
    std::string detail;
    try {
      detail = fn();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    rows_.push_back({name, detail.empty(), instance_, detail});
  }
  std::vector<CheckRow> take() { return std::move(rows_); }

 private:
  Json instance_;
  std::vector<CheckRow> rows_;
};

std::string mismatch(const std::string& what, const ExactPolynomial& a, const ExactPolynomial& b) {
  return a == b ? "" : what + ": " + a.to_string() + " vs " + b.to_string();
}

std::vector<Permutation> words(const std::vector<TriangulationLabel>& labels) {
  std::vector<Permutation> out;
  for (const auto& l : labels) out.push_back(l.w);
  return out;
}

std::vector<CheckRow> check_connected(const GrassmannNecklace& j) {
  Rows rows(j.to_string());
  const auto labels = enumerate_labels(j);
  const TriangulationGraph graph = build_graph(labels);
  const ShellingPoset poset = shelling_poset(graph, 0);
  const ExactPolynomial h = hstar_from_covers(poset);
  const int n = j.n();

  rows.check("label filters agree", [&] {
    return words(labels) == words(enumerate_labels_by_restriction(j)) ? "" : "cdes filter and interval filter differ";
  });
  rows.check("methods agree (shelling, incl-excl, oracle)", [&] {
    std::string d = mismatch("shelling vs inclusion-exclusion", h, hstar_closed_via_inclusion_exclusion(j));
    return d.empty() ? mismatch("shelling vs oracle", h, hstar_oracle(j)) : d;
  });
  rows.check("w0 independence", [&] {
    for (int b = 0; b < static_cast<int>(graph.size()); ++b) {
      const ExactPolynomial hb = hstar_from_covers(shelling_poset(graph, b));
      if (!(hb == h)) return mismatch("base " + graph.labels[static_cast<std::size_t>(b)].w.to_string(), hb, h);
    }
    return std::string();
  });
  rows.check("|D_J| = h*(1)", [&] {
    return h.evaluate(1) == static_cast<long>(labels.size()) ? "" : "h*(1) = " + h.evaluate(1).get_str();
  });
  rows.check("normalized volume = |D_J|", [&] {
    const EhrhartPolynomial e = ehrhart_by_counting(j);
    mpq_class v = e.poly.coefficient(e.dim);
    for (int i = 2; i <= e.dim; ++i) v *= i;
    return v == static_cast<long>(labels.size()) ? "" : "normalized volume " + v.get_str();
  });
  rows.check("sum of covers = edge count", [&] {
    long total = 0;
    for (int c : poset.cover) total += c;
    return total == static_cast<long>(graph.edges.size()) ? "" : "sum of covers " + std::to_string(total);
  });
  rows.check("half-open: descents = oracle", [&] {
    return mismatch("descents vs oracle", hstar_half_open(j), hstar_half_open_oracle(j));
  });
  rows.check("half-open lattice partition", [&] {
    const HRepresentation region = facet_region(j, true);
    std::vector<HRepresentation> pieces;
    for (const auto& l : labels) pieces.push_back(half_open_simplex(l));
    for (int t = 0; t < n; ++t) {
      long long sum = 0;
      for (const auto& p : pieces) sum += count_points(p, t);
      const long long whole = count_points(region, t);
      if (sum != whole)
        return "t = " + std::to_string(t) + ": region " + std::to_string(whole) + ", simplices " + std::to_string(sum);
    }
    return std::string();
  });
  rows.check("affine labeling consistent", [&] {
    const AffineLabeling a = affine_consistency_check(graph, 0);
    return a.consistent() ? "" : a.violations.front();
  });
  return rows.take();
}

std::vector<CheckRow> check_decorated(const DecoratedPermutation& d) {
  Rows rows(d.to_string());
  const GrassmannNecklace j = necklace_from_decorated(d);
  const PositroidBases bases = bases_from_necklace(j);
  rows.check("bijection round trips", [&] {
    if (!(decorated_from_necklace(j) == d)) return std::string("decorated -> necklace -> decorated");
    if (!(necklace_from_bases(bases) == j)) return std::string("necklace -> bases -> necklace");
    return std::string();
  });
  rows.check("lattice points of P = bases", [&] {
    const long long c = count_points(h_representation(j), 1);
    return c == static_cast<long long>(bases.size()) ? "" : "E(1) = " + std::to_string(c);
  });
  std::vector<CheckRow> out = rows.take();
  if (is_connected(bases)) {
    if (j.n() >= 2)
      for (auto& r : check_connected(j)) out.push_back(std::move(r));
  } else {
    Rows sums(d.to_string());
    sums.check("direct sums: product = direct count", [&] {
      return mismatch("direct vs product", hstar_oracle(j), hstar_from_ehrhart(ehrhart_by_components(bases)));
    });
    for (auto& r : sums.take()) out.push_back(std::move(r));
  }
  return out;
}

Json subdivision_json(const BicoloredSubdivision& tau) {
  Json cells = Json::array();
  for (const auto& c : tau.cells()) cells.push_back({{"color", to_string(c.color)}, {"vertices", c.vertices}});
  return Json{{"n", tau.n()}, {"cells", cells}};
}

std::vector<CheckRow> check_tree(const BicoloredSubdivision& tau) {
  Rows rows(subdivision_json(tau));
  const int n = tau.n();
  const GrassmannNecklace j = necklace_from_subdivision(tau);
  rows.check("tree: both H-representations agree", [&] {
    const HRepresentation facets = facet_h_rep_from_subdivision(tau);
    std::vector<KSubset> points;
    for (std::uint32_t m : all_subsets_of_size(n, tau.rank())) {
      const auto ind = KSubset::from_mask(n, m).indicator();
      if (facets.contains(std::vector<long long>(ind.begin(), ind.end()))) points.push_back(KSubset::from_mask(n, m));
    }
    return PositroidBases(n, points) == bases_from_subdivision(tau) ? "" : "0/1 points differ";
  });
  rows.check("tree: cut-out set is a positroid", [&] {
    return bases_from_necklace(j) == bases_from_subdivision(tau) ? "" : "not a positroid";
  });
  const auto ext = circular_extensions(tau_order(tau), n);
  rows.check("tree: extensions = D_J", [&] {
    return words(ext) == words(enumerate_labels(j)) ? "" : "extension set differs from D_J";
  });
  rows.check("tree: h* matches necklace pipeline", [&] {
    return mismatch("tree vs necklace", hstar_tree(tau), hstar_shelling(j));
  });
  rows.check("tree: h* independent of w0", [&] {
    const ExactPolynomial h = hstar_tree(tau);
    for (const auto& l : ext)
      if (!(hstar_tree(tau, l.w) == h)) return "w0 = " + l.w.to_string();
    return std::string();
  });
  rows.check("tree: area(i->j) + area(j->i) = k", [&] {
    const auto all = arcs(tau);
    for (const auto& a : all) {
      if (!a.compatible) continue;
      const auto& back = all[static_cast<std::size_t>((a.to - 1) * (n - 1) + (a.from < a.to ? a.from - 1 : a.from - 2))];
      if (back.from != a.to || back.to != a.from) return std::string("arc table out of order");
      if (a.area + back.area != tau.k()) return std::to_string(a.from) + "->" + std::to_string(a.to);
    }
    return std::string();
  });
  rows.check("tree: fan rootings agree on cell edges", [&] {
    for (const auto& c : tau.cells()) {
      for (std::size_t t = 0; t < c.vertices.size(); ++t) {
        const int a = c.vertices[t], b = c.vertices[(t + 1) % c.vertices.size()];
        for (auto [i, k] : {std::pair{a, b}, std::pair{b, a}}) {
          const int x = fan_area(tau, i, k, true), y = fan_area(tau, i, k, false);
          int area = -1;
          for (const auto& arc : arcs(tau))
            if (arc.from == i && arc.to == k) area = arc.area;
          if (x != y || x != area) return std::to_string(i) + "->" + std::to_string(k);
        }
      }
    }
    return std::string();
  });
  return rows.take();
}

GrassmannNecklace necklace_of(const std::string& text) { return to_necklace(parse_input(text)); }

ExactPolynomial poly(std::initializer_list<long> c) {
  std::vector<mpq_class> v;
  for (long x : c) v.emplace_back(x);
  return ExactPolynomial(std::move(v));
}

std::vector<CheckRow> worked_example_rows() {
  Rows rows(nullptr);
  const auto rank3_example = necklace_of("123,235,345,145,125");
  const auto delta25 = necklace_of("12,23,34,45,15");
  const auto ex = necklace_of("124,234,134,145,125");
  const auto pyramid = necklace_of("12,23,13,14");

  rows.check("golden: pyramid bases", [&] {
    std::string s;
    const PositroidBases bases = bases_from_necklace(pyramid);
    for (const auto& b : bases.bases()) s += b.to_string() + " ";
    return s == "12 13 14 23 24 " ? "" : s;
  });
  rows.check("golden: circuit of 32415", [&] {
    std::string s;
    for (const auto& b : circuit_subsets(Permutation::parse("32415"))) s += b.to_string() + " ";
    return s == "135 235 245 124 125 " ? "" : s;
  });
  rows.check("golden: h* of (123,235,345,145,125)", [&] {
    const auto want = poly({1, 4, 3});
    std::string d = mismatch("shelling", hstar_shelling(rank3_example), want);
    if (d.empty()) d = mismatch("inclusion-exclusion", hstar_closed_via_inclusion_exclusion(rank3_example), want);
    return d.empty() ? mismatch("oracle", hstar_oracle(rank3_example), want) : d;
  });
  rows.check("golden: h* of the hypersimplex (2,5)", [&] {
    return mismatch("shelling", hstar_shelling(delta25, Permutation::parse("31425")), poly({1, 5, 5}));
  });
  rows.check("golden: h* of (124,234,134,145,125)", [&] {
    std::string d = mismatch("shelling", hstar_shelling(ex, Permutation::parse("24135")), poly({1, 3, 1}));
    return d.empty() ? mismatch("inclusion-exclusion", hstar_closed_via_inclusion_exclusion(ex), poly({1, 3, 1})) : d;
  });
  rows.check("golden: pyramid h* by inclusion-exclusion", [&] {
    return mismatch("inclusion-exclusion", hstar_closed_via_inclusion_exclusion(pyramid), poly({1, 1}));
  });
  rows.check("golden: half-open pyramid", [&] { return mismatch("descents", hstar_half_open(pyramid), poly({0, 0, 2})); });
  rows.check("golden: half-open (124,234,134,145,125)", [&] {
    return mismatch("descents", hstar_half_open(ex), poly({0, 0, 1, 4}));
  });
  rows.check("golden: pyramid labels", [&] {
    return words(enumerate_labels(pyramid)) ==
                   std::vector<Permutation>{Permutation::parse("1324"), Permutation::parse("2134")}
               ? ""
               : "label set differs";
  });
  rows.check("golden: labels of (124,234,134,145,125)", [&] {
    std::vector<Permutation> want;
    for (const char* w : {"24135", "32415", "34215", "41325", "42135"}) want.push_back(Permutation::parse(w));
    return words(enumerate_labels(ex)) == want ? "" : "label set differs";
  });
  rows.check("golden: prism and square faces", [&] {
    const FacePoset poset = face_poset_of_uppers(ex);
    const HRepresentation closed = facet_region(ex, false);
    int prisms = 0, squares = 0;
    for (const auto& node : poset.nodes) {
      std::vector<IntervalEquality> eqs;
      for (std::size_t f = 0; f < poset.uppers.size(); ++f)
        if ((node.generators >> f) & 1u)
          eqs.push_back({CyclicInterval{poset.uppers[f].lo, poset.uppers[f].hi, 5}, poset.uppers[f].bound});
      if (node.dim == 3 && node.vertex_set.size() == 6) {
        ++prisms;
        if (!(face_hstar(closed, eqs, 3) == poly({1, 2}))) return std::string("prism h* differs");
      }
      if (node.dim == 2 && node.vertex_set.size() == 4) {
        ++squares;
        if (!(face_hstar(closed, eqs, 2) == poly({1, 1}))) return std::string("square h* differs");
      }
    }
    return std::string(prisms == 1 && squares == 2 ? "" : "face counts differ");
  });
  rows.check("golden: disconnected square", [&] {
    const auto j = necklace_of(R"({"n":4,"bases":[[1,3],[1,4],[2,3],[2,4]]})");
    return mismatch("oracle", hstar_oracle(j), poly({1, 1}));
  });
  rows.check("golden: 3142 and the pyramid necklace", [&] {
    return decorated_from_necklace(pyramid).to_string() == "3142" ? "" : decorated_from_necklace(pyramid).to_string();
  });
  rows.check("golden: half-open cube simplex of 3241", [&] {
    const std::string s = cube_simplex_description(Permutation::parse("3241"));
    return s == "0 < y3 < y2 <= y4 < y1 <= 1" ? "" : s;
  });
  rows.check("golden: tree subdivisions", [&] {
    const auto square_subdivision = validate_subdivision(4, {{CellColor::black, {1, 2, 3}}, {CellColor::white, {1, 3, 4}}});
    const auto pentagon_subdivision = validate_subdivision(
        5, {{CellColor::black, {1, 2, 3}}, {CellColor::white, {1, 3, 4}}, {CellColor::black, {1, 4, 5}}});
    if (!(hstar_tree(square_subdivision) == poly({1, 1}))) return std::string("first subdivision");
    if (!(hstar_tree(pentagon_subdivision) == poly({1, 3, 1}))) return std::string("second subdivision");
    if (!(necklace_from_subdivision(pentagon_subdivision) == ex)) return std::string("necklace of second subdivision");
    return std::string();
  });
  return rows.take();
}

std::vector<CheckRow> fixture_rows(const std::string& path) {
  std::vector<CheckRow> out;
  Json fixture;
  try {
    fixture = Json::parse(std::ifstream(path));
  } catch (const std::exception& e) {
    throw CommandError(kInvalidInput, "fixture '" + path + "': " + e.what());
  }
  if (!fixture.contains("cases") || !fixture["cases"].is_array())
    throw CommandError(kInvalidInput, "fixture '" + path + "' has no \"cases\" list");
  for (std::size_t i = 0; i < fixture["cases"].size(); ++i) {
    const Json& c = fixture["cases"][i];
    Rows rows(c);
    rows.check("fixture cases", [&] {
      const Json& raw = c.at("necklace");
      const GrassmannNecklace j = to_necklace(parse_input(raw.is_string() ? raw.get<std::string>() : raw.dump()));
      JobSpec job;
      job.method = Method::all;
      const Json report = hstar_report(j, job);
      if (report["verdict"] != "PASS") return std::string("methods disagree: ") + report["hstar"].dump();
      if (c.contains("hstar") && report["hstar"].begin().value() != c["hstar"])
        return "expected " + c["hstar"].dump() + ", computed " + report["hstar"].begin().value().dump();
      if (c.contains("half_open")) {
        job.half_open = true;
        const Json half = hstar_report(j, job);
        if (half["hstar"]["descents"] != c["half_open"])
          return "half-open expected " + c["half_open"].dump() + ", computed " + half["hstar"]["descents"].dump();
      }
      return std::string();
    });
    for (auto& r : rows.take()) {
      r.instance = Json{{"case", i + 1}, {"input", c}};
      out.push_back(std::move(r));
    }
  }
  return out;
}

// A connected positroid on [n] drawn uniformly among decorated permutations.
GrassmannNecklace random_connected(int n, std::mt19937_64& rng) {
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  while (true) {
    std::shuffle(word.begin(), word.end(), rng);
    const Permutation pi(word);
    if (!is_stabilized_interval_free_cyclic(pi)) continue;
    const GrassmannNecklace j = necklace_from_decorated({pi, {}});
    if (is_connected(bases_from_necklace(j))) return j;
  }
}

}  // namespace

VerifyOutcome run_verify(const JobSpec& job) {
  std::vector<std::vector<CheckRow>> batches;
  const int cap = size_cap();
  if (job.scope == "paper-examples") {
    batches.push_back(worked_example_rows());
  } else if (job.scope == "fixture") {
    if (job.input.empty()) throw CommandError(kInvalidInput, "verify --scope fixture needs --input <file>");
    batches.push_back(fixture_rows(job.input));
  } else if (job.scope == "exhaustive") {
    if (job.max_n < 1 || job.max_n > cap)
      throw CommandError(kInvalidInput, "--max-n must lie in [1, " + std::to_string(cap) + "]");
    std::vector<DecoratedPermutation> all;
    for (int n = 1; n <= job.max_n; ++n)
      for (auto& d : all_decorated_permutations(n)) all.push_back(std::move(d));
    for (auto& b : parallel_map(all.size(), job.jobs, [&](std::size_t i) { return check_decorated(all[i]); }))
      batches.push_back(std::move(b));
    const int top = std::max(3, std::min(job.max_n + 1, cap));
    for (auto& b : parallel_map(static_cast<std::size_t>(job.samples), job.jobs, [&](std::size_t i) {
           std::mt19937_64 rng(job.seed * 1000003ULL + i);
           const int n = 3 + static_cast<int>(i % static_cast<std::size_t>(top - 2));
           return check_tree(random_subdivision(n, rng, i % 3 == 2));
         }))
      batches.push_back(std::move(b));
  } else if (job.scope == "random") {
    const int top = std::min(job.max_n, cap);
    if (top < 2) throw CommandError(kInvalidInput, "--max-n must be at least 2 for the random scope");
    for (auto& b : parallel_map(static_cast<std::size_t>(job.samples), job.jobs, [&](std::size_t i) {
           std::mt19937_64 rng(job.seed * 1000003ULL + i);
           const int n = 2 + static_cast<int>(i % static_cast<std::size_t>(top - 1));
           return check_connected(random_connected(n, rng));
         }))
      batches.push_back(std::move(b));
  } else {
    throw CommandError(kInvalidInput, "unknown scope '" + job.scope + "' (paper-examples, exhaustive, random, fixture)");
  }

  VerifyOutcome outcome;
  std::vector<std::string> order;
  std::map<std::string, std::pair<int, int>> tally;
  for (const auto& batch : batches) {
    for (const auto& row : batch) {
      auto [it, fresh] = tally.try_emplace(row.check, 0, 0);
      if (fresh) order.push_back(row.check);
      it->second.second += 1;
      if (row.ok) it->second.first += 1;
      else if (outcome.counterexample.is_null())
        outcome.counterexample = Json{{"check", row.check}, {"instance", row.instance}, {"detail", row.detail}};
    }
  }
  for (const auto& name : order)
    outcome.table.push_back({{"check", name}, {"passed", tally[name].first}, {"total", tally[name].second}});
  return outcome;
}

}  // namespace positroid::workbench
