#include "positroid/workbench.hpp"

#include "positroid/circuit_triangulation.hpp"
#include "positroid/ehrhart_oracle.hpp"
#include "positroid/halfopen_hstar.hpp"
#include "workbench_internal.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace positroid::workbench {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw CommandError(kInvalidInput, what); }

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::string read_source(const std::string& text_or_path) {
  std::error_code ec;
  if (text_or_path.size() < 4096 && std::filesystem::is_regular_file(text_or_path, ec)) {
    std::ifstream in(text_or_path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  return text_or_path;
}

std::string line_and_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

std::vector<int> int_list(const Json& j, const std::string& where) {
  if (!j.is_array()) invalid(where + ": expected a list of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) invalid(where + ": expected integers, found " + v.dump());
    out.push_back(v.get<int>());
  }
  return out;
}

// "123" as digits, "10 11 12" as whitespace-separated numbers.
std::vector<int> parse_group(const std::string& group, std::size_t index) {
  const std::string g = trim(group);
  std::vector<int> out;
  if (g.find_first_of(" \t") != std::string::npos) {
    std::istringstream in(g);
    std::string tok;
    while (in >> tok) {
      if (!std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }))
        invalid("entry " + std::to_string(index) + ": '" + tok + "' is not a number");
      out.push_back(std::stoi(tok));
    }
    return out;
  }
  for (char c : g) {
    if (c < '1' || c > '9') invalid("entry " + std::to_string(index) + ": unexpected character '" + std::string(1, c) + "'");
    out.push_back(c - '0');
  }
  return out;
}

GrassmannNecklace necklace_or_invalid(int n, const std::vector<std::vector<int>>& raw) {
  try {
    return validate_necklace(n, raw);
  } catch (const ValidationError& e) {
    invalid(std::string("necklace ") + e.what());
  }
}

std::vector<std::vector<int>> subset_lists(const Json& j, const std::string& what) {
  if (!j.is_array()) invalid(what + ": expected a list of subsets");
  std::vector<std::vector<int>> raw;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i].is_string()) raw.push_back(parse_group(j[i].get<std::string>(), i + 1));
    else raw.push_back(int_list(j[i], what + " entry " + std::to_string(i + 1)));
  }
  return raw;
}

ParsedInput parse_json_input(const Json& j) {
  if (j.is_array()) {
    auto raw = subset_lists(j, "necklace");
    return necklace_or_invalid(static_cast<int>(raw.size()), raw);
  }
  if (!j.is_object()) invalid("expected a JSON object or list");
  if (j.contains("cells")) {
    if (!j.contains("n") || !j["n"].is_number_integer()) invalid("subdivision: missing integer field 'n'");
    const int n = j["n"].get<int>();
    std::vector<Cell> cells;
    for (std::size_t c = 0; c < j["cells"].size(); ++c) {
      const Json& cell = j["cells"][c];
      const std::string where = "cell " + std::to_string(c + 1);
      if (!cell.is_object() || !cell.contains("color") || !cell.contains("vertices"))
        invalid(where + ": expected {\"color\": ..., \"vertices\": [...]}");
      const std::string color = cell["color"].is_string() ? cell["color"].get<std::string>() : "";
      if (color != "black" && color != "white") invalid(where + ": color must be \"black\" or \"white\"");
      cells.push_back({color == "black" ? CellColor::black : CellColor::white, int_list(cell["vertices"], where)});
    }
    try {
      return validate_subdivision(n, std::move(cells));
    } catch (const ValidationError& e) {
      invalid(std::string("subdivision: ") + e.what());
    }
  }
  if (j.contains("necklace")) {
    auto raw = subset_lists(j["necklace"], "necklace");
    const int n = j.contains("n") ? j["n"].get<int>() : static_cast<int>(raw.size());
    return necklace_or_invalid(n, raw);
  }
  if (j.contains("pi")) {
    DecoratedPermutation d;
    try {
      d.pi = Permutation(int_list(j["pi"], "pi"));
    } catch (const std::invalid_argument& e) {
      invalid(std::string("pi: ") + e.what());
    }
    if (j.contains("colors")) {
      if (!j["colors"].is_object()) invalid("colors: expected an object keyed by fixed point");
      for (const auto& [key, value] : j["colors"].items()) {
        int point = 0;
        try {
          point = std::stoi(key);
        } catch (const std::exception&) {
          invalid("colors: key '" + key + "' is not a number");
        }
        const std::string c = value.is_string() ? value.get<std::string>() : "";
        if (c != "black" && c != "white") invalid("colors: fixed point " + key + " must be \"black\" or \"white\"");
        d.colors[point] = c == "black" ? FixedPointColor::black : FixedPointColor::white;
      }
    }
    try {
      d.validate();
    } catch (const ValidationError& e) {
      invalid(std::string("decorated permutation: ") + e.what());
    }
    return d;
  }
  if (j.contains("bases")) {
    auto raw = subset_lists(j["bases"], "bases");
    int n = 0;
    if (j.contains("n")) n = j["n"].get<int>();
    else
      for (const auto& b : raw)
        for (int a : b) n = std::max(n, a);
    try {
      std::vector<KSubset> bases;
      for (auto& b : raw) bases.emplace_back(n, std::move(b));
      return PositroidBases(n, std::move(bases));
    } catch (const std::invalid_argument& e) {
      invalid(std::string("bases: ") + e.what());
    }
  }
  invalid("unrecognised input: expected one of the keys necklace, pi, bases, cells");
}

Json inequality_list(const HRepresentation& h) {
  Json out = Json::array();
  for (const auto& q : h.inequalities) out.push_back(inequality_string(q));
  return out;
}

std::optional<Permutation> parse_w0(const JobSpec& job) {
  if (!job.w0) return std::nullopt;
  try {
    return Permutation::parse(*job.w0);
  } catch (const std::invalid_argument& e) {
    invalid("--w0: " + std::string(e.what()));
  }
}

Json components_json(const PositroidBases& bases) {
  Json out = Json::array();
  for (const auto& c : decompose_direct_sum(bases)) out.push_back(c.ground);
  return out;
}

std::string components_text(const PositroidBases& bases) {
  std::string s;
  for (const auto& c : decompose_direct_sum(bases)) {
    s += s.empty() ? "{" : ",{";
    for (std::size_t i = 0; i < c.ground.size(); ++i) s += (i ? "," : "") + std::to_string(c.ground[i]);
    s += "}";
  }
  return s;
}

[[noreturn]] void disconnected(const PositroidBases& bases, const std::string& method) {
  throw CommandError(kDisconnected, "positroid is disconnected (components " + components_text(bases) +
                                        "); method '" + method +
                                        "' needs a connected positroid: split it with decompose_direct_sum "
                                        "or use --method oracle");
}

Json ehrhart_from_hstar(const ExactPolynomial& h, int d) {
  ExactPolynomial e;
  for (int j = 0; j <= h.degree(); ++j) e += ExactPolynomial::shifted_binomial(d - j, d) * h.coefficient(j);
  return rational_polynomial_json(e);
}

long long elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::string inequality_string(const IntervalInequality& q) {
  std::string s;
  for (int a : q.interval.sum_indices()) s += (s.empty() ? "x" : "+x") + std::to_string(a);
  if (s.empty()) s = "0";
  const char* op = q.sense == Sense::less_equal ? (q.strict ? " < " : " <= ") : (q.strict ? " > " : " >= ");
  return s + op + std::to_string(q.bound);
}

Method parse_method(const std::string& name) {
  if (name == "shelling") return Method::shelling;
  if (name == "descents") return Method::descents;
  if (name == "inclusion-exclusion") return Method::inclusion_exclusion;
  if (name == "oracle") return Method::oracle;
  if (name == "all") return Method::all;
  invalid("unknown method '" + name + "'");
}

std::string to_string(Method m) {
  switch (m) {
    case Method::shelling: return "shelling";
    case Method::descents: return "descents";
    case Method::inclusion_exclusion: return "inclusion-exclusion";
    case Method::oracle: return "oracle";
    case Method::all: return "all";
  }
  return "?";
}

ParsedInput parse_input(const std::string& text_or_path) {
  const std::string text = trim(read_source(text_or_path));
  if (text.empty()) invalid("empty input");
  if (text.front() == '{' || text.front() == '[') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      invalid("JSON syntax error at " + line_and_column(text, e.byte) + " (offset " + std::to_string(e.byte) + ")");
    }
    try {
      return parse_json_input(j);
    } catch (const Json::exception& e) {
      invalid(std::string("malformed input: ") + e.what());
    }
  }
  if (text.find(',') != std::string::npos) {
    std::vector<std::vector<int>> raw;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = text.find(',', start);
      raw.push_back(parse_group(text.substr(start, comma - start), raw.size() + 1));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return necklace_or_invalid(static_cast<int>(raw.size()), raw);
  }
  DecoratedPermutation d;
  try {
    d.pi = Permutation::parse(text);
  } catch (const std::invalid_argument& e) {
    invalid("permutation '" + text + "': " + e.what());
  }
  for (int i = 1; i <= d.pi.size(); ++i)
    if (d.pi.at(i) == i) invalid("fixed point " + std::to_string(i) + " needs a color; use the JSON form with \"colors\"");
  return d;
}

GrassmannNecklace to_necklace(const ParsedInput& input) {
  if (auto* j = std::get_if<GrassmannNecklace>(&input)) return *j;
  if (auto* d = std::get_if<DecoratedPermutation>(&input)) return necklace_from_decorated(*d);
  if (auto* b = std::get_if<PositroidBases>(&input)) {
    const GrassmannNecklace j = necklace_from_bases(*b);
    if (!(bases_from_necklace(j) == *b)) invalid("the bases do not form a positroid");
    return j;
  }
  return necklace_from_subdivision(std::get<BicoloredSubdivision>(input));
}

Json necklace_json(const GrassmannNecklace& necklace) {
  Json subsets = Json::array();
  for (const auto& s : necklace.subsets()) subsets.push_back(s.elements());
  return Json{{"n", necklace.n()}, {"rank", necklace.rank()}, {"subsets", subsets}, {"text", necklace.to_string()}};
}

Json decorated_json(const DecoratedPermutation& d) {
  Json colors = Json::object();
  for (const auto& [point, color] : d.colors)
    colors[std::to_string(point)] = color == FixedPointColor::black ? "black" : "white";
  return Json{{"pi", d.pi.word()}, {"colors", colors}, {"text", d.to_string()}};
}

Json polynomial_json(const ExactPolynomial& p) {
  Json out = Json::array();
  for (long long c : p.integer_coefficients(1)) out.push_back(c);
  return out;
}

Json rational_polynomial_json(const ExactPolynomial& p) {
  Json out = Json::array();
  if (p.is_zero()) out.push_back("0");
  for (const auto& c : p.coefficients()) out.push_back(c.get_str());
  return out;
}

int size_cap() {
  if (const char* env = std::getenv("POSITROID_MAX_N")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      invalid(std::string("POSITROID_MAX_N='") + env + "' is not an integer");
    }
  }
  return 7;
}

Json run_convert(const JobSpec& job) {
  const ParsedInput input = parse_input(job.input);
  const GrassmannNecklace necklace = to_necklace(input);
  const PositroidBases bases = bases_from_necklace(necklace);
  Json bases_list = Json::array();
  for (const auto& b : bases.bases()) bases_list.push_back(b.elements());
  const bool connected = is_connected(bases);
  Json report{{"command", "convert"},
              {"input", input_kind(input)},
              {"n", necklace.n()},
              {"rank", necklace.rank()},
              {"necklace", necklace_json(necklace)},
              {"decorated", decorated_json(decorated_from_necklace(necklace))},
              {"bases", bases_list},
              {"basis_count", bases.size()},
              {"connected", connected},
              {"components", components_json(bases)}};
  if (!connected) report["note"] = "disconnected: components " + components_text(bases);
  return report;
}

std::string input_kind(const ParsedInput& input) {
  switch (input.index()) {
    case 0: return "necklace";
    case 1: return "decorated";
    case 2: return "bases";
    default: return "subdivision";
  }
}

Json hstar_report(const GrassmannNecklace& necklace, const JobSpec& job) {
  const auto start = std::chrono::steady_clock::now();
  const PositroidBases bases = bases_from_necklace(necklace);
  const bool connected = is_connected(bases);
  const bool triangulable = connected && necklace.n() >= 2;
  const int d = polytope_dimension(bases);

  std::vector<std::string> methods;
  const std::string requested = to_string(job.method);
  if (job.half_open) {
    if (job.method == Method::shelling || job.method == Method::inclusion_exclusion)
      invalid("method '" + requested + "' computes the closed polynomial; drop --half-open");
    if (!connected) disconnected(bases, requested == "all" ? "descents" : requested);
    if (!triangulable) invalid("the half-open polytope needs n >= 2");
    methods = job.method == Method::all ? std::vector<std::string>{"descents", "oracle"}
                                        : std::vector<std::string>{requested};
  } else {
    switch (job.method) {
      case Method::descents: invalid("method 'descents' gives the half-open polynomial; add --half-open");
      case Method::shelling:
      case Method::inclusion_exclusion:
        if (!connected) disconnected(bases, requested);
        if (!triangulable) invalid("method '" + requested + "' needs n >= 2");
        methods = {requested};
        break;
      case Method::oracle: methods = {"oracle"}; break;
      case Method::all:
        if (triangulable) methods = {"shelling", "inclusion-exclusion", "oracle"};
        else if (!connected) methods = {"oracle", "oracle-components"};
        else methods = {"oracle"};
        break;
    }
  }

  std::optional<Permutation> w0 = parse_w0(job);
  Json report{{"command", "hstar"},
              {"input", necklace_json(necklace)},
              {"n", necklace.n()},
              {"rank", necklace.rank()},
              {"connected", connected},
              {"components", components_json(bases)},
              {"half_open", job.half_open},
              {"method", requested},
              {"dim", d}};

  std::optional<TriangulationGraph> graph;
  if (triangulable) {
    graph = build_graph(enumerate_labels(necklace));
    report["labels"] = graph->size();
    if (w0 && !graph->index_of(*w0)) invalid("--w0 " + w0->to_string() + " is not a triangulation label");
    if (w0) report["w0"] = w0->to_string();
  } else if (w0) {
    invalid("--w0 needs a connected positroid");
  }

  Json results = Json::object();
  Json errors = Json::object();
  std::optional<ExactPolynomial> first;
  bool agree = true;
  for (const auto& m : methods) {
    try {
      ExactPolynomial h;
      if (m == "shelling") h = hstar_from_covers(w0 ? shelling_poset(*graph, *w0) : shelling_poset(*graph, 0));
      else if (m == "inclusion-exclusion") h = hstar_closed_via_inclusion_exclusion(necklace);
      else if (m == "descents") h = hstar_half_open(necklace);
      else if (m == "oracle") h = job.half_open ? hstar_half_open_oracle(necklace, job.tmax) : hstar_oracle(necklace, job.tmax);
      else h = hstar_from_ehrhart(ehrhart_by_components(bases));
      const bool well_formed = h.has_integer_coefficients() && h.has_nonnegative_coefficients() &&
                               h.coefficient(0) == (job.half_open ? 0 : 1);
      if (!well_formed) errors[m] = "malformed coefficients " + h.to_string();
      results[m] = polynomial_json(h);
      if (!first) first = h;
      else if (!(h == *first)) agree = false;
    } catch (const std::exception& e) {
      errors[m] = e.what();
    }
  }
  report["hstar"] = results;
  if (!errors.empty()) report["errors"] = errors;
  if (first && !job.half_open) report["ehrhart"] = ehrhart_from_hstar(*first, d);
  report["verdict"] = agree && errors.empty() && first ? "PASS" : "FAIL";
  if (job.timing) report["timing_ms"] = elapsed_ms(start);
  return report;
}

Json run_hstar(const JobSpec& job) { return hstar_report(to_necklace(parse_input(job.input)), job); }

Json run_ehrhart(const JobSpec& job) {
  const auto start = std::chrono::steady_clock::now();
  const GrassmannNecklace necklace = to_necklace(parse_input(job.input));
  const PositroidBases bases = bases_from_necklace(necklace);
  const int d = polytope_dimension(bases);
  const CountProfile profile = count_profile(h_representation(necklace), {}, d, job.tmax);
  const EhrhartPolynomial e = ehrhart_interpolate(profile);
  const EhrhartPolynomial product = ehrhart_by_components(bases);
  mpz_class factorial = 1;
  for (int i = 2; i <= d; ++i) factorial *= i;
  const mpq_class volume = e.poly.coefficient(d) * factorial;
  Json report{{"command", "ehrhart"},
              {"input", necklace_json(necklace)},
              {"n", necklace.n()},
              {"rank", necklace.rank()},
              {"connected", is_connected(bases)},
              {"dim", d},
              {"counts", profile.counts},
              {"ehrhart", rational_polynomial_json(e.poly)},
              {"normalized_volume", volume.get_str()},
              {"hstar", polynomial_json(hstar_from_counts(profile))},
              {"components_agree", product.poly == e.poly}};
  report["verdict"] = product.poly == e.poly ? "PASS" : "FAIL";
  if (job.timing) report["timing_ms"] = elapsed_ms(start);
  return report;
}

Json run_triangulate(const JobSpec& job) {
  const GrassmannNecklace necklace = to_necklace(parse_input(job.input));
  const PositroidBases bases = bases_from_necklace(necklace);
  if (!is_connected(bases)) disconnected(bases, "triangulate");
  if (necklace.n() < 2) invalid("triangulate needs n >= 2");
  const TriangulationGraph graph = build_graph(enumerate_labels(necklace));
  const std::optional<Permutation> w0 = parse_w0(job);
  if (w0 && !graph.index_of(*w0)) invalid("--w0 " + w0->to_string() + " is not a triangulation label");
  const ShellingPoset poset = w0 ? shelling_poset(graph, *w0) : shelling_poset(graph, 0);
  const AffineLabeling affine = affine_consistency_check(graph, poset.base);

  Json labels = Json::array();
  for (std::size_t i = 0; i < graph.size(); ++i) {
    const auto& label = graph.labels[i];
    Json circuit = Json::array();
    for (const auto& s : label.circuit) circuit.push_back(s.to_string());
    const auto& word = label.w.word();
    labels.push_back({{"w", label.w.to_string()},
                      {"circuit", circuit},
                      {"facets", inequality_list(simplex_facets(label))},
                      {"dist", poset.dist[i]},
                      {"cover", poset.cover[i]},
                      {"descents", descent_count(std::span<const int>(word.data(), word.size() - 1))},
                      {"window", affine.windows[i].window},
                      {"length", affine.windows[i].length()}});
  }
  Json edges = Json::array();
  for (const auto& e : graph.edges)
    edges.push_back({{"from", graph.labels[static_cast<std::size_t>(e.a)].w.to_string()},
                     {"to", graph.labels[static_cast<std::size_t>(e.b)].w.to_string()},
                     {"position", e.swap_position},
                     {"letters", {e.letters.first, e.letters.second}}});
  Json order = Json::array();
  for (int v : poset.order) order.push_back(graph.labels[static_cast<std::size_t>(v)].w.to_string());
  return Json{{"command", "triangulate"},
              {"input", necklace_json(necklace)},
              {"n", necklace.n()},
              {"rank", necklace.rank()},
              {"base", graph.labels[static_cast<std::size_t>(poset.base)].w.to_string()},
              {"labels", labels},
              {"edges", edges},
              {"shelling_order", order},
              {"affine_consistent", affine.consistent()},
              {"violations", affine.violations},
              {"hstar", polynomial_json(hstar_from_covers(poset))},
              {"verdict", affine.consistent() ? "PASS" : "FAIL"}};
}

Json run_tree(const JobSpec& job) {
  const ParsedInput input = parse_input(job.input);
  const auto* tau = std::get_if<BicoloredSubdivision>(&input);
  if (!tau) invalid("tree expects a subdivision {\"n\": ..., \"cells\": [...]}");
  const std::optional<Permutation> w0 = parse_w0(job);
  const GrassmannNecklace necklace = necklace_from_subdivision(*tau);
  const auto chains = tau_order(*tau);
  const auto extensions = circular_extensions(chains, tau->n());
  if (extensions.empty()) throw CommandError(kVerifyFailure, "the chains have no circular extension");

  Json cells = Json::array();
  for (const auto& c : tau->cells()) cells.push_back({{"color", to_string(c.color)}, {"vertices", c.vertices}});
  Json arc_list = Json::array();
  for (const auto& a : arcs(*tau))
    if (a.compatible)
      arc_list.push_back({{"from", a.from}, {"to", a.to}, {"area", a.area}, {"facet_defining", a.facet_defining}});
  Json ext = Json::array();
  for (const auto& l : extensions) ext.push_back(l.w.to_string());

  const ExactPolynomial tree_h = [&] {
    try {
      return hstar_tree(*tau, w0);
    } catch (const std::invalid_argument& e) {
      invalid(e.what());
    }
  }();
  const PositroidBases bases = bases_from_necklace(necklace);
  Json report{{"command", "tree"},
              {"n", tau->n()},
              {"k", tau->k()},
              {"rank", tau->rank()},
              {"cells", cells},
              {"chains", chains},
              {"arcs", arc_list},
              {"inequalities", inequality_list(h_rep_from_subdivision(*tau))},
              {"facet_inequalities", inequality_list(facet_h_rep_from_subdivision(*tau))},
              {"necklace", necklace_json(necklace)},
              {"extensions", ext},
              {"hstar", polynomial_json(tree_h)}};
  bool ok = bases == bases_from_subdivision(*tau);
  if (is_connected(bases)) {
    std::vector<Permutation> a, b;
    for (const auto& l : extensions) a.push_back(l.w);
    for (const auto& l : enumerate_labels(necklace)) b.push_back(l.w);
    const ExactPolynomial necklace_h = hstar_shelling(necklace);
    report["labels_match"] = a == b;
    report["hstar_necklace"] = polynomial_json(necklace_h);
    ok = ok && a == b && necklace_h == tree_h;
  } else {
    ok = false;
  }
  report["verdict"] = ok ? "PASS" : "FAIL";
  return report;
}

Json run_atlas(const JobSpec& job) {
  const int cap = size_cap();
  if (job.n < 1) invalid("atlas needs n >= 1");
  if (job.n > cap) invalid("n = " + std::to_string(job.n) + " exceeds the size cap " + std::to_string(cap) +
                           " (set POSITROID_MAX_N to raise it)");
  if (job.rank > job.n) invalid("rank exceeds n");
  std::vector<DecoratedPermutation> selected;
  for (auto& d : all_decorated_permutations(job.n)) {
    const GrassmannNecklace j = necklace_from_decorated(d);
    if (job.rank >= 0 && j.rank() != job.rank) continue;
    if (job.connected_only && !is_connected(bases_from_necklace(j))) continue;
    selected.push_back(std::move(d));
  }
  JobSpec per = job;
  per.method = Method::all;
  per.half_open = false;
  per.w0.reset();
  auto reports = parallel_map(selected.size(), job.jobs, [&](std::size_t i) {
    Json r = hstar_report(necklace_from_decorated(selected[i]), per);
    r["decorated"] = decorated_json(selected[i]);
    return r;
  });
  Json atlas{{"command", "atlas"},
             {"n", job.n},
             {"rank", job.rank >= 0 ? Json(job.rank) : Json(nullptr)},
             {"connected_only", job.connected_only},
             {"count", reports.size()},
             {"reports", Json::array()}};
  bool pass = true;
  for (auto& r : reports) {
    pass = pass && r["verdict"] == "PASS";
    atlas["reports"].push_back(std::move(r));
  }
  atlas["verdict"] = pass ? "PASS" : "FAIL";
  return atlas;
}

namespace {

void render_value(std::ostringstream& out, const Json& value, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (value.is_object()) {
    for (const auto& [k, v] : value.items()) {
      if (v.is_object() || (v.is_array() && !v.empty() && v.front().is_object())) {
        out << pad << k << ":\n";
        render_value(out, v, indent + 2);
      } else {
        out << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (value.is_array()) {
    for (const auto& v : value) {
      if (v.is_object()) {
        out << pad << "-\n";
        render_value(out, v, indent + 2);
      } else {
        out << pad << "- " << v.dump() << "\n";
      }
    }
  } else {
    out << pad << value.dump() << "\n";
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream out;
  if (report.value("command", "") == "verify") {
    out << "verify scope " << report["scope"].get<std::string>() << "\n";
    for (const auto& row : report["table"]) {
      const int passed = row["passed"].get<int>(), total = row["total"].get<int>();
      char line[160];
      std::snprintf(line, sizeof line, "  %-48s %6d / %-6d %s\n", row["check"].get<std::string>().c_str(), passed,
                    total, passed == total ? "ok" : "FAIL");
      out << line;
    }
    out << "verdict: " << report["verdict"].get<std::string>() << "\n";
    if (!report["counterexample"].is_null()) out << "first counterexample: " << report["counterexample"].dump() << "\n";
    return out.str();
  }
  render_value(out, report, 0);
  return out.str();
}

std::string render_csv(const Json& atlas) {
  std::ostringstream out;
  out << "decorated,necklace,n,rank,connected,labels,hstar,verdict\n";
  for (const auto& r : atlas["reports"]) {
    std::string h;
    const Json& methods = r["hstar"];
    if (!methods.empty())
      for (const auto& c : methods.begin().value()) h += (h.empty() ? "" : " ") + c.dump();
    out << csv_field(r["decorated"]["text"].get<std::string>()) << ','
        << csv_field(r["input"]["text"].get<std::string>()) << ',' << r["n"].dump() << ',' << r["rank"].dump() << ','
        << r["connected"].dump() << ',' << (r.contains("labels") ? r["labels"].dump() : "") << ',' << h << ','
        << r["verdict"].get<std::string>() << "\n";
  }
  return out.str();
}

int execute(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    Json report;
    int code = kSuccess;
    if (job.command == "convert") report = run_convert(job);
    else if (job.command == "hstar") report = run_hstar(job);
    else if (job.command == "ehrhart") report = run_ehrhart(job);
    else if (job.command == "triangulate") report = run_triangulate(job);
    else if (job.command == "tree") report = run_tree(job);
    else if (job.command == "atlas") report = run_atlas(job);
    else if (job.command == "verify") {
      const VerifyOutcome v = run_verify(job);
      report = Json{{"command", "verify"},
                    {"scope", job.scope},
                    {"table", v.table},
                    {"counterexample", v.counterexample},
                    {"verdict", v.passed() ? "PASS" : "FAIL"}};
    } else {
      invalid("unknown command '" + job.command + "'");
    }
    if (report.contains("verdict") && report["verdict"] == "FAIL") code = kVerifyFailure;
    if (job.format == "text") out << render_text(report);
    else if (job.format == "csv") {
      if (job.command != "atlas") invalid("csv output is only available for atlas");
      out << render_csv(report);
    } else {
      out << report.dump(2) << "\n";
    }
    return code;
  } catch (const CommandError& e) {
    err << "error: " << e.what() << "\n";
    return e.code();
  } catch (const DisconnectedInput& e) {
    err << "error: " << e.what() << "\n";
    return kDisconnected;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kVerifyFailure;
  }
}

}  // namespace positroid::workbench
