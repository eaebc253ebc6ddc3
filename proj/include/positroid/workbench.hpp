#pragma once

// Command layer behind the positroid CLI: input parsing, JSON reports, the
// atlas over all positroids of a given size and the verification harness.

#include "positroid/positroid_model.hpp"
#include "positroid/tree_positroid.hpp"

#include <json.hpp>

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace positroid::workbench {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
  kSuccess = 0,
  kVerifyFailure = 1,
  kInvalidInput = 2,
  kDisconnected = 3,
};

/// Carries the process exit code along with the message.
class CommandError : public std::runtime_error {
 public:
  CommandError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

enum class Method { shelling, descents, inclusion_exclusion, oracle, all };
Method parse_method(const std::string& name);
std::string to_string(Method m);

struct JobSpec {
  std::string command;
  std::string input;
  Method method = Method::shelling;
  std::optional<std::string> w0;
  bool half_open = false;
  int tmax = -1;
  int jobs = 1;
  std::string format = "json";
  bool timing = false;
  // atlas
  int rank = -1;
  int n = -1;
  bool connected_only = true;
  // verify
  std::string scope = "paper-examples";
  int max_n = 6;
  int samples = 200;
  unsigned long long seed = 1;
};

using ParsedInput = std::variant<GrassmannNecklace, DecoratedPermutation, PositroidBases, BicoloredSubdivision>;

/// Accepts a file path or inline text: JSON objects with "necklace", "pi",
/// "bases" or "cells", a bare JSON list of subsets, compact necklaces such as
/// "123,235,345,145,125", or a one-line permutation without fixed points.
/// Throws CommandError(kInvalidInput) with an entry index or offset.
ParsedInput parse_input(const std::string& text_or_path);

/// The necklace of any parsed positroid input. Throws CommandError for
/// subdivisions and for basis sets that are not positroids.
GrassmannNecklace to_necklace(const ParsedInput& input);

Json necklace_json(const GrassmannNecklace& necklace);
Json decorated_json(const DecoratedPermutation& d);
Json polynomial_json(const ExactPolynomial& p);
/// Coefficients as exact rational strings, e.g. ["1", "13/6", ...].
Json rational_polynomial_json(const ExactPolynomial& p);

Json run_convert(const JobSpec& job);
Json run_hstar(const JobSpec& job);
Json run_ehrhart(const JobSpec& job);
Json run_triangulate(const JobSpec& job);
Json run_tree(const JobSpec& job);
/// Report for one necklace with every applicable closed method.
Json hstar_report(const GrassmannNecklace& necklace, const JobSpec& job);
Json run_atlas(const JobSpec& job);

/// Size cap for atlas and exhaustive runs: POSITROID_MAX_N or 7.
int size_cap();

struct VerifyOutcome {
  /// One row per check: name, passed, total.
  Json table = Json::array();
  /// First failure, or null.
  Json counterexample;
  bool passed() const { return counterexample.is_null(); }
};
VerifyOutcome run_verify(const JobSpec& job);

/// Text rendering of a report or verify table.
std::string render_text(const Json& report);
/// CSV rows for an atlas report.
std::string render_csv(const Json& atlas);

/// Dispatches on job.command, writes the result to `out` and returns the exit code.
int execute(const JobSpec& job, std::ostream& out, std::ostream& err);

}  // namespace positroid::workbench
