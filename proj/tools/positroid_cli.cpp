#include "positroid/workbench.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace wb = positroid::workbench;

namespace {

void add_io(CLI::App* cmd, wb::JobSpec& job, std::string& out_path, const std::string& input_help) {
  cmd->add_option("input,--input", job.input, input_help);
  cmd->add_option("--format", job.format, "Output format")->check(CLI::IsMember({"json", "text", "csv"}));
  cmd->add_option("--out", out_path, "Write the report to this file instead of stdout");
  cmd->add_flag("--timing", job.timing, "Include wall-clock timings (output is then not byte-stable)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ehrhart h*-polynomials of positroid polytopes"};
  app.require_subcommand(1);
  wb::JobSpec job;
  std::string out_path;
  std::string method = "shelling";
  std::string w0;

  const std::string positroid_help = "Necklace, decorated permutation or basis list: inline or a file path";
  auto* convert = app.add_subcommand("convert", "Show necklace, decorated permutation and bases of a positroid");
  add_io(convert, job, out_path, positroid_help);

  auto* hstar = app.add_subcommand("hstar", "Compute the h*-polynomial");
  add_io(hstar, job, out_path, positroid_help);
  hstar->add_option("--method", method, "shelling, descents, inclusion-exclusion, oracle or all")
      ->check(CLI::IsMember({"shelling", "descents", "inclusion-exclusion", "oracle", "all"}));
  hstar->add_option("--w0", w0, "Base label for the shelling, one-line notation");
  hstar->add_flag("--half-open", job.half_open, "Use the polytope with its upper facets removed");
  hstar->add_option("--tmax", job.tmax, "Count dilates up to this factor in the oracle");

  auto* ehrhart = app.add_subcommand("ehrhart", "Ehrhart polynomial by lattice-point counting");
  add_io(ehrhart, job, out_path, positroid_help);
  ehrhart->add_option("--tmax", job.tmax, "Count dilates up to this factor");

  auto* triangulate = app.add_subcommand("triangulate", "Circuit triangulation, graph, shelling and affine labels");
  add_io(triangulate, job, out_path, positroid_help);
  triangulate->add_option("--w0", w0, "Base label, one-line notation");

  auto* tree = app.add_subcommand("tree", "Tree positroid of a bicolored subdivision");
  add_io(tree, job, out_path, "Subdivision JSON {\"n\": ..., \"cells\": [...]}: inline or a file path");
  tree->add_option("--w0", w0, "Base extension, one-line notation");

  auto* atlas = app.add_subcommand("atlas", "Every positroid of a given size, all methods");
  atlas->add_option("--n", job.n, "Ground set size")->required();
  atlas->add_option("--rank", job.rank, "Restrict to this rank (default: all ranks)");
  bool include_disconnected = false;
  atlas->add_flag("--include-disconnected", include_disconnected, "Also list disconnected positroids");
  atlas->add_option("--jobs", job.jobs, "Worker threads")->check(CLI::PositiveNumber);
  atlas->add_option("--format", job.format, "Output format")->check(CLI::IsMember({"json", "text", "csv"}));
  atlas->add_option("--out", out_path, "Write the report to this file instead of stdout");
  atlas->add_flag("--timing", job.timing, "Include wall-clock timings (output is then not byte-stable)");

  auto* verify = app.add_subcommand("verify", "Cross-method verification harness");
  verify->add_option("--scope", job.scope, "paper-examples, exhaustive, random or fixture");
  verify->add_option("input,--input", job.input, "Fixture file for --scope fixture");
  verify->add_option("--max-n", job.max_n, "Largest ground set for exhaustive and random scopes");
  verify->add_option("--samples", job.samples, "Random subdivisions or positroids to draw");
  verify->add_option("--seed", job.seed, "Random seed");
  verify->add_option("--jobs", job.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--format", job.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", out_path, "Write the report to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : wb::kInvalidInput;
  }

  job.command = app.get_subcommands().front()->get_name();
  job.method = wb::parse_method(method);
  if (!w0.empty()) job.w0 = w0;
  job.connected_only = !include_disconnected;
  if (job.command != "verify" && job.command != "atlas" && job.input.empty()) {
    std::cerr << "error: no input given\n";
    return wb::kInvalidInput;
  }

  if (out_path.empty()) return wb::execute(job, std::cout, std::cerr);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return wb::kInvalidInput;
  }
  return wb::execute(job, out, std::cerr);
}
