// msdtool: command-line front end for the MSD cycle-structure library.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "msd/commands.hpp"

int main(int argc, char** argv) {
  using namespace msd::cli;

  CLI::App app{"Cycle structure of minimal strong digraphs"};
  app.require_subcommand(1);

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check that a digraph file is an MSD and report its invariants");
  verify_cmd->add_option("--input", verify.input, "Digraph file")->required();
  verify_cmd->add_flag("--json", verify.json, "Print the JSON report");

  AnalyzeOptions analyze;
  std::string analyze_cycle;
  auto* analyze_cmd = app.add_subcommand("analyze", "Decompose an MSD along a cycle and run the structure checks");
  analyze_cmd->add_option("--input", analyze.input, "Digraph file")->required();
  auto* cycle_opt = analyze_cmd->add_option("--cycle", analyze_cycle, "Comma-separated cycle vertices");
  analyze_cmd->add_flag("--strict-remark3", analyze.strict_remark3,
                        "Also check paths between pseudominimal and pseudomaximal vertices");
  analyze_cmd->add_flag("--json", analyze.json, "Print the JSON report");

  const std::map<std::string, msd::EnumerationMode> modes{
      {"raw", msd::EnumerationMode::raw},
      {"valid", msd::EnumerationMode::valid},
      {"canonical", msd::EnumerationMode::canonical}};

  EnumerateOptions enumerate;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Stream or count configurations of a q-cycle");
  enumerate_cmd->add_option("--q", enumerate.q, "Cycle length")->required();
  enumerate_cmd->add_option("--mode", enumerate.mode, "raw | valid | canonical")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  enumerate_cmd->add_flag("--count-only", enumerate.count_only, "Print only the count");
  enumerate_cmd->add_option("--jobs", enumerate.jobs, "Worker threads")->check(CLI::PositiveNumber);
  enumerate_cmd->add_flag("--allow-long", enumerate.allow_long, "Permit q >= 15");
  enumerate_cmd->add_flag("--pruned", enumerate.pruned, "Use the pruned depth-first search");

  Table1Options table1;
  auto* table1_cmd = app.add_subcommand("table1", "Count canonical configurations for q = 2..Q against the published values");
  table1_cmd->add_option("--q", table1.max_q, "Largest cycle length")->required();
  table1_cmd->add_option("--jobs", table1.jobs, "Worker threads")->check(CLI::PositiveNumber);
  table1_cmd->add_flag("--allow-long", table1.allow_long, "Permit q >= 15");
  table1_cmd->add_flag("--pruned", table1.pruned, "Use the pruned depth-first search");
  table1_cmd->add_flag("--json", table1.json, "Print the JSON report");

  RandomOptions random;
  std::string random_output;
  auto* random_cmd = app.add_subcommand("random", "Generate a random MSD");
  random_cmd->add_option("--n", random.n, "Vertex count")->required();
  random_cmd->add_option("--extra-arcs", random.extra_arcs, "Random arcs added before minimization");
  random_cmd->add_option("--seed", random.seed, "RNG seed");
  random_cmd->add_flag("--check", random.check, "Verify the result and check every cycle (n <= 12)");
  auto* random_out_opt = random_cmd->add_option("--output", random_output, "Write the digraph here");
  random_cmd->add_flag("--json", random.json, "Print the JSON report");

  RealizeOptions realize;
  std::string realize_output;
  auto* realize_cmd = app.add_subcommand("realize", "Build an MSD realizing a configuration");
  realize_cmd->add_option("--q", realize.q, "Cycle length")->required();
  realize_cmd->add_option("--config", realize.config, "Comma-separated configuration")->required();
  auto* realize_out_opt = realize_cmd->add_option("--output", realize_output, "Write the digraph here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kInputError;
  }

  if (*verify_cmd) return cmd_verify(verify, std::cout, std::cerr);
  if (*analyze_cmd) {
    if (*cycle_opt) analyze.cycle = analyze_cycle;
    return cmd_analyze(analyze, std::cout, std::cerr);
  }
  if (*enumerate_cmd) return cmd_enumerate(enumerate, std::cout, std::cerr);
  if (*table1_cmd) return cmd_table1(table1, std::cout, std::cerr);
  if (*random_cmd) {
    if (*random_out_opt) random.output = random_output;
    return cmd_random(random, std::cout, std::cerr);
  }
  if (*realize_cmd) {
    if (*realize_out_opt) realize.output = realize_output;
    return cmd_realize(realize, std::cout, std::cerr);
  }
  return kInputError;
}
