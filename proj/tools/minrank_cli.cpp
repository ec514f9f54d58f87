#include <CLI11.hpp>
#include <iostream>
#include <map>

#include "minrank/commands.hpp"

using namespace minrank;

int main(int argc, char** argv) {
  CLI::App app{"Exact minrank solver for unicast-uniprior index coding problems"};
  app.require_subcommand(1);

  cli::ValidateArgs validate_args;
  auto* validate_cmd = app.add_subcommand("validate", "Check a problem file against the unicast-uniprior rules");
  validate_cmd->add_option("problem", validate_args.path, "Problem file (JSON)")->required();
  validate_cmd->add_flag("--json", validate_args.json, "Machine-readable output");

  cli::MinrankArgs minrank_args;
  auto* minrank_cmd = app.add_subcommand("minrank", "Compute the minrank");
  minrank_cmd->add_option("problem", minrank_args.path, "Problem file (JSON)")->required();
  const std::map<std::string, cli::Method> methods{
      {"fast", cli::Method::kFast}, {"brute", cli::Method::kBrute}, {"both", cli::Method::kBoth}};
  minrank_cmd->add_option("--method", minrank_args.method, "fast, brute or both")
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
  minrank_cmd->add_flag("--json", minrank_args.json, "Machine-readable output");
  minrank_cmd->add_option("--beta-budget", minrank_args.beta_budget, "Maximum number of demand tables");
  minrank_cmd->add_option("--brute-budget", minrank_args.brute_budget, "Maximum number of fitting matrices");
  minrank_cmd->add_option("--workers", minrank_args.workers, "Worker threads")->check(CLI::PositiveNumber);
  minrank_cmd->add_flag("--canonical-columns", minrank_args.canonical_columns,
                        "Score only tables with canonical column order");
  minrank_cmd->add_flag("--timings", minrank_args.timings, "Include wall-clock seconds in the report");

  cli::CriticalArgs critical_args;
  auto* critical_cmd = app.add_subcommand("critical", "List critical side-information bits");
  critical_cmd->add_option("problem", critical_args.path, "Problem file (JSON)")->required();
  critical_cmd->add_flag("--json", critical_args.json, "Machine-readable output");
  critical_cmd->add_option("--beta-budget", critical_args.beta_budget, "Maximum number of demand tables");
  critical_cmd->add_option("--workers", critical_args.workers, "Worker threads")->check(CLI::PositiveNumber);
  critical_cmd->add_flag("--all-minimizers", critical_args.union_all_minimizers,
                         "Also report the union over every minimizing table");

  cli::GenerateArgs generate_args;
  std::vector<std::size_t> sizes;
  std::string output;
  auto* generate_cmd = app.add_subcommand("generate", "Emit a seeded random valid instance");
  generate_cmd->add_option("-n,--messages", generate_args.profile.n, "Number of messages")->required();
  generate_cmd->add_option("-N,--receivers", generate_args.profile.receivers, "Number of receivers")->required();
  generate_cmd->add_option("--seed", generate_args.profile.seed, "64-bit seed");
  generate_cmd->add_option("--sizes", sizes, "Demand set sizes, one per receiver")->delimiter(',');
  generate_cmd->add_option("--attempts", generate_args.profile.max_attempts, "Rejection sampling attempts");
  generate_cmd->add_option("-o,--output", output, "Write to file instead of stdout");

  cli::SelftestArgs selftest_args;
  auto* selftest_cmd = app.add_subcommand("selftest", "Run the built-in fixtures and a small oracle sweep");
  selftest_cmd->add_flag("--json", selftest_args.json, "Machine-readable output");
  selftest_cmd->add_option("--instances", selftest_args.sweep_instances, "Random instances in the sweep");
  selftest_cmd->add_option("--workers", selftest_args.workers, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitUsage;
  }

  const cli::Streams io{std::cout, std::cerr};
  if (*validate_cmd) return cli::run_validate(validate_args, io);
  if (*minrank_cmd) return cli::run_minrank(minrank_args, io);
  if (*critical_cmd) return cli::run_critical(critical_args, io);
  if (*generate_cmd) {
    if (!sizes.empty()) generate_args.profile.demand_sizes = sizes;
    if (!output.empty()) generate_args.output = output;
    return cli::run_generate(generate_args, io);
  }
  return cli::run_selftest(selftest_args, io);
}
