#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "minrank/algorithm.hpp"
#include "minrank/fitting.hpp"
#include "minrank/generator.hpp"
#include "minrank/problem.hpp"

namespace minrank::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitDomainFailure = 1,  // invalid instance, fast/brute mismatch, infeasible profile
  kExitUsage = 2,          // bad arguments or unparsable document
  kExitBudget = 3,         // a size guard refused the run
};

enum class Method { kFast, kBrute, kBoth };

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

/// Everything one `minrank` run measured. Timings are kept out of the
/// rendered report unless asked for, so reports stay byte-identical.
struct RunReport {
  std::size_t n = 0;
  std::vector<std::size_t> demand_sizes;
  BigCount beta = 0;
  std::size_t free_bits = 0;
  BigCount fitting_matrices = 0;  // 2^free_bits

  std::optional<MinrankResult> fast;
  std::optional<BruteForceResult> brute;
  FittingPattern pattern;
  std::optional<double> fast_seconds;
  std::optional<double> brute_seconds;

  std::optional<bool> agreement() const;
};

std::string render_text(const RunReport& report, bool with_timings);
std::string render_json(const RunReport& report, bool with_timings);

struct ValidateArgs {
  std::filesystem::path path;
  bool json = false;
};

struct MinrankArgs {
  std::filesystem::path path;
  Method method = Method::kFast;
  bool json = false;
  std::uint64_t beta_budget = kDefaultBetaBudget;
  std::uint64_t brute_budget = kDefaultBruteBudget;
  std::size_t workers = 1;
  bool canonical_columns = false;
  bool timings = false;
};

struct CriticalArgs {
  std::filesystem::path path;
  bool json = false;
  std::uint64_t beta_budget = kDefaultBetaBudget;
  std::size_t workers = 1;
  bool union_all_minimizers = false;
};

struct GenerateArgs {
  GeneratorProfile profile;
  std::optional<std::filesystem::path> output;
};

struct SelftestArgs {
  bool json = false;
  std::size_t sweep_instances = 40;
  std::size_t workers = 1;
};

int run_validate(const ValidateArgs& args, Streams io);
int run_minrank(const MinrankArgs& args, Streams io);
int run_critical(const CriticalArgs& args, Streams io);
int run_generate(const GenerateArgs& args, Streams io);
int run_selftest(const SelftestArgs& args, Streams io);

}  // namespace minrank::cli
