#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "minrank/commands.hpp"

using namespace minrank;
using namespace minrank::cli;

namespace {

const std::filesystem::path kData = MINRANK_DATA_DIR;

struct Captured {
  std::ostringstream out;
  std::ostringstream err;
  Streams io() { return {out, err}; }
};

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("minrank_test_" + name);
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("validate command") {
  {
    Captured c;
    CHECK(run_validate({kData / "five_messages.json"}, c.io()) == kExitOk);
    CHECK(c.out.str() == "valid: n=5 N=3\n");
  }
  {
    Captured c;
    const auto path = write_temp("overlap.json",
                                 R"({"n": 5, "receivers": [{"wants": [1, 2], "has": [4]},
                                     {"wants": [3, 4], "has": [5, 1]},
                                     {"wants": [5], "has": [2, 3, 4]}]})");
    CHECK(run_validate({path}, c.io()) == kExitDomainFailure);
    CHECK(c.out.str().find("UnipriorViolation") != std::string::npos);
  }
  {
    Captured c;
    const auto path = write_temp("broken.json", "{\"n\": 5, \"receivers\": [");
    CHECK(run_validate({path}, c.io()) == kExitUsage);
    CHECK(c.err.str().find("ParseError") != std::string::npos);
  }
  {
    Captured c;
    CHECK(run_validate({kData / "missing.json"}, c.io()) == kExitUsage);
  }
}

TEST_CASE("minrank command") {
  SUBCASE("fast") {
    Captured c;
    MinrankArgs args;
    args.path = kData / "ten_messages_five_receivers.json";
    CHECK(run_minrank(args, c.io()) == kExitOk);
    CHECK(c.out.str().find("fast: minrank=7\n") != std::string::npos);
    CHECK(c.out.str().find("beta: 3888\n") != std::string::npos);
    CHECK(c.out.str().find("fitting-matrices: 2^20 = 1048576\n") != std::string::npos);
    CHECK(c.out.str().find("seconds") == std::string::npos);
  }
  SUBCASE("both agree") {
    Captured c;
    MinrankArgs args;
    args.path = kData / "five_messages.json";
    args.method = Method::kBoth;
    args.json = true;
    CHECK(run_minrank(args, c.io()) == kExitOk);
    const std::string out = c.out.str();
    CHECK(out.find("\"agreement\": true") != std::string::npos);
    CHECK(out.find("\"symmetric_rate\": \"1/3\"") != std::string::npos);
  }
  SUBCASE("brute refuses the twelve-message instance") {
    Captured c;
    MinrankArgs args;
    args.path = kData / "twelve_messages.json";
    args.method = Method::kBrute;
    CHECK(run_minrank(args, c.io()) == kExitBudget);
    CHECK(c.err.str().find("brute-budget") != std::string::npos);
  }
  SUBCASE("beta budget") {
    Captured c;
    MinrankArgs args;
    args.path = kData / "ten_messages_three_receivers.json";
    args.beta_budget = 100;
    CHECK(run_minrank(args, c.io()) == kExitBudget);
    CHECK(c.err.str().find("beta-budget") != std::string::npos);
  }
  SUBCASE("invalid instance") {
    Captured c;
    MinrankArgs args;
    args.path = write_temp("self.json", R"({"n": 1, "receivers": [{"wants": [1], "has": [1]}]})");
    CHECK(run_minrank(args, c.io()) == kExitDomainFailure);
    CHECK(c.err.str().find("SelfKnowledgeViolation") != std::string::npos);
  }
  SUBCASE("timings only on request") {
    Captured c;
    MinrankArgs args;
    args.path = kData / "five_messages.json";
    args.timings = true;
    CHECK(run_minrank(args, c.io()) == kExitOk);
    CHECK(c.out.str().find("seconds: ") != std::string::npos);
  }
}

TEST_CASE("reports do not depend on the worker count") {
  MinrankArgs args;
  args.path = kData / "ten_messages_three_receivers.json";
  Captured one;
  Captured three;
  CHECK(run_minrank(args, one.io()) == kExitOk);
  args.workers = 3;
  CHECK(run_minrank(args, three.io()) == kExitOk);
  CHECK(one.out.str() == three.out.str());
}

TEST_CASE("critical command") {
  {
    Captured c;
    CHECK(run_critical({kData / "five_messages.json"}, c.io()) == kExitOk);
    const std::string expected =
        "minrank: 3\n"
        "critical side-information:\n"
        "  D_1: x_4 (row x_1)\n"
        "  D_2: x_1 (row x_4) x_5 (row x_3)\n"
        "  D_3: x_3 (row x_5)\n"
        "critical graph:\n"
        "  1 -> 4\n"
        "  3 -> 5\n"
        "  4 -> 1\n"
        "  5 -> 3\n";
    CHECK(c.out.str() == expected);
  }
  {
    Captured c;
    const auto path = write_temp("edgeless.json", R"({"n": 2, "receivers": [{"wants": [1, 2], "has": []},
                                                                   {"wants": [], "has": [1, 2]}]})");
    CHECK(run_critical({path}, c.io()) == kExitOk);
    CHECK(c.out.str().find("no critical side-information") != std::string::npos);
  }
  {
    Captured c;
    const auto path = write_temp("ring.json", R"({"n": 3, "receivers": [{"wants": [1], "has": [3]},
                                                               {"wants": [2], "has": [1]},
                                                               {"wants": [3], "has": [2]}]})");
    CriticalArgs args;
    args.path = path;
    args.json = true;
    args.union_all_minimizers = true;
    CHECK(run_critical(args, c.io()) == kExitOk);
    CHECK(c.out.str().find("\"union_critical_bits\"") != std::string::npos);
    CHECK(c.out.str().find("\"receiver\": 3") != std::string::npos);
  }
}

TEST_CASE("generate command") {
  {
    Captured c;
    GenerateArgs args;
    args.profile = {5, 3, std::vector<std::size_t>{2, 2, 1}, 7};
    CHECK(run_generate(args, c.io()) == kExitOk);
    const auto path = write_temp("generated.json", c.out.str());
    Captured v;
    CHECK(run_validate({path}, v.io()) == kExitOk);
  }
  {
    Captured c;
    GenerateArgs args;
    args.profile = {3, 1, std::nullopt, 7};
    CHECK(run_generate(args, c.io()) == kExitDomainFailure);
    CHECK(c.err.str().find("InfeasibleProfile") != std::string::npos);
  }
  {
    Captured c;
    GenerateArgs args;
    args.profile = {3, 2, std::vector<std::size_t>{1, 1}, 7};
    CHECK(run_generate(args, c.io()) == kExitUsage);
  }
}
