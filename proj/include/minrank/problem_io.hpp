#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "minrank/problem.hpp"

namespace minrank {

// Problem documents are JSON:
//
//   {"n": 5,
//    "receivers": [{"wants": [1, 2], "has": [4]},
//                  {"wants": [3, 4], "has": [5, 1]},
//                  {"wants": [5],    "has": [2, 3]}]}
//
// Ids are 1-based. Parsing checks structure only (types, ids within [1, n],
// no duplicate id inside one array); the unicast-uniprior rules are left to
// validate() so that the CLI can list every violation.

/// Throws ParseError with the offending field path.
IndexCodingProblem parse_problem(std::string_view text);

IndexCodingProblem read_problem_file(const std::filesystem::path& path);

/// Compact, deterministic serialization accepted by parse_problem.
std::string format_problem(const IndexCodingProblem& p);

}  // namespace minrank
