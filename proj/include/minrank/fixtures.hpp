#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minrank/problem.hpp"

namespace minrank::fixtures {

/// N = 3, n = 5: W = {1,2},{3,4},{5}; A = {4},{1,5},{2,3}. Minrank 3.
IndexCodingProblem five_messages();

/// N = 5, n = 10. Minrank 7.
IndexCodingProblem ten_messages_five_receivers();

/// N = 3, n = 10, demand sizes 3,4,3. Beta 13824. Published minrank 7, but a
/// fitting matrix of rank 6 exists (four disjoint cycles).
IndexCodingProblem ten_messages_three_receivers();

/// N = 3, n = 12, demand sizes 4,3,5. Beta 864000. Published minrank 8, but a
/// fitting matrix of rank 7 exists (five disjoint cycles).
IndexCodingProblem twelve_messages();

struct Fixture {
  std::string name;
  IndexCodingProblem problem;
  std::size_t minrank;  // published value
  std::uint64_t beta;
};

/// The four reference instances with their known answers.
std::vector<Fixture> reference_fixtures();

}  // namespace minrank::fixtures
