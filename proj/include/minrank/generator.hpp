#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "minrank/problem.hpp"

namespace minrank {

/// Seeded random instances. The procedure is fixed so a seed reproduces the
/// same instance on any platform:
///
///  * PRNG: std::mt19937_64 seeded with the 64-bit seed (its output sequence
///    is fixed by the C++ standard).
///  * uniform_below(b): draw x; reject while x >= 2^64 - (2^64 mod b);
///    return x mod b.
///  * Demand sizes, when not given: N - 1 distinct cut points from
///    {1, ..., n-1} picked by a partial Fisher-Yates shuffle, then sorted.
///    W_1 takes the first |W_1| ids, W_2 the next |W_2|, and so on.
///  * Each prior attempt: Fisher-Yates shuffle of the n messages (i from
///    n-1 down to 1 swaps with uniform_below(i+1)); block sizes are a weak
///    composition of n into N parts (N - 1 bar positions among n + N - 1
///    slots, again by partial Fisher-Yates, sorted); A_k takes the k-th run
///    of the shuffled messages. The attempt is kept iff W_k and A_k are
///    disjoint for every k.
struct GeneratorProfile {
  std::size_t n = 0;
  std::size_t receivers = 0;
  std::optional<std::vector<std::size_t>> demand_sizes;
  std::uint64_t seed = 0;
  std::size_t max_attempts = 10'000;
};

/// Throws std::invalid_argument for a malformed profile and
/// InfeasibleProfile when no attempt satisfies the disjointness rule.
IndexCodingProblem generate_instance(const GeneratorProfile& profile);

/// Rejection-sampled draw in [0, bound).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace minrank
