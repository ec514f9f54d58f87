#include "minrank/generator.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "minrank/errors.hpp"

namespace minrank {

namespace {

// First `count` entries of a partial Fisher-Yates shuffle of `pool`, sorted.
std::vector<std::size_t> sample_sorted(std::mt19937_64& rng, std::vector<std::size_t> pool,
                                       std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(uniform_below(rng, pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<std::size_t> random_composition(std::mt19937_64& rng, std::size_t n, std::size_t parts) {
  std::vector<std::size_t> pool(n - 1);
  std::iota(pool.begin(), pool.end(), std::size_t{1});
  auto cuts = sample_sorted(rng, std::move(pool), parts - 1);
  cuts.push_back(n);
  std::vector<std::size_t> sizes;
  std::size_t prev = 0;
  for (std::size_t c : cuts) {
    sizes.push_back(c - prev);
    prev = c;
  }
  return sizes;
}

std::vector<std::size_t> random_weak_composition(std::mt19937_64& rng, std::size_t n,
                                                 std::size_t parts) {
  std::vector<std::size_t> pool(n + parts - 1);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  const auto bars = sample_sorted(rng, std::move(pool), parts - 1);
  std::vector<std::size_t> sizes;
  std::size_t prev = 0;
  for (std::size_t b : bars) {
    sizes.push_back(b - prev);
    prev = b + 1;
  }
  sizes.push_back(n + parts - 1 - prev);
  return sizes;
}

}  // namespace

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below needs a positive bound");
  // 2^64 mod bound, computed without overflow.
  const std::uint64_t excess = (std::uint64_t{0} - bound) % bound;
  const std::uint64_t limit = std::uint64_t{0} - excess;  // 2^64 - excess, 0 meaning 2^64
  for (;;) {
    const std::uint64_t x = rng();
    if (excess == 0 || x < limit) return x % bound;
  }
}

IndexCodingProblem generate_instance(const GeneratorProfile& profile) {
  const std::size_t n = profile.n;
  const std::size_t receivers = profile.receivers;
  if (receivers < 1 || n < receivers) {
    throw std::invalid_argument("generator needs n >= N >= 1");
  }

  std::mt19937_64 rng(profile.seed);

  std::vector<std::size_t> sizes;
  if (profile.demand_sizes) {
    sizes = *profile.demand_sizes;
    if (sizes.size() != receivers) {
      throw std::invalid_argument("demand profile must list one size per receiver");
    }
    if (std::any_of(sizes.begin(), sizes.end(), [](std::size_t s) { return s == 0; })) {
      throw std::invalid_argument("demand sizes must be positive");
    }
    if (std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}) != n) {
      throw std::invalid_argument("demand sizes must sum to n");
    }
  } else {
    sizes = random_composition(rng, n, receivers);
  }

  IndexCodingProblem p;
  p.n = n;
  p.receivers.resize(receivers);
  std::vector<std::size_t> demander(n);
  MessageId next = 0;
  for (std::size_t k = 0; k < receivers; ++k) {
    for (std::size_t i = 0; i < sizes[k]; ++i) {
      p.receivers[k].wants.push_back(next);
      demander[next++] = k;
    }
  }

  std::vector<MessageId> messages(n);
  for (std::size_t attempt = 0; attempt < profile.max_attempts; ++attempt) {
    std::iota(messages.begin(), messages.end(), MessageId{0});
    for (std::size_t i = n; i-- > 1;) {
      std::swap(messages[i], messages[static_cast<std::size_t>(uniform_below(rng, i + 1))]);
    }
    const auto blocks = random_weak_composition(rng, n, receivers);

    bool ok = true;
    std::size_t pos = 0;
    for (std::size_t k = 0; k < receivers && ok; ++k) {
      for (std::size_t i = 0; i < blocks[k]; ++i) {
        if (demander[messages[pos + i]] == k) {
          ok = false;
          break;
        }
      }
      pos += blocks[k];
    }
    if (!ok) continue;

    pos = 0;
    for (std::size_t k = 0; k < receivers; ++k) {
      auto& has = p.receivers[k].has;
      has.assign(messages.begin() + static_cast<std::ptrdiff_t>(pos),
                 messages.begin() + static_cast<std::ptrdiff_t>(pos + blocks[k]));
      std::sort(has.begin(), has.end());
      pos += blocks[k];
    }
    return p;
  }
  throw InfeasibleProfile("no prior assignment keeps every receiver's demands and side information "
                          "disjoint after " +
                          std::to_string(profile.max_attempts) + " attempts");
}

}  // namespace minrank
