#include "minrank/fitting.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "minrank/errors.hpp"

namespace minrank {

namespace {

void require_sweep_budget(const FittingPattern& p, std::uint64_t budget) {
  const std::size_t k = p.free_count();
  if (k >= 63 || (std::uint64_t{1} << k) > budget) {
    throw SizeGuardExceeded("brute-budget", "exhaustive sweep needs 2^" + std::to_string(k) +
                                                " fitting matrices, above the budget of " +
                                                std::to_string(budget) + "; raise --brute-budget");
  }
}

// Sweep state for one block of bit strings sharing a fixed prefix.
struct BlockBest {
  std::size_t rank = std::numeric_limits<std::size_t>::max();
  std::uint64_t key = std::numeric_limits<std::uint64_t>::max();
};

// The key of a bit string reads bit 0 as the most significant, so numeric
// order on keys is lexicographic order on strings.
class Sweeper {
 public:
  Sweeper(const FittingPattern& p, std::size_t prefix_bits)
      : p_(p), k_(p.free_count()), prefix_bits_(prefix_bits), base_(Gf2Matrix::identity(p.n)) {}

  BlockBest run_block(std::uint64_t prefix) const {
    Gf2Matrix m = base_;
    const std::size_t low_bits = k_ - prefix_bits_;
    // Position with key bit t is free_positions[k - 1 - t].
    for (std::size_t t = 0; t < prefix_bits_; ++t) {
      if (prefix >> t & 1) set_free(m, k_ - 1 - (low_bits + t));
    }
    std::vector<Word> scratch(m.words().size());
    BlockBest best;
    const std::uint64_t count = std::uint64_t{1} << low_bits;
    std::uint64_t gray = 0;
    for (std::uint64_t i = 0;; ++i) {
      std::copy(m.words().begin(), m.words().end(), scratch.begin());
      const std::size_t r = m.words_per_row() == 1
                                ? detail::rank_single_word(scratch)
                                : detail::rank_in_place(scratch, m.rows(), m.words_per_row());
      const std::uint64_t key = (prefix << low_bits) | gray;
      if (r < best.rank || (r == best.rank && key < best.key)) {
        best.rank = r;
        best.key = key;
      }
      if (i + 1 == count) break;
      const std::size_t t = static_cast<std::size_t>(std::countr_zero(i + 1));
      gray ^= std::uint64_t{1} << t;
      flip_free(m, k_ - 1 - t);
    }
    return best;
  }

  FreeBits bits_of(std::uint64_t key) const {
    FreeBits bits(k_);
    for (std::size_t j = 0; j < k_; ++j) bits[j] = (key >> (k_ - 1 - j)) & 1;
    return bits;
  }

 private:
  void set_free(Gf2Matrix& m, std::size_t index) const {
    m.set(p_.free_positions[index].row, p_.free_positions[index].col, true);
  }
  void flip_free(Gf2Matrix& m, std::size_t index) const {
    m.flip(p_.free_positions[index].row, p_.free_positions[index].col);
  }

  const FittingPattern& p_;
  std::size_t k_;
  std::size_t prefix_bits_;
  Gf2Matrix base_;
};

}  // namespace

FittingPattern general_form(const SideInformationGraph& g) {
  FittingPattern p;
  p.n = g.vertex_count();
  for (const Edge& e : g.edges()) p.free_positions.push_back({e.to, e.from});
  std::sort(p.free_positions.begin(), p.free_positions.end());
  return p;
}

Gf2Matrix instantiate(const FittingPattern& p, const FreeBits& bits) {
  if (bits.size() != p.free_count()) {
    throw std::invalid_argument("expected " + std::to_string(p.free_count()) + " free bits, got " +
                                std::to_string(bits.size()));
  }
  Gf2Matrix m = Gf2Matrix::identity(p.n);
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k]) m.set(p.free_positions[k].row, p.free_positions[k].col, true);
  }
  return m;
}

FreeBits bits_with_ones(const FittingPattern& p, std::span<const FreePosition> ones) {
  FreeBits bits(p.free_count(), false);
  for (const FreePosition& pos : ones) {
    const auto it = std::lower_bound(p.free_positions.begin(), p.free_positions.end(), pos);
    if (it == p.free_positions.end() || *it != pos) {
      throw std::invalid_argument("(" + std::to_string(pos.row + 1) + "," +
                                  std::to_string(pos.col + 1) + ") is not a free position");
    }
    bits[static_cast<std::size_t>(it - p.free_positions.begin())] = true;
  }
  return bits;
}

FittingPattern without_free_position(const FittingPattern& p, FreePosition pos) {
  FittingPattern out = p;
  std::erase(out.free_positions, pos);
  return out;
}

BruteForceResult brute_force_minrank(const FittingPattern& p, const BruteForceOptions& options) {
  require_sweep_budget(p, options.budget);
  const std::size_t k = p.free_count();
  const std::size_t workers = std::max<std::size_t>(1, options.workers);

  // Enough prefix blocks to keep every worker busy, never more than k bits.
  std::size_t prefix_bits = 0;
  while (prefix_bits < k && (std::size_t{1} << prefix_bits) < 4 * workers && workers > 1) ++prefix_bits;
  const std::uint64_t blocks = std::uint64_t{1} << prefix_bits;

  const Sweeper sweeper(p, prefix_bits);
  std::vector<BlockBest> per_worker(workers);
  auto work = [&](std::size_t w) {
    BlockBest local;
    for (std::uint64_t b = w; b < blocks; b += workers) {
      const BlockBest r = sweeper.run_block(b);
      if (r.rank < local.rank || (r.rank == local.rank && r.key < local.key)) local = r;
    }
    per_worker[w] = local;
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(work, w);
  }

  BlockBest best;
  for (const BlockBest& r : per_worker) {
    if (r.rank < best.rank || (r.rank == best.rank && r.key < best.key)) best = r;
  }
  BruteForceResult out;
  out.minrank = best.rank;
  out.witness_bits = sweeper.bits_of(best.key);
  out.witness = instantiate(p, out.witness_bits);
  return out;
}

bool is_critical_fitting_matrix(const FittingPattern& p, const FreeBits& bits, std::size_t minrank) {
  Gf2Matrix m = instantiate(p, bits);
  if (rank(m) != minrank) return false;
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (!bits[k]) continue;
    const FreePosition& pos = p.free_positions[k];
    m.set(pos.row, pos.col, false);
    const std::size_t r = rank(m);
    m.set(pos.row, pos.col, true);
    if (r <= minrank) return false;
  }
  return true;
}

std::size_t max_identical_row_multiplicity(const FittingPattern& p, std::uint64_t budget) {
  require_sweep_budget(p, budget);
  if (p.n == 0) return 0;
  const std::size_t k = p.free_count();
  Gf2Matrix m = Gf2Matrix::identity(p.n);
  std::size_t best = 1;
  const std::uint64_t count = std::uint64_t{1} << k;
  for (std::uint64_t i = 0;; ++i) {
    for (std::size_t a = 0; a < p.n; ++a) {
      std::size_t same = 1;
      for (std::size_t b = a + 1; b < p.n; ++b) {
        if (m.rows_equal(a, b)) ++same;
      }
      best = std::max(best, same);
    }
    if (i + 1 == count) break;
    const std::size_t t = static_cast<std::size_t>(std::countr_zero(i + 1));
    m.flip(p.free_positions[t].row, p.free_positions[t].col);
  }
  return best;
}

std::string format_witness(const FittingPattern& p, const FreeBits& bits) {
  std::ostringstream os;
  os << instantiate(p, bits).to_string();
  for (std::size_t k = 0; k < p.free_count(); ++k) {
    os << '(' << p.free_positions[k].row + 1 << ',' << p.free_positions[k].col + 1
       << ")=" << (bits[k] ? 1 : 0) << '\n';
  }
  return os.str();
}

}  // namespace minrank
