#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "minrank/gf2.hpp"
#include "minrank/graphs.hpp"

namespace minrank {

/// Entry (row, col) of a fitting matrix. Row i belongs to the receiver
/// demanding x_i; column j to message x_j.
struct FreePosition {
  std::size_t row = 0;
  std::size_t col = 0;

  friend auto operator<=>(const FreePosition&, const FreePosition&) = default;
};

/// The general form of the fitting matrices of a graph: ones on the
/// diagonal, a free bit at (i, j) for every edge j -> i, zeros elsewhere.
struct FittingPattern {
  std::size_t n = 0;
  std::vector<FreePosition> free_positions;  // row-major order

  std::size_t free_count() const noexcept { return free_positions.size(); }
};

/// Bit k assigns free_positions[k]. Comparison as a string, bit 0 first.
using FreeBits = std::vector<bool>;

inline constexpr std::uint64_t kDefaultBruteBudget = std::uint64_t{1} << 24;

FittingPattern general_form(const SideInformationGraph& g);

/// Throws std::invalid_argument when bits.size() != free_count().
Gf2Matrix instantiate(const FittingPattern& p, const FreeBits& bits);

/// Bits with exactly the listed positions set. Throws std::invalid_argument if
/// a position is not free in p.
FreeBits bits_with_ones(const FittingPattern& p, std::span<const FreePosition> ones);

/// The pattern with one free position forced to zero (one edge deleted).
FittingPattern without_free_position(const FittingPattern& p, FreePosition pos);

struct BruteForceOptions {
  std::uint64_t budget = kDefaultBruteBudget;  // max instantiations
  std::size_t workers = 1;
};

struct BruteForceResult {
  std::size_t minrank = 0;
  Gf2Matrix witness;
  FreeBits witness_bits;  // lexicographically smallest achieving minrank
};

/// Minimum rank over all 2^free_count() instantiations. The sweep walks a
/// Gray code within each prefix block, so consecutive matrices differ in one
/// entry; rank is recomputed from scratch each step. Blocks are spread over
/// `workers` threads and reduced by (rank, bit string), so the answer does
/// not depend on the worker count. Throws SizeGuardExceeded ("brute-budget").
BruteForceResult brute_force_minrank(const FittingPattern& p, const BruteForceOptions& options = {});

/// rank(instantiate(p, bits)) == minrank and clearing any single set bit
/// raises the rank above minrank.
bool is_critical_fitting_matrix(const FittingPattern& p, const FreeBits& bits, std::size_t minrank);

/// Largest number of pairwise identical rows over all instantiations.
std::size_t max_identical_row_multiplicity(const FittingPattern& p,
                                           std::uint64_t budget = kDefaultBruteBudget);

/// The matrix as n lines of 0/1, then one `(row,col)=bit` line per free
/// position (1-based).
std::string format_witness(const FittingPattern& p, const FreeBits& bits);

}  // namespace minrank
