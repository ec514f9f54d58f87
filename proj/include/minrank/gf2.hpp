#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace minrank {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

/// Dense bit-packed matrix over GF(2). Row r occupies `words_per_row()`
/// consecutive words; bit c of the row lives in word c / 64, bit c % 64.
/// Bits at positions >= cols() are always zero.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);

  static Gf2Matrix identity(std::size_t n);

  /// Builds a matrix from rows of '0'/'1' characters; all rows must have the
  /// same length. Throws std::invalid_argument otherwise.
  static Gf2Matrix from_strings(std::span<const std::string_view> rows);
  static Gf2Matrix from_strings(std::initializer_list<std::string_view> rows) {
    return from_strings(std::span<const std::string_view>(rows.begin(), rows.size()));
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t words_per_row() const noexcept { return words_per_row_; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value);
  void flip(std::size_t r, std::size_t c);

  std::span<const Word> row(std::size_t r) const;
  std::span<Word> row(std::size_t r);

  bool rows_equal(std::size_t a, std::size_t b) const;
  bool row_is_zero(std::size_t r) const;

  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

  /// One line of '0'/'1' per row, each terminated by '\n'.
  std::string to_string() const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<Word> words_;
};

/// Result of reducing a matrix to reduced row echelon form. Pivots are chosen
/// left to right; each pivot column is cleared both above and below.
struct RowEchelon {
  Gf2Matrix reduced;
  std::vector<std::size_t> pivot_columns;

  std::size_t rank() const noexcept { return pivot_columns.size(); }
};

RowEchelon reduced_row_echelon(Gf2Matrix m);

/// GF(2) row rank. A matrix with no rows or no columns has rank 0.
std::size_t rank(const Gf2Matrix& m);

/// True iff the listed rows XOR to zero and no proper nonempty subset does.
/// Throws std::out_of_range for a bad index and std::invalid_argument for an
/// empty or repeated index set.
bool is_minimally_dependent(const Gf2Matrix& m, std::span<const std::size_t> row_set);

/// Every minimally dependent row subset, as sorted index lists, ordered by
/// the bitmask of the subset. Exhaustive over 2^rows masks; throws
/// SizeGuardExceeded when rows() > limit_rows.
std::vector<std::vector<std::size_t>> enumerate_minimally_dependent_sets(
    const Gf2Matrix& m, std::size_t limit_rows = 16);

namespace detail {

/// Rank of a packed row buffer, destroying its contents.
std::size_t rank_in_place(std::span<Word> words, std::size_t rows, std::size_t words_per_row);

/// Rank of at most 64 single-word rows, destroying their contents.
std::size_t rank_single_word(std::span<Word> rows);

}  // namespace detail

}  // namespace minrank
