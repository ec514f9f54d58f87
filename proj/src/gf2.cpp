#include "minrank/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "minrank/errors.hpp"

namespace minrank {

namespace {

std::size_t words_for(std::size_t cols) { return (cols + kWordBits - 1) / kWordBits; }

Word bit_mask(std::size_t c) { return Word{1} << (c % kWordBits); }

}  // namespace

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_per_row_(words_for(cols)), words_(rows * words_for(cols), 0) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

Gf2Matrix Gf2Matrix::from_strings(std::span<const std::string_view> rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Gf2Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      const char ch = rows[r][c];
      if (ch != '0' && ch != '1') throw std::invalid_argument("matrix entries must be '0' or '1'");
      m.set(r, c, ch == '1');
    }
  }
  return m;
}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("Gf2Matrix::get");
  return (words_[r * words_per_row_ + c / kWordBits] & bit_mask(c)) != 0;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("Gf2Matrix::set");
  Word& w = words_[r * words_per_row_ + c / kWordBits];
  if (value) {
    w |= bit_mask(c);
  } else {
    w &= ~bit_mask(c);
  }
}

void Gf2Matrix::flip(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("Gf2Matrix::flip");
  words_[r * words_per_row_ + c / kWordBits] ^= bit_mask(c);
}

std::span<const Word> Gf2Matrix::row(std::size_t r) const {
  if (r >= rows_) throw std::out_of_range("Gf2Matrix::row");
  return std::span<const Word>(words_).subspan(r * words_per_row_, words_per_row_);
}

std::span<Word> Gf2Matrix::row(std::size_t r) {
  if (r >= rows_) throw std::out_of_range("Gf2Matrix::row");
  return std::span<Word>(words_).subspan(r * words_per_row_, words_per_row_);
}

bool Gf2Matrix::rows_equal(std::size_t a, std::size_t b) const {
  const auto ra = row(a);
  const auto rb = row(b);
  return std::equal(ra.begin(), ra.end(), rb.begin());
}

bool Gf2Matrix::row_is_zero(std::size_t r) const {
  const auto rr = row(r);
  return std::all_of(rr.begin(), rr.end(), [](Word w) { return w == 0; });
}

std::string Gf2Matrix::to_string() const {
  std::string out;
  out.reserve(rows_ * (cols_ + 1));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(get(r, c) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

RowEchelon reduced_row_echelon(Gf2Matrix m) {
  RowEchelon out;
  const std::size_t wpr = m.words_per_row();
  auto words = m.words();
  std::size_t next = 0;
  for (std::size_t c = 0; c < m.cols() && next < m.rows(); ++c) {
    const std::size_t wi = c / kWordBits;
    const Word bit = bit_mask(c);
    std::size_t pivot = next;
    while (pivot < m.rows() && (words[pivot * wpr + wi] & bit) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != next) {
      std::swap_ranges(words.begin() + pivot * wpr, words.begin() + (pivot + 1) * wpr,
                       words.begin() + next * wpr);
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == next || (words[r * wpr + wi] & bit) == 0) continue;
      for (std::size_t k = wi; k < wpr; ++k) words[r * wpr + k] ^= words[next * wpr + k];
    }
    out.pivot_columns.push_back(c);
    ++next;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Gf2Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  std::vector<Word> scratch(m.words().begin(), m.words().end());
  if (m.words_per_row() == 1) return detail::rank_single_word(scratch);
  return detail::rank_in_place(scratch, m.rows(), m.words_per_row());
}

namespace detail {

std::size_t rank_single_word(std::span<Word> rows) {
  std::size_t r = 0;
  const std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i) {
    // Pivot on the lowest set bit of row i after previous eliminations.
    Word pivot_row = rows[i];
    if (pivot_row == 0) continue;
    const Word low = pivot_row & (~pivot_row + 1);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rows[j] & low) rows[j] ^= pivot_row;
    }
    ++r;
  }
  return r;
}

std::size_t rank_in_place(std::span<Word> words, std::size_t rows, std::size_t words_per_row) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    Word* pivot_row = words.data() + i * words_per_row;
    std::size_t wi = 0;
    while (wi < words_per_row && pivot_row[wi] == 0) ++wi;
    if (wi == words_per_row) continue;
    const Word low = pivot_row[wi] & (~pivot_row[wi] + 1);
    for (std::size_t j = i + 1; j < rows; ++j) {
      Word* other = words.data() + j * words_per_row;
      if ((other[wi] & low) == 0) continue;
      for (std::size_t k = wi; k < words_per_row; ++k) other[k] ^= pivot_row[k];
    }
    ++r;
  }
  return r;
}

}  // namespace detail

bool is_minimally_dependent(const Gf2Matrix& m, std::span<const std::size_t> row_set) {
  if (row_set.empty()) throw std::invalid_argument("row set must be nonempty");
  std::vector<std::size_t> sorted(row_set.begin(), row_set.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("row set contains a repeated index");
  }
  if (sorted.back() >= m.rows()) throw std::out_of_range("row index out of range");

  // Minimally dependent <=> the only nontrivial dependency is the full set:
  // the rows XOR to zero and span a space of dimension |set| - 1.
  Gf2Matrix sub(sorted.size(), m.cols());
  std::vector<Word> total(m.words_per_row(), 0);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto src = m.row(sorted[i]);
    std::copy(src.begin(), src.end(), sub.row(i).begin());
    for (std::size_t k = 0; k < total.size(); ++k) total[k] ^= src[k];
  }
  if (std::any_of(total.begin(), total.end(), [](Word w) { return w != 0; })) return false;
  return rank(sub) + 1 == sorted.size();
}

std::vector<std::vector<std::size_t>> enumerate_minimally_dependent_sets(const Gf2Matrix& m,
                                                                        std::size_t limit_rows) {
  if (m.rows() > limit_rows) {
    throw SizeGuardExceeded("limit-rows", "minimally dependent set sweep over " +
                                              std::to_string(m.rows()) + " rows exceeds limit of " +
                                              std::to_string(limit_rows));
  }
  const std::size_t n = m.rows();
  const std::size_t wpr = m.words_per_row();
  const std::size_t masks = std::size_t{1} << n;

  // xor_of[mask] holds the XOR of the rows in mask; has_dependent_subset[mask]
  // records whether some proper nonempty submask already XORs to zero.
  std::vector<Word> xor_of(masks * wpr, 0);
  std::vector<char> zero(masks, 0);
  std::vector<char> has_dependent_subset(masks, 0);
  std::vector<std::vector<std::size_t>> out;

  for (std::size_t mask = 1; mask < masks; ++mask) {
    const std::size_t low = static_cast<std::size_t>(std::countr_zero(mask));
    const std::size_t rest = mask & (mask - 1);
    const auto r = m.row(low);
    bool is_zero = true;
    for (std::size_t k = 0; k < wpr; ++k) {
      xor_of[mask * wpr + k] = xor_of[rest * wpr + k] ^ r[k];
      is_zero = is_zero && xor_of[mask * wpr + k] == 0;
    }
    zero[mask] = is_zero ? 1 : 0;

    bool dependent_below = false;
    for (std::size_t bits = mask; bits != 0 && !dependent_below; bits &= bits - 1) {
      const std::size_t sub = mask & ~(bits & (~bits + 1));
      if (sub != 0 && (zero[sub] || has_dependent_subset[sub])) dependent_below = true;
    }
    has_dependent_subset[mask] = dependent_below ? 1 : 0;

    if (is_zero && !dependent_below) {
      std::vector<std::size_t> set;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1) set.push_back(i);
      }
      out.push_back(std::move(set));
    }
  }
  return out;
}

}  // namespace minrank
