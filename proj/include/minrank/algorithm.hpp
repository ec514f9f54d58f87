#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minrank/graphs.hpp"
#include "minrank/problem.hpp"

namespace minrank {

inline constexpr std::uint64_t kDefaultBetaBudget = 10'000'000;

/// N x W_max grid. Row k holds the messages of W_k, each in its own slot;
/// the remaining W_max - |W_k| slots of the row are empty.
class DemandTable {
 public:
  DemandTable() = default;
  DemandTable(std::size_t rows, std::size_t width);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t width() const noexcept { return width_; }

  std::optional<MessageId> at(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, std::optional<MessageId> cell);

  bool column_empty(std::size_t col) const;
  /// Smallest message in the column, if any.
  std::optional<MessageId> column_min(std::size_t col) const;

  /// Grid with 1-based ids and `-` for empty cells, one line per row.
  std::string to_string() const;

  friend bool operator==(const DemandTable&, const DemandTable&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t width_ = 0;
  std::vector<std::optional<MessageId>> cells_;
};

struct ColumnEntry {
  ReceiverId receiver = 0;
  MessageId message = 0;

  friend bool operator==(const ColumnEntry&, const ColumnEntry&) = default;
};

/// One column of a table seen as a single-unicast uniprior problem: at most
/// one demand per receiver, each receiver keeping its whole side information.
using ColumnProblem = std::vector<ColumnEntry>;

ColumnProblem column_of(const DemandTable& t, std::size_t col);

/// True iff every row k holds exactly the messages of W_k.
bool table_fits(const DemandTable& t, const IndexCodingProblem& p);

/// Columns ordered by smallest demanded message with empty columns last.
/// Every table has exactly one column permutation in this form.
bool has_canonical_columns(const DemandTable& t);

/// Walks every table of a valid problem. Row k runs through its placements
/// in order: slot combinations lexicographically, then arrangements of W_k
/// (ascending ids) in lexicographic permutation order. Tables are ordered
/// like numbers whose most significant digit is row 0's placement.
class TableEnumerator {
 public:
  /// Throws ValidationError or SizeGuardExceeded ("beta-budget").
  explicit TableEnumerator(const IndexCodingProblem& p, std::uint64_t beta_budget = kDefaultBetaBudget);

  /// beta, the number of tables.
  std::uint64_t size() const noexcept { return size_; }

  DemandTable table_at(std::uint64_t index) const;

  /// Calls f(index, table) for indices in [begin, end), advancing the table
  /// in place between calls.
  template <typename F>
  void for_each(std::uint64_t begin, std::uint64_t end, F&& f) const {
    if (begin >= end) return;
    std::vector<std::size_t> digits = digits_of(begin);
    DemandTable t = table_from_digits(digits);
    for (std::uint64_t i = begin;;) {
      f(i, static_cast<const DemandTable&>(t));
      if (++i == end) break;
      advance(digits, t);
    }
  }

  std::size_t width() const noexcept { return width_; }
  std::size_t placements(std::size_t row) const { return placements_.at(row).size(); }

 private:
  std::vector<std::size_t> digits_of(std::uint64_t index) const;
  DemandTable table_from_digits(const std::vector<std::size_t>& digits) const;
  void advance(std::vector<std::size_t>& digits, DemandTable& t) const;
  void write_row(DemandTable& t, std::size_t row, std::size_t placement) const;

  std::size_t width_ = 0;
  std::uint64_t size_ = 0;
  std::vector<std::vector<std::vector<std::optional<MessageId>>>> placements_;
};

/// A validated problem and its side-information graph, built once and shared
/// by every column solve.
struct SolverContext {
  IndexCodingProblem problem;
  SideInformationGraph graph;

  explicit SolverContext(IndexCodingProblem p);
};

struct ColumnSolution {
  std::size_t rank = 0;
  std::vector<std::vector<Vertex>> cycles;
};

/// Minrank of one column: entries minus the cycles of the out-degree <= 1
/// restriction of the side-information graph to the column's demands.
/// Throws std::invalid_argument if two entries share a receiver or an entry
/// is not a demand of its receiver.
ColumnSolution column_minrank(const ColumnProblem& column, const SolverContext& ctx);
ColumnSolution column_minrank(const ColumnProblem& column, const IndexCodingProblem& p);

/// Sum of column minranks over the nonempty columns.
std::size_t table_score(const DemandTable& t, const SolverContext& ctx);
std::size_t table_score(const DemandTable& t, const IndexCodingProblem& p);

/// Exact 1/minrank.
struct SymmetricRate {
  std::uint64_t numerator = 1;
  std::uint64_t denominator = 1;

  std::string to_string() const;
};

struct MinrankOptions {
  std::uint64_t beta_budget = kDefaultBetaBudget;
  std::size_t workers = 1;
  /// Score only tables with canonical column order. Same minimum, fewer
  /// tables; the reported optimal table may differ from the default mode.
  bool canonical_columns = false;
  /// Also collect the union of critical edges over every minimizing table.
  bool union_all_minimizers = false;
};

struct MinrankResult {
  std::size_t minrank = 0;
  BigCount beta = 0;
  std::uint64_t tables_scored = 0;
  std::uint64_t minimizing_tables = 0;
  std::uint64_t optimal_index = 0;
  DemandTable optimal_table;
  std::vector<std::size_t> column_ranks;
  /// cycle_certificates[c] lists the cycles found in column c.
  std::vector<std::vector<std::vector<Vertex>>> cycle_certificates;
  /// Edges of all certificate cycles, sorted.
  std::vector<Edge> critical_edges;
  /// Filled only with MinrankOptions::union_all_minimizers.
  std::optional<std::vector<Edge>> union_critical_edges;
  SymmetricRate symmetric_rate;
};

/// min over tables of the table score. The optimal table is the first
/// minimizer in enumeration order regardless of the worker count.
MinrankResult minrank_fast(const IndexCodingProblem& p, const MinrankOptions& options = {});

struct CriticalBit {
  ReceiverId receiver = 0;  // knows `message`
  MessageId message = 0;
  Vertex via_row = 0;  // demand of `receiver` the certificate edge enters

  friend auto operator<=>(const CriticalBit&, const CriticalBit&) = default;
};

struct CriticalInfo {
  MinrankResult result;
  SideInformationGraph critical_graph;
  std::vector<CriticalBit> bits;  // sorted by receiver, then message
};

/// One critical set of side-information bits: the unicycle edges of the
/// optimal table's column certificates.
CriticalInfo critical_side_information(const IndexCodingProblem& p, const MinrankOptions& options = {});

/// Critical bits for an explicit edge set of the problem's graph.
std::vector<CriticalBit> critical_bits_of(const IndexCodingProblem& p, const std::vector<Edge>& edges);

}  // namespace minrank
