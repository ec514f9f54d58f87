#include "minrank/algorithm.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "minrank/errors.hpp"

namespace minrank {

DemandTable::DemandTable(std::size_t rows, std::size_t width)
    : rows_(rows), width_(width), cells_(rows * width) {}

std::optional<MessageId> DemandTable::at(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= width_) throw std::out_of_range("DemandTable::at");
  return cells_[row * width_ + col];
}

void DemandTable::set(std::size_t row, std::size_t col, std::optional<MessageId> cell) {
  if (row >= rows_ || col >= width_) throw std::out_of_range("DemandTable::set");
  cells_[row * width_ + col] = cell;
}

bool DemandTable::column_empty(std::size_t col) const { return !column_min(col).has_value(); }

std::optional<MessageId> DemandTable::column_min(std::size_t col) const {
  std::optional<MessageId> best;
  for (std::size_t r = 0; r < rows_; ++r) {
    const auto cell = at(r, col);
    if (cell && (!best || *cell < *best)) best = cell;
  }
  return best;
}

std::string DemandTable::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < width_; ++c) {
      if (c) os << ' ';
      const auto cell = at(r, c);
      if (cell) {
        os << *cell + 1;
      } else {
        os << '-';
      }
    }
    os << '\n';
  }
  return os.str();
}

ColumnProblem column_of(const DemandTable& t, std::size_t col) {
  ColumnProblem out;
  for (std::size_t r = 0; r < t.rows(); ++r) {
    if (const auto cell = t.at(r, col)) out.push_back({r, *cell});
  }
  return out;
}

bool table_fits(const DemandTable& t, const IndexCodingProblem& p) {
  if (t.rows() != p.receivers.size() || t.width() != max_demand_size(p)) return false;
  for (std::size_t r = 0; r < t.rows(); ++r) {
    std::vector<MessageId> row;
    for (std::size_t c = 0; c < t.width(); ++c) {
      if (const auto cell = t.at(r, c)) row.push_back(*cell);
    }
    std::sort(row.begin(), row.end());
    if (row != p.receivers[r].wants) return false;
  }
  return true;
}

bool has_canonical_columns(const DemandTable& t) {
  std::optional<MessageId> prev;
  bool seen_empty = false;
  for (std::size_t c = 0; c < t.width(); ++c) {
    const auto m = t.column_min(c);
    if (!m) {
      seen_empty = true;
      continue;
    }
    if (seen_empty || (prev && *m < *prev)) return false;
    prev = m;
  }
  return true;
}

TableEnumerator::TableEnumerator(const IndexCodingProblem& p, std::uint64_t beta_budget) {
  require_table_budget(table_instance_count(p), beta_budget);
  width_ = max_demand_size(p);
  size_ = 1;
  for (const auto& r : p.receivers) {
    const std::size_t k = r.wants.size();
    std::vector<std::vector<std::optional<MessageId>>> options;

    // Slot combinations in lexicographic order: a selection mask walked
    // with prev_permutation starting from the leading-ones arrangement.
    std::vector<char> chosen(width_, 0);
    std::fill(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(k), 1);
    do {
      std::vector<std::size_t> slots;
      for (std::size_t s = 0; s < width_; ++s) {
        if (chosen[s]) slots.push_back(s);
      }
      std::vector<MessageId> arrangement = r.wants;
      do {
        std::vector<std::optional<MessageId>> row(width_);
        for (std::size_t i = 0; i < k; ++i) row[slots[i]] = arrangement[i];
        options.push_back(std::move(row));
      } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    } while (std::prev_permutation(chosen.begin(), chosen.end()));

    size_ *= options.size();
    placements_.push_back(std::move(options));
  }
}

std::vector<std::size_t> TableEnumerator::digits_of(std::uint64_t index) const {
  if (index >= size_) throw std::out_of_range("table index out of range");
  std::vector<std::size_t> digits(placements_.size());
  for (std::size_t r = placements_.size(); r-- > 0;) {
    const std::uint64_t base = placements_[r].size();
    digits[r] = static_cast<std::size_t>(index % base);
    index /= base;
  }
  return digits;
}

DemandTable TableEnumerator::table_from_digits(const std::vector<std::size_t>& digits) const {
  DemandTable t(placements_.size(), width_);
  for (std::size_t r = 0; r < digits.size(); ++r) write_row(t, r, digits[r]);
  return t;
}

void TableEnumerator::write_row(DemandTable& t, std::size_t row, std::size_t placement) const {
  const auto& cells = placements_[row][placement];
  for (std::size_t c = 0; c < width_; ++c) t.set(row, c, cells[c]);
}

void TableEnumerator::advance(std::vector<std::size_t>& digits, DemandTable& t) const {
  for (std::size_t r = digits.size(); r-- > 0;) {
    if (++digits[r] < placements_[r].size()) {
      write_row(t, r, digits[r]);
      return;
    }
    digits[r] = 0;
    write_row(t, r, 0);
  }
}

DemandTable TableEnumerator::table_at(std::uint64_t index) const {
  return table_from_digits(digits_of(index));
}

SolverContext::SolverContext(IndexCodingProblem p)
    : problem(std::move(p)), graph(build_side_info_graph(split_to_single_unicast(problem))) {}

ColumnSolution column_minrank(const ColumnProblem& column, const SolverContext& ctx) {
  std::vector<Vertex> vertices;
  vertices.reserve(column.size());
  std::vector<char> receiver_used(ctx.problem.receivers.size(), 0);
  for (const ColumnEntry& e : column) {
    if (e.receiver >= ctx.problem.receivers.size()) throw std::out_of_range("column receiver out of range");
    const auto& wants = ctx.problem.receivers[e.receiver].wants;
    if (!std::binary_search(wants.begin(), wants.end(), e.message)) {
      throw std::invalid_argument("column entry x_" + std::to_string(e.message + 1) +
                                  " is not demanded by D_" + std::to_string(e.receiver + 1));
    }
    if (receiver_used[e.receiver]) {
      throw std::invalid_argument("column holds two demands of D_" + std::to_string(e.receiver + 1));
    }
    receiver_used[e.receiver] = 1;
    vertices.push_back(e.message);
  }
  CycleSet cycles = count_cycles_outdeg_le1(ctx.graph, vertices);
  return {vertices.size() - cycles.count, std::move(cycles.cycles)};
}

ColumnSolution column_minrank(const ColumnProblem& column, const IndexCodingProblem& p) {
  return column_minrank(column, SolverContext(p));
}

std::size_t table_score(const DemandTable& t, const SolverContext& ctx) {
  std::size_t score = 0;
  for (std::size_t c = 0; c < t.width(); ++c) {
    const ColumnProblem column = column_of(t, c);
    if (!column.empty()) score += column_minrank(column, ctx).rank;
  }
  return score;
}

std::size_t table_score(const DemandTable& t, const IndexCodingProblem& p) {
  return table_score(t, SolverContext(p));
}

std::string SymmetricRate::to_string() const {
  return std::to_string(numerator) + "/" + std::to_string(denominator);
}

namespace {

void append_cycle_edges(const std::vector<Vertex>& cycle, std::vector<Edge>& out) {
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    out.push_back({cycle[i], cycle[(i + 1) % cycle.size()]});
  }
}

std::vector<Edge> certificate_edges(const DemandTable& t, const SolverContext& ctx) {
  std::vector<Edge> edges;
  for (std::size_t c = 0; c < t.width(); ++c) {
    const ColumnProblem column = column_of(t, c);
    if (column.empty()) continue;
    for (const auto& cycle : column_minrank(column, ctx).cycles) append_cycle_edges(cycle, edges);
  }
  return edges;
}

struct WorkerBest {
  std::size_t score = std::numeric_limits<std::size_t>::max();
  std::uint64_t index = 0;
  std::uint64_t scored = 0;
  std::uint64_t minimizers = 0;
  std::set<Edge> union_edges;
};

}  // namespace

MinrankResult minrank_fast(const IndexCodingProblem& p, const MinrankOptions& options) {
  const SolverContext ctx(p);
  const TableEnumerator tables(p, options.beta_budget);
  const std::uint64_t beta = tables.size();
  const std::size_t workers =
      static_cast<std::size_t>(std::clamp<std::uint64_t>(options.workers, 1, std::max<std::uint64_t>(beta, 1)));

  std::vector<WorkerBest> per_worker(workers);
  auto work = [&](std::size_t w) {
    WorkerBest& best = per_worker[w];
    const std::uint64_t begin = beta * w / workers;
    const std::uint64_t end = beta * (w + 1) / workers;
    tables.for_each(begin, end, [&](std::uint64_t index, const DemandTable& t) {
      if (options.canonical_columns && !has_canonical_columns(t)) return;
      ++best.scored;
      const std::size_t score = table_score(t, ctx);
      if (score > best.score) return;
      if (score < best.score) {
        best.score = score;
        best.index = index;
        best.minimizers = 0;
        best.union_edges.clear();
      }
      ++best.minimizers;
      if (options.union_all_minimizers) {
        for (const Edge& e : certificate_edges(t, ctx)) best.union_edges.insert(e);
      }
    });
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(work, w);
  }

  // Ranges are contiguous and ascending, so the first worker holding the
  // minimum score also holds the first minimizing index.
  WorkerBest total;
  for (WorkerBest& wb : per_worker) {
    total.scored += wb.scored;
    if (wb.minimizers == 0) continue;
    if (wb.score < total.score) {
      total.score = wb.score;
      total.index = wb.index;
      total.minimizers = wb.minimizers;
      total.union_edges = std::move(wb.union_edges);
    } else if (wb.score == total.score) {
      total.minimizers += wb.minimizers;
      total.union_edges.insert(wb.union_edges.begin(), wb.union_edges.end());
    }
  }

  MinrankResult out;
  out.beta = beta;
  out.tables_scored = total.scored;
  out.minimizing_tables = total.minimizers;
  out.minrank = total.score;
  out.optimal_index = total.index;
  out.optimal_table = tables.table_at(total.index);
  for (std::size_t c = 0; c < out.optimal_table.width(); ++c) {
    const ColumnProblem column = column_of(out.optimal_table, c);
    if (column.empty()) {
      out.column_ranks.push_back(0);
      out.cycle_certificates.emplace_back();
      continue;
    }
    ColumnSolution sol = column_minrank(column, ctx);
    out.column_ranks.push_back(sol.rank);
    for (const auto& cycle : sol.cycles) append_cycle_edges(cycle, out.critical_edges);
    out.cycle_certificates.push_back(std::move(sol.cycles));
  }
  std::sort(out.critical_edges.begin(), out.critical_edges.end());
  if (options.union_all_minimizers) {
    out.union_critical_edges = std::vector<Edge>(total.union_edges.begin(), total.union_edges.end());
  }
  out.symmetric_rate = {1, out.minrank};
  return out;
}

std::vector<CriticalBit> critical_bits_of(const IndexCodingProblem& p, const std::vector<Edge>& edges) {
  const auto demander = demander_of(p);
  std::vector<CriticalBit> bits;
  for (const Edge& e : edges) {
    // Edge j -> i: the receiver demanding x_i knows x_j.
    const auto owner = demander.at(e.to);
    if (!owner) throw std::invalid_argument("edge enters an undemanded message");
    bits.push_back({*owner, e.from, e.to});
  }
  std::sort(bits.begin(), bits.end());
  return bits;
}

CriticalInfo critical_side_information(const IndexCodingProblem& p, const MinrankOptions& options) {
  CriticalInfo out;
  out.result = minrank_fast(p, options);
  const SolverContext ctx(p);
  std::vector<std::vector<Vertex>> unicycles;
  for (const auto& column : out.result.cycle_certificates) {
    unicycles.insert(unicycles.end(), column.begin(), column.end());
  }
  out.critical_graph = critical_graph_from_unicycles(ctx.graph, unicycles);
  out.bits = critical_bits_of(p, out.result.critical_edges);
  return out;
}

}  // namespace minrank
