#include "minrank/commands.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <map>
#include <sstream>

#include "minrank/errors.hpp"
#include "minrank/fixtures.hpp"
#include "minrank/problem_io.hpp"

namespace minrank::cli {

namespace {

using nlohmann::ordered_json;

template <typename F>
int guarded(Streams io, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    io.err << "ParseError: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    io.err << e.what() << '\n';
    return kExitDomainFailure;
  } catch (const SizeGuardExceeded& e) {
    io.err << "SizeGuardExceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const InfeasibleProfile& e) {
    io.err << "InfeasibleProfile: " << e.what() << '\n';
    return kExitDomainFailure;
  } catch (const std::invalid_argument& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string join(const std::vector<std::size_t>& xs, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(xs[i]);
  }
  return s;
}

std::string cycle_text(const std::vector<Vertex>& cycle) {
  std::string s = "(";
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(cycle[i] + 1);
  }
  return s + ")";
}

std::string edges_text(const std::vector<Edge>& edges) {
  if (edges.empty()) return "none";
  std::string s;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(edges[i].from + 1) + " -> " + std::to_string(edges[i].to + 1);
  }
  return s;
}

ordered_json edges_json(const std::vector<Edge>& edges) {
  ordered_json arr = ordered_json::array();
  for (const Edge& e : edges) arr.push_back({e.from + 1, e.to + 1});
  return arr;
}

ordered_json cycles_json(const std::vector<std::vector<std::vector<Vertex>>>& per_column) {
  ordered_json cols = ordered_json::array();
  for (const auto& column : per_column) {
    ordered_json cs = ordered_json::array();
    for (const auto& cycle : column) {
      ordered_json c = ordered_json::array();
      for (Vertex v : cycle) c.push_back(v + 1);
      cs.push_back(c);
    }
    cols.push_back(cs);
  }
  return cols;
}

ordered_json table_json(const DemandTable& t) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < t.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < t.width(); ++c) {
      const auto cell = t.at(r, c);
      row.push_back(cell ? ordered_json(*cell + 1) : ordered_json(nullptr));
    }
    rows.push_back(row);
  }
  return rows;
}

std::string indent(const std::string& block, const std::string& prefix) {
  std::istringstream in(block);
  std::string line;
  std::string out;
  while (std::getline(in, line)) out += prefix + line + '\n';
  return out;
}

std::string fixed_seconds(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << s;
  return os.str();
}

// Loads and validates; prints violations and returns false if invalid.
bool load_valid(const std::filesystem::path& path, IndexCodingProblem& p, Streams io) {
  p = read_problem_file(path);
  const auto violations = validate(p);
  for (const auto& v : violations) io.err << rule_name(v.rule) << ": " << v.detail << '\n';
  return violations.empty();
}

}  // namespace

std::optional<bool> RunReport::agreement() const {
  if (!fast || !brute) return std::nullopt;
  return fast->minrank == brute->minrank;
}

std::string render_text(const RunReport& report, bool with_timings) {
  std::ostringstream os;
  os << "instance: n=" << report.n << " N=" << report.demand_sizes.size()
     << " demand-sizes=" << join(report.demand_sizes, ",") << '\n';
  os << "beta: " << report.beta << '\n';
  os << "fitting-matrices: 2^" << report.free_bits << " = " << report.fitting_matrices << '\n';
  if (report.fast) {
    const MinrankResult& r = *report.fast;
    os << "fast: minrank=" << r.minrank << '\n';
    os << "  symmetric-rate: " << r.symmetric_rate.to_string() << '\n';
    os << "  tables-scored: " << r.tables_scored << '\n';
    os << "  minimizing-tables: " << r.minimizing_tables << '\n';
    os << "  optimal-table: index " << r.optimal_index << '\n';
    os << indent(r.optimal_table.to_string(), "    ");
    os << "  column-ranks: " << join(r.column_ranks, " ") << '\n';
    os << "  cycles:\n";
    for (std::size_t c = 0; c < r.cycle_certificates.size(); ++c) {
      os << "    column " << c + 1 << ':';
      if (r.cycle_certificates[c].empty()) os << " none";
      for (const auto& cycle : r.cycle_certificates[c]) os << ' ' << cycle_text(cycle);
      os << '\n';
    }
    os << "  critical-edges: " << edges_text(r.critical_edges) << '\n';
    if (with_timings && report.fast_seconds) os << "  seconds: " << fixed_seconds(*report.fast_seconds) << '\n';
  }
  if (report.brute) {
    os << "brute: minrank=" << report.brute->minrank << '\n';
    os << "  witness:\n";
    os << indent(format_witness(report.pattern, report.brute->witness_bits), "    ");
    if (with_timings && report.brute_seconds) {
      os << "  seconds: " << fixed_seconds(*report.brute_seconds) << '\n';
    }
  }
  if (const auto agree = report.agreement()) os << "agreement: " << (*agree ? "yes" : "NO") << '\n';
  return os.str();
}

std::string render_json(const RunReport& report, bool with_timings) {
  ordered_json doc;
  doc["instance"] = {{"n", report.n},
                     {"receivers", report.demand_sizes.size()},
                     {"demand_sizes", report.demand_sizes}};
  doc["beta"] = report.beta.str();
  doc["fitting_matrices"] = {{"free_bits", report.free_bits}, {"count", report.fitting_matrices.str()}};
  if (report.fast) {
    const MinrankResult& r = *report.fast;
    ordered_json f;
    f["minrank"] = r.minrank;
    f["symmetric_rate"] = r.symmetric_rate.to_string();
    f["tables_scored"] = r.tables_scored;
    f["minimizing_tables"] = r.minimizing_tables;
    f["optimal_index"] = r.optimal_index;
    f["optimal_table"] = table_json(r.optimal_table);
    f["column_ranks"] = r.column_ranks;
    f["cycles"] = cycles_json(r.cycle_certificates);
    f["critical_edges"] = edges_json(r.critical_edges);
    if (with_timings && report.fast_seconds) f["seconds"] = *report.fast_seconds;
    doc["fast"] = f;
  }
  if (report.brute) {
    ordered_json b;
    b["minrank"] = report.brute->minrank;
    ordered_json rows = ordered_json::array();
    std::istringstream in(report.brute->witness.to_string());
    for (std::string line; std::getline(in, line);) rows.push_back(line);
    b["witness"] = rows;
    ordered_json bits = ordered_json::array();
    for (std::size_t k = 0; k < report.pattern.free_count(); ++k) {
      bits.push_back({{"row", report.pattern.free_positions[k].row + 1},
                      {"col", report.pattern.free_positions[k].col + 1},
                      {"bit", report.brute->witness_bits[k] ? 1 : 0}});
    }
    b["witness_bits"] = bits;
    if (with_timings && report.brute_seconds) b["seconds"] = *report.brute_seconds;
    doc["brute"] = b;
  }
  if (const auto agree = report.agreement()) doc["agreement"] = *agree;
  return doc.dump(2) + "\n";
}

int run_validate(const ValidateArgs& args, Streams io) {
  return guarded(io, [&] {
    const IndexCodingProblem p = read_problem_file(args.path);
    const auto violations = validate(p);
    if (args.json) {
      ordered_json doc;
      doc["valid"] = violations.empty();
      ordered_json vs = ordered_json::array();
      for (const auto& v : violations) vs.push_back({{"rule", rule_name(v.rule)}, {"detail", v.detail}});
      doc["violations"] = vs;
      io.out << doc.dump(2) << '\n';
    } else if (violations.empty()) {
      io.out << "valid: n=" << p.n << " N=" << p.receivers.size() << '\n';
    } else {
      for (const auto& v : violations) io.out << rule_name(v.rule) << ": " << v.detail << '\n';
    }
    return violations.empty() ? kExitOk : kExitDomainFailure;
  });
}

int run_minrank(const MinrankArgs& args, Streams io) {
  return guarded(io, [&]() -> int {
    IndexCodingProblem p;
    if (!load_valid(args.path, p, io)) return kExitDomainFailure;

    RunReport report;
    report.n = p.n;
    report.demand_sizes = demand_sizes(p);
    report.beta = table_instance_count(p);
    report.free_bits = free_bit_count(p);
    report.fitting_matrices = BigCount(1) << report.free_bits;
    report.pattern = general_form(build_side_info_graph(split_to_single_unicast(p)));

    if (args.method != Method::kBrute) {
      MinrankOptions opts;
      opts.beta_budget = args.beta_budget;
      opts.workers = args.workers;
      opts.canonical_columns = args.canonical_columns;
      const auto start = std::chrono::steady_clock::now();
      report.fast = minrank_fast(p, opts);
      report.fast_seconds = seconds_since(start);
    }
    if (args.method != Method::kFast) {
      BruteForceOptions opts;
      opts.budget = args.brute_budget;
      opts.workers = args.workers;
      const auto start = std::chrono::steady_clock::now();
      report.brute = brute_force_minrank(report.pattern, opts);
      report.brute_seconds = seconds_since(start);
    }

    io.out << (args.json ? render_json(report, args.timings) : render_text(report, args.timings));
    if (report.agreement() == false) {
      io.err << "fast and brute minranks disagree: " << report.fast->minrank << " vs "
             << report.brute->minrank << '\n';
      return kExitDomainFailure;
    }
    return kExitOk;
  });
}

int run_critical(const CriticalArgs& args, Streams io) {
  return guarded(io, [&]() -> int {
    IndexCodingProblem p;
    if (!load_valid(args.path, p, io)) return kExitDomainFailure;

    MinrankOptions opts;
    opts.beta_budget = args.beta_budget;
    opts.workers = args.workers;
    opts.union_all_minimizers = args.union_all_minimizers;
    const CriticalInfo info = critical_side_information(p, opts);
    const auto union_bits = info.result.union_critical_edges
                                ? std::optional(critical_bits_of(p, *info.result.union_critical_edges))
                                : std::nullopt;

    if (args.json) {
      ordered_json doc;
      doc["minrank"] = info.result.minrank;
      auto bits_json = [](const std::vector<CriticalBit>& bits) {
        ordered_json arr = ordered_json::array();
        for (const auto& b : bits) {
          arr.push_back({{"receiver", b.receiver + 1}, {"message", b.message + 1}, {"row", b.via_row + 1}});
        }
        return arr;
      };
      doc["critical_bits"] = bits_json(info.bits);
      doc["critical_graph"] = edges_json(info.critical_graph.edges());
      if (union_bits) {
        doc["minimizing_tables"] = info.result.minimizing_tables;
        doc["union_critical_bits"] = bits_json(*union_bits);
      }
      io.out << doc.dump(2) << '\n';
      return kExitOk;
    }

    auto print_bits = [&io](const std::vector<CriticalBit>& bits) {
      if (bits.empty()) {
        io.out << "  no critical side-information\n";
        return;
      }
      std::map<ReceiverId, std::vector<const CriticalBit*>> by_receiver;
      for (const auto& b : bits) by_receiver[b.receiver].push_back(&b);
      for (const auto& [receiver, list] : by_receiver) {
        io.out << "  D_" << receiver + 1 << ':';
        for (const CriticalBit* b : list) {
          io.out << " x_" << b->message + 1 << " (row x_" << b->via_row + 1 << ')';
        }
        io.out << '\n';
      }
    };
    io.out << "minrank: " << info.result.minrank << '\n';
    io.out << "critical side-information:\n";
    print_bits(info.bits);
    io.out << "critical graph:\n";
    const std::string dump = format_graph(info.critical_graph);
    io.out << (dump.empty() ? "  (no edges)\n" : indent(dump, "  "));
    if (union_bits) {
      io.out << "union over " << info.result.minimizing_tables << " minimizing tables:\n";
      print_bits(*union_bits);
    }
    return kExitOk;
  });
}

int run_generate(const GenerateArgs& args, Streams io) {
  return guarded(io, [&]() -> int {
    const IndexCodingProblem p = generate_instance(args.profile);
    const std::string text = format_problem(p);
    if (args.output) {
      std::ofstream out(*args.output);
      if (!out) {
        io.err << "error: cannot write " << args.output->string() << '\n';
        return kExitUsage;
      }
      out << text;
    } else {
      io.out << text;
    }
    return kExitOk;
  });
}

int run_selftest(const SelftestArgs& args, Streams io) {
  return guarded(io, [&]() -> int {
    std::size_t failures = 0;
    ordered_json checks = ordered_json::array();
    auto record = [&](const std::string& name, bool pass, const std::string& detail) {
      if (!pass) ++failures;
      if (args.json) {
        checks.push_back({{"check", name}, {"pass", pass}, {"detail", detail}});
      } else {
        io.out << (pass ? "PASS " : "FAIL ") << name << ": " << detail << '\n';
      }
    };

    MinrankOptions fast_opts;
    fast_opts.workers = args.workers;
    for (const auto& f : fixtures::reference_fixtures()) {
      const MinrankResult r = minrank_fast(f.problem, fast_opts);
      record("fixture " + f.name,
             r.minrank == f.minrank && r.beta == f.beta,
             "minrank " + std::to_string(r.minrank) + " (expected " + std::to_string(f.minrank) +
                 "), beta " + r.beta.str() + " (expected " + std::to_string(f.beta) + ")");
      // The certificate edges alone must already reach the reported rank.
      const auto pattern = general_form(build_side_info_graph(split_to_single_unicast(f.problem)));
      std::vector<FreePosition> ones;
      for (const Edge& e : r.critical_edges) ones.push_back({e.to, e.from});
      const std::size_t witness_rank = rank(instantiate(pattern, bits_with_ones(pattern, ones)));
      record("fixture " + f.name + " witness", witness_rank == r.minrank,
             "certificate matrix has rank " + std::to_string(witness_rank));
    }

    {
      const auto p = fixtures::five_messages();
      const auto pattern = general_form(build_side_info_graph(split_to_single_unicast(p)));
      const auto brute = brute_force_minrank(pattern);
      record("five-messages brute sweep", brute.minrank == 3,
             "minrank " + std::to_string(brute.minrank) + " over 2^" +
                 std::to_string(pattern.free_count()) + " matrices");
      const std::vector<FreePosition> critical_ones{{0, 3}, {2, 4}, {3, 0}, {4, 2}};
      const FreeBits bits = bits_with_ones(pattern, critical_ones);
      record("five-messages critical fitting matrix", is_critical_fitting_matrix(pattern, bits, 3),
             "rank " + std::to_string(rank(instantiate(pattern, bits))));
    }

    std::size_t checked = 0;
    std::size_t agreed = 0;
    for (std::uint64_t seed = 1; checked < args.sweep_instances; ++seed) {
      const std::size_t n = 3 + seed % 5;
      const std::size_t receivers = 2 + seed % std::min<std::size_t>(3, n - 1);
      IndexCodingProblem p;
      try {
        p = generate_instance({n, receivers, std::nullopt, seed, 200});
      } catch (const InfeasibleProfile&) {
        continue;
      }
      if (free_bit_count(p) > 14) continue;
      ++checked;
      const auto pattern = general_form(build_side_info_graph(split_to_single_unicast(p)));
      if (minrank_fast(p).minrank == brute_force_minrank(pattern).minrank) ++agreed;
    }
    record("oracle sweep", agreed == checked,
           std::to_string(agreed) + "/" + std::to_string(checked) + " random instances agree");

    if (args.json) {
      ordered_json doc;
      doc["checks"] = checks;
      doc["pass"] = failures == 0;
      io.out << doc.dump(2) << '\n';
    } else {
      io.out << (failures == 0 ? "selftest passed\n" : "selftest FAILED\n");
    }
    return failures == 0 ? kExitOk : kExitDomainFailure;
  });
}

}  // namespace minrank::cli
