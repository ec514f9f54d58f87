// One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.
//
// Tolerances: every minrank, beta and rank comparison is exact. Time limits
// are wall-clock seconds as listed next to each criterion.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "minrank/algorithm.hpp"
#include "minrank/commands.hpp"
#include "minrank/errors.hpp"
#include "minrank/fitting.hpp"
#include "minrank/fixtures.hpp"
#include "minrank/generator.hpp"
#include "minrank/gf2.hpp"
#include "minrank/graphs.hpp"

using namespace minrank;

namespace {

constexpr double kExample2Seconds = 5;
constexpr double kExample3Seconds = 10;
constexpr double kExample4Seconds = 300;
constexpr double kExample4ParallelSeconds = 60;
constexpr double kSweepSeconds = 300;

constexpr std::size_t kSweepInstances = 200;
constexpr std::size_t kSweepMaxN = 9;
constexpr std::size_t kSweepMaxFreeBits = 18;
constexpr std::size_t kIdenticalRowsMaxFreeBits = 16;
constexpr std::size_t kCriticalInstances = 50;
constexpr std::size_t kCriticalMaxN = 8;

int failures = 0;

void report(int id, const std::string& title, bool pass, const std::string& detail) {
  if (!pass) ++failures;
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << " (" << title << "): " << detail
            << std::endl;
}

template <typename F>
double timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string seconds(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << " s";
  return os.str();
}

FittingPattern pattern_of(const IndexCodingProblem& p, Coverage coverage = Coverage::kStrict) {
  return general_form(build_side_info_graph(split_to_single_unicast(p, coverage)));
}

// Seeded corpus: n in [3, max_n], two to four receivers, free bits capped.
std::vector<IndexCodingProblem> corpus(std::size_t count, std::size_t max_n, std::size_t max_bits,
                                       std::uint64_t first_seed) {
  std::vector<IndexCodingProblem> out;
  for (std::uint64_t seed = first_seed; out.size() < count; ++seed) {
    const std::size_t n = 3 + seed % (max_n - 2);
    const std::size_t receivers = 2 + (seed / 7) % std::min<std::size_t>(3, n - 1);
    try {
      auto p = generate_instance({n, receivers, std::nullopt, seed, 500});
      if (free_bit_count(p) <= max_bits) out.push_back(std::move(p));
    } catch (const InfeasibleProfile&) {
    }
  }
  return out;
}

void example_2() {
  MinrankResult r;
  const double t = timed([&] { r = minrank_fast(fixtures::ten_messages_five_receivers()); });
  report(1, "ten messages, five receivers", r.minrank == 7 && t < kExample2Seconds,
         "minrank " + std::to_string(r.minrank) + " (want 7), " + seconds(t) + " (limit 5 s)");
}

// Rank of the fitting matrix that sets exactly the certificate edges.
std::size_t certificate_rank(const IndexCodingProblem& p, const MinrankResult& r) {
  const auto pattern = pattern_of(p);
  std::vector<FreePosition> ones;
  for (const Edge& e : r.critical_edges) ones.push_back({e.to, e.from});
  return rank(instantiate(pattern, bits_with_ones(pattern, ones)));
}

void example_3() {
  const auto p = fixtures::ten_messages_three_receivers();
  MinrankResult r;
  const double t = timed([&] { r = minrank_fast(p); });
  report(2, "ten messages, three receivers", r.minrank == 7 && r.beta == 13824 && t < kExample3Seconds,
         "minrank " + std::to_string(r.minrank) + " (want 7), beta " + r.beta.str() + " (want 13824), " +
             seconds(t) + " (limit 10 s); certificate matrix rank " + std::to_string(certificate_rank(p, r)));
}

void example_4() {
  const auto p = fixtures::twelve_messages();
  MinrankResult r1;
  MinrankResult r8;
  const double t1 = timed([&] { r1 = minrank_fast(p); });
  MinrankOptions opts;
  opts.workers = 8;
  const double t8 = timed([&] { r8 = minrank_fast(p, opts); });
  const bool pass = r1.minrank == 8 && r8.minrank == 8 && r1.beta == 864000 && t1 < kExample4Seconds &&
                    t8 < kExample4ParallelSeconds;
  report(3, "twelve messages", pass,
         "minrank " + std::to_string(r1.minrank) + " (want 8), beta " + r1.beta.str() + " (want 864000), " +
             seconds(t1) + " single-threaded (limit 300 s), " + seconds(t8) +
             " with 8 workers (limit 60 s); certificate matrix rank " + std::to_string(certificate_rank(p, r1)));
}

void example_1() {
  const auto p = fixtures::five_messages();
  const auto pattern = pattern_of(p);
  const auto brute = brute_force_minrank(pattern);
  const auto fast = minrank_fast(p);
  const auto a = Gf2Matrix::from_strings({"10010", "01010", "00100", "00011", "00101"});
  const auto ac = Gf2Matrix::from_strings({"10010", "01000", "00101", "10010", "00101"});
  const std::vector<FreePosition> ac_ones{{0, 3}, {2, 4}, {3, 0}, {4, 2}};
  const auto ac_bits = bits_with_ones(pattern, ac_ones);
  const bool ac_matches = instantiate(pattern, ac_bits) == ac;
  const bool critical = is_critical_fitting_matrix(pattern, ac_bits, brute.minrank);
  const std::size_t z = std::size_t{1} << pattern.free_count();
  const bool pass = z == 256 && brute.minrank == 3 && fast.minrank == 3 && rank(a) == 5 && rank(ac) == 3 &&
                    ac_matches && critical;
  report(4, "five messages", pass,
         "z " + std::to_string(z) + ", brute " + std::to_string(brute.minrank) + ", fast " +
             std::to_string(fast.minrank) + ", rank(A) " + std::to_string(rank(a)) + ", rank(A_c) " +
             std::to_string(rank(ac)) + ", A_c critical " + (critical ? "yes" : "no"));
}

struct SweepEntry {
  IndexCodingProblem problem;
  MinrankResult fast;
  BruteForceResult brute;
};

std::vector<SweepEntry> oracle_sweep() {
  std::vector<SweepEntry> entries;
  std::size_t agree = 0;
  std::size_t max_bits = 0;
  const double t = timed([&] {
    for (auto& p : corpus(kSweepInstances, kSweepMaxN, kSweepMaxFreeBits, 1)) {
      max_bits = std::max(max_bits, free_bit_count(p));
      SweepEntry e{p, minrank_fast(p), brute_force_minrank(pattern_of(p))};
      agree += e.fast.minrank == e.brute.minrank;
      entries.push_back(std::move(e));
    }
  });
  report(5, "oracle equivalence sweep", agree == entries.size() && entries.size() >= kSweepInstances &&
                                            t < kSweepSeconds,
         std::to_string(agree) + "/" + std::to_string(entries.size()) + " agree, n <= 9, max free bits " +
             std::to_string(max_bits) + ", " + seconds(t) + " (limit 300 s)");
  return entries;
}

void property_suite(const std::vector<SweepEntry>& entries) {
  std::size_t row_checks = 0, row_bad = 0, clique_bad = 0, incoming_bad = 0, dependent_bad = 0;
  std::size_t cycles_checked = 0, unicycle_bad = 0;
  for (const auto& e : entries) {
    const auto& p = e.problem;
    const auto g = build_side_info_graph(split_to_single_unicast(p));
    if (free_bit_count(p) <= kIdenticalRowsMaxFreeBits) {
      ++row_checks;
      row_bad += max_identical_row_multiplicity(general_form(g)) > 2;
    }
    clique_bad += has_clique_of_size_three(g);
    const auto sg = build_supergraph(p);
    for (Vertex v = 0; v < p.n; ++v) incoming_bad += sg.incoming_count(v) != 1;
    dependent_bad += enumerate_minimally_dependent_sets(e.brute.witness).size() < p.n - e.brute.minrank;
    for (const auto& column : e.fast.cycle_certificates) {
      for (const auto& cycle : column) {
        ++cycles_checked;
        unicycle_bad += !is_unicycle(g, cycle);
      }
    }
  }
  const bool pass = row_bad == 0 && clique_bad == 0 && incoming_bad == 0 && dependent_bad == 0 &&
                    unicycle_bad == 0 && row_checks > 0;
  report(6, "property suite", pass,
         "over " + std::to_string(entries.size()) + " instances: >2 identical rows " + std::to_string(row_bad) +
             "/" + std::to_string(row_checks) + ", 3-cliques " + std::to_string(clique_bad) +
             ", vertices without exactly one supernode edge " + std::to_string(incoming_bad) +
             ", witnesses short of n - minrank dependent sets " + std::to_string(dependent_bad) +
             ", certificate cycles that are not unicycles " + std::to_string(unicycle_bad) + "/" +
             std::to_string(cycles_checked));
}

void criticality() {
  const auto instances = corpus(kCriticalInstances, kCriticalMaxN, kSweepMaxFreeBits, 5000);
  std::size_t bits_checked = 0, bits_not_raising = 0, bits_lowering = 0, instances_with_failure = 0;
  std::size_t edges_checked = 0, edges_changing = 0;
  for (const auto& p : instances) {
    const auto info = critical_side_information(p);
    const std::size_t base = info.result.minrank;
    bool failed = false;
    for (const auto& bit : info.bits) {
      const auto reduced = remove_side_information(p, bit.receiver, bit.message);
      const std::size_t after = brute_force_minrank(pattern_of(reduced, Coverage::kDemandsOnly)).minrank;
      ++bits_checked;
      // Less side information can never lower the minrank; count it anyway.
      bits_lowering += after < base;
      if (after <= base) {
        ++bits_not_raising;
        failed = true;
      }
    }
    instances_with_failure += failed;

    const auto g = build_side_info_graph(split_to_single_unicast(p));
    const auto on_cycles = edges_on_directed_cycles(g);
    const auto pattern = general_form(g);
    for (const Edge& e : g.edges()) {
      if (std::binary_search(on_cycles.begin(), on_cycles.end(), e)) continue;
      ++edges_checked;
      edges_changing += brute_force_minrank(without_free_position(pattern, {e.to, e.from})).minrank != base;
    }
  }
  report(7, "criticality", bits_not_raising == 0 && edges_changing == 0 && instances.size() >= kCriticalInstances,
         "over " + std::to_string(instances.size()) + " instances: critical bits whose deletion did not raise "
             "minrank " + std::to_string(bits_not_raising) + "/" + std::to_string(bits_checked) + " (in " +
             std::to_string(instances_with_failure) + " instances, " + std::to_string(bits_lowering) +
             " lowered it); off-cycle edges whose deletion changed "
             "minrank " + std::to_string(edges_changing) + "/" + std::to_string(edges_checked));
}

void determinism() {
  cli::MinrankArgs args;
  args.path = std::string(MINRANK_DATA_DIR) + "/twelve_messages.json";
  std::ostringstream out1, err1, out8, err8;
  args.workers = 1;
  const int c1 = cli::run_minrank(args, {out1, err1});
  args.workers = 8;
  const int c8 = cli::run_minrank(args, {out8, err8});
  const bool pass = c1 == cli::kExitOk && c8 == cli::kExitOk && out1.str() == out8.str() && !out1.str().empty();
  report(8, "determinism", pass,
         "reports with 1 and 8 workers " + std::string(out1.str() == out8.str() ? "identical" : "differ") +
             " (" + std::to_string(out1.str().size()) + " bytes)");
}

}  // namespace

int main() {
  try {
    example_2();
    example_3();
    example_4();
    example_1();
    const auto entries = oracle_sweep();
    property_suite(entries);
    criticality();
    determinism();
  } catch (const std::exception& e) {
    std::cout << "FAIL acceptance run aborted: " << e.what() << std::endl;
    return 1;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
