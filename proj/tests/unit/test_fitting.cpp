#include <doctest.h>

#include <vector>

#include "minrank/errors.hpp"
#include "minrank/fitting.hpp"
#include "minrank/fixtures.hpp"
#include "minrank/generator.hpp"
#include "oracles.hpp"

using namespace minrank;

namespace {

FittingPattern five_message_pattern() {
  return general_form(build_side_info_graph(split_to_single_unicast(fixtures::five_messages())));
}

std::vector<FreePosition> pos_1(std::initializer_list<std::pair<std::size_t, std::size_t>> ps) {
  std::vector<FreePosition> out;
  for (auto [r, c] : ps) out.push_back({r - 1, c - 1});
  return out;
}

FittingPattern pattern_of(std::size_t n, std::vector<Edge> edges) {
  return general_form(SideInformationGraph(n, edges));
}

}  // namespace

TEST_CASE("general form") {
  const auto p = five_message_pattern();
  CHECK(p.n == 5);
  CHECK(p.free_positions == pos_1({{1, 4}, {2, 4}, {3, 1}, {3, 5}, {4, 1}, {4, 5}, {5, 2}, {5, 3}}));
  CHECK(pattern_of(4, {}).free_count() == 0);
  CHECK(pattern_of(2, {{0, 1}, {1, 0}}).free_count() == 2);
}

TEST_CASE("instantiation") {
  const auto p = five_message_pattern();
  const auto a_ones = pos_1({{1, 4}, {2, 4}, {4, 5}, {5, 3}});
  const auto a = instantiate(p, bits_with_ones(p, a_ones));
  CHECK(a == Gf2Matrix::from_strings({"10010", "01010", "00100", "00011", "00101"}));
  const auto c_ones = pos_1({{1, 4}, {3, 5}, {4, 1}, {5, 3}});
  const auto ac = instantiate(p, bits_with_ones(p, c_ones));
  CHECK(ac == Gf2Matrix::from_strings({"10010", "01000", "00101", "10010", "00101"}));
  CHECK(instantiate(p, FreeBits(8, false)) == Gf2Matrix::identity(5));
  CHECK_THROWS_AS(instantiate(p, FreeBits(7, false)), std::invalid_argument);
  const auto not_free = pos_1({{1, 2}});
  CHECK_THROWS_AS(bits_with_ones(p, not_free), std::invalid_argument);

  const auto q = without_free_position(p, {0, 3});
  CHECK(q.free_count() == 7);
  CHECK(q.free_positions.front() == FreePosition{1, 3});
}

TEST_CASE("brute force minrank") {
  const auto p = five_message_pattern();
  const auto r = brute_force_minrank(p);
  CHECK(r.minrank == 3);
  CHECK(rank(r.witness) == 3);
  CHECK(instantiate(p, r.witness_bits) == r.witness);
  CHECK(r.minrank == oracle::minrank(fixtures::five_messages()));

  CHECK(brute_force_minrank(pattern_of(3, {})).minrank == 3);
  const auto two = brute_force_minrank(pattern_of(2, {{0, 1}, {1, 0}}));
  CHECK(two.minrank == 1);
  CHECK(two.witness == Gf2Matrix::from_strings({"11", "11"}));

  BruteForceOptions tight;
  tight.budget = 255;
  CHECK_THROWS_AS(brute_force_minrank(p, tight), SizeGuardExceeded);
  const auto big = general_form(build_side_info_graph(split_to_single_unicast(fixtures::twelve_messages())));
  try {
    brute_force_minrank(big);
    FAIL("expected a size guard");
  } catch (const SizeGuardExceeded& e) {
    CHECK(e.budget_name() == "brute-budget");
  }
}

TEST_CASE("brute force witness is the smallest bit string and ignores worker count") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    IndexCodingProblem prob;
    try {
      prob = generate_instance({4 + seed % 4, 2 + seed % 2, std::nullopt, seed, 500});
    } catch (const InfeasibleProfile&) {
      continue;
    }
    if (free_bit_count(prob) > 12) continue;
    const auto p = general_form(build_side_info_graph(split_to_single_unicast(prob)));
    const auto one = brute_force_minrank(p);
    BruteForceOptions many;
    many.workers = 5;
    const auto five = brute_force_minrank(p, many);
    CHECK(one.minrank == oracle::minrank(prob));
    CHECK(one.witness_bits == five.witness_bits);

    // No smaller bit string (bit 0 first) reaches the minimum.
    const std::size_t k = p.free_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      FreeBits bits(k);
      for (std::size_t i = 0; i < k; ++i) bits[i] = (mask >> (k - 1 - i)) & 1;
      if (bits == one.witness_bits) break;
      CHECK(rank(instantiate(p, bits)) > one.minrank);
    }
  }
}

TEST_CASE("critical fitting matrices") {
  const auto p = five_message_pattern();
  const auto c_ones = pos_1({{1, 4}, {3, 5}, {4, 1}, {5, 3}});
  CHECK(is_critical_fitting_matrix(p, bits_with_ones(p, c_ones), 3));
  const auto a_ones = pos_1({{1, 4}, {2, 4}, {4, 5}, {5, 3}});
  CHECK_FALSE(is_critical_fitting_matrix(p, bits_with_ones(p, a_ones), 3));
  // Rank 3 but with a removable 1: (2,4) can be cleared without a rank change.
  const auto extra = pos_1({{1, 4}, {2, 4}, {3, 5}, {4, 1}, {5, 3}});
  CHECK(rank(instantiate(p, bits_with_ones(p, extra))) == 3);
  CHECK_FALSE(is_critical_fitting_matrix(p, bits_with_ones(p, extra), 3));
  CHECK(is_critical_fitting_matrix(pattern_of(3, {}), {}, 3));
}

TEST_CASE("identical rows") {
  CHECK(max_identical_row_multiplicity(five_message_pattern()) == 2);
  CHECK(max_identical_row_multiplicity(pattern_of(4, {})) == 1);
}

TEST_CASE("witness text") {
  const auto p = pattern_of(2, {{0, 1}, {1, 0}});
  CHECK(format_witness(p, {true, false}) == "11\n01\n(1,2)=1\n(2,1)=0\n");
}
