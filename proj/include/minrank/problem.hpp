#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace minrank {

/// Messages are 0-based internally. The file format and all printed output
/// use 1-based ids (x_1 .. x_n); conversion happens only at the I/O boundary.
using MessageId = std::size_t;
using ReceiverId = std::size_t;
using BigCount = boost::multiprecision::cpp_int;

struct Receiver {
  std::vector<MessageId> wants;  // sorted, unique
  std::vector<MessageId> has;    // sorted, unique

  friend bool operator==(const Receiver&, const Receiver&) = default;
};

struct IndexCodingProblem {
  std::size_t n = 0;
  std::vector<Receiver> receivers;

  std::size_t receiver_count() const noexcept { return receivers.size(); }

  friend bool operator==(const IndexCodingProblem&, const IndexCodingProblem&) = default;
};

/// Convenience constructor from 1-based id lists, as the instances are usually
/// written down. Sorts each list; does not validate.
IndexCodingProblem make_problem(std::size_t n,
                                const std::vector<std::pair<std::vector<std::size_t>,
                                                            std::vector<std::size_t>>>& receivers);

enum class Rule {
  kUnicast,        // a message is demanded by two receivers
  kUniprior,       // a message is known by two receivers
  kNotDemanded,    // a message is demanded by no receiver (CoverageViolation)
  kNotKnown,       // a message is known by no receiver (CoverageViolation)
  kSelfKnowledge,  // a receiver knows a message it demands
  kMessageRange,   // an id outside [n]
};

std::string_view rule_name(Rule rule);

struct Violation {
  Rule rule;
  std::string detail;  // uses 1-based ids: D_k, x_j
};

/// Every violated rule, in a fixed order (range, unicast, uniprior, self
/// knowledge, coverage). Empty means the instance is a normalized
/// unicast-uniprior problem.
std::vector<Violation> validate(const IndexCodingProblem& p);

/// Throws ValidationError listing all violations, one per line.
void require_valid(const IndexCodingProblem& p);

/// Which coverage requirement split_to_single_unicast enforces. kDemandsOnly
/// still needs every message demanded (one row per message) but accepts
/// messages nobody knows, as arises after deleting side information.
enum class Coverage { kStrict, kDemandsOnly };

/// Row i demands message i; rows derived from one receiver share its prior.
struct SingleUnicastProblem {
  std::size_t n = 0;
  std::size_t group_count = 0;
  std::vector<std::vector<MessageId>> prior_of_row;
  std::vector<ReceiverId> row_group_of;
};

SingleUnicastProblem split_to_single_unicast(const IndexCodingProblem& p,
                                             Coverage coverage = Coverage::kStrict);

std::vector<std::size_t> demand_sizes(const IndexCodingProblem& p);
std::size_t max_demand_size(const IndexCodingProblem& p);

/// Receiver that demands each message (nullopt if none).
std::vector<std::optional<ReceiverId>> demander_of(const IndexCodingProblem& p);
/// Receiver that knows each message (nullopt if none); uniprior makes it unique.
std::vector<std::optional<ReceiverId>> knower_of(const IndexCodingProblem& p);

/// prod_k C(W_max, |W_k|) * |W_k|!, exactly. Requires a valid instance.
BigCount table_instance_count(const IndexCodingProblem& p);

/// Throws SizeGuardExceeded ("beta-budget") when the count exceeds budget.
void require_table_budget(const BigCount& beta, std::uint64_t budget);

/// Sum over messages of the out-degree in the side-information graph:
/// |A_k| * |W_k| summed over receivers. Log2 of the fitting-matrix count.
std::size_t free_bit_count(const IndexCodingProblem& p);

struct NormalizeResult {
  IndexCodingProblem problem;
  std::vector<MessageId> dropped;      // original ids, sorted
  std::vector<MessageId> original_id;  // new id -> original id
  std::vector<std::string> warnings;
};

/// Drops messages that are demanded nowhere or known nowhere and renumbers
/// the rest densely. Other rules are not repaired.
NormalizeResult normalize(const IndexCodingProblem& p);

/// Copy of p with `message` removed from the side information of `receiver`.
/// The result usually fails coverage; use Coverage::kDemandsOnly to split it.
IndexCodingProblem remove_side_information(const IndexCodingProblem& p, ReceiverId receiver,
                                           MessageId message);

}  // namespace minrank
