#include "minrank/problem.hpp"

#include <algorithm>
#include <sstream>

#include "minrank/errors.hpp"

namespace minrank {

namespace {

std::string msg(MessageId m) { return "x_" + std::to_string(m + 1); }
std::string rcv(ReceiverId k) { return "D_" + std::to_string(k + 1); }

BigCount factorial(std::size_t k) {
  BigCount f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

BigCount binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  BigCount c = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

// Per message, the receivers listing it in the chosen field.
std::vector<std::vector<ReceiverId>> owners(const IndexCodingProblem& p, bool wants) {
  std::vector<std::vector<ReceiverId>> out(p.n);
  for (ReceiverId k = 0; k < p.receivers.size(); ++k) {
    for (MessageId m : wants ? p.receivers[k].wants : p.receivers[k].has) {
      if (m < p.n) out[m].push_back(k);
    }
  }
  return out;
}

std::string join_receivers(const std::vector<ReceiverId>& ks) {
  std::string s;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (i) s += ", ";
    s += rcv(ks[i]);
  }
  return s;
}

}  // namespace

IndexCodingProblem make_problem(
    std::size_t n,
    const std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>& receivers) {
  IndexCodingProblem p;
  p.n = n;
  for (const auto& [wants, has] : receivers) {
    Receiver r;
    for (std::size_t id : wants) r.wants.push_back(id - 1);
    for (std::size_t id : has) r.has.push_back(id - 1);
    std::sort(r.wants.begin(), r.wants.end());
    std::sort(r.has.begin(), r.has.end());
    p.receivers.push_back(std::move(r));
  }
  return p;
}

std::string_view rule_name(Rule rule) {
  switch (rule) {
    case Rule::kUnicast:
      return "UnicastViolation";
    case Rule::kUniprior:
      return "UnipriorViolation";
    case Rule::kNotDemanded:
    case Rule::kNotKnown:
      return "CoverageViolation";
    case Rule::kSelfKnowledge:
      return "SelfKnowledgeViolation";
    case Rule::kMessageRange:
      return "MessageRangeViolation";
  }
  return "UnknownViolation";
}

std::vector<Violation> validate(const IndexCodingProblem& p) {
  std::vector<Violation> out;

  if (p.n == 0) out.push_back({Rule::kNotDemanded, "instance has no messages"});

  for (ReceiverId k = 0; k < p.receivers.size(); ++k) {
    for (const auto* list : {&p.receivers[k].wants, &p.receivers[k].has}) {
      for (MessageId m : *list) {
        if (m >= p.n) {
          out.push_back({Rule::kMessageRange, rcv(k) + " lists message id " + std::to_string(m + 1) +
                                                  " outside [1, " + std::to_string(p.n) + "]"});
        }
      }
    }
  }

  const auto demanders = owners(p, true);
  const auto knowers = owners(p, false);

  for (MessageId m = 0; m < p.n; ++m) {
    if (demanders[m].size() > 1) {
      out.push_back({Rule::kUnicast, msg(m) + " demanded by " + join_receivers(demanders[m])});
    }
  }
  for (MessageId m = 0; m < p.n; ++m) {
    if (knowers[m].size() > 1) {
      out.push_back({Rule::kUniprior, msg(m) + " known by " + join_receivers(knowers[m])});
    }
  }
  for (ReceiverId k = 0; k < p.receivers.size(); ++k) {
    const auto& r = p.receivers[k];
    for (MessageId m : r.wants) {
      if (std::binary_search(r.has.begin(), r.has.end(), m)) {
        out.push_back({Rule::kSelfKnowledge, rcv(k) + " both demands and knows " + msg(m)});
      }
    }
  }
  for (MessageId m = 0; m < p.n; ++m) {
    if (demanders[m].empty()) out.push_back({Rule::kNotDemanded, msg(m) + " is demanded by no receiver"});
    if (knowers[m].empty()) out.push_back({Rule::kNotKnown, msg(m) + " is known by no receiver"});
  }
  return out;
}

namespace {

void throw_if_any(const std::vector<Violation>& violations) {
  if (violations.empty()) return;
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << '\n';
    os << rule_name(violations[i].rule) << ": " << violations[i].detail;
  }
  throw ValidationError(os.str());
}

}  // namespace

void require_valid(const IndexCodingProblem& p) { throw_if_any(validate(p)); }

SingleUnicastProblem split_to_single_unicast(const IndexCodingProblem& p, Coverage coverage) {
  if (coverage == Coverage::kStrict) {
    require_valid(p);
  } else {
    auto violations = validate(p);
    std::erase_if(violations, [](const Violation& v) { return v.rule == Rule::kNotKnown; });
    throw_if_any(violations);
  }

  SingleUnicastProblem s;
  s.n = p.n;
  s.group_count = p.receivers.size();
  s.prior_of_row.resize(p.n);
  s.row_group_of.resize(p.n);
  for (ReceiverId k = 0; k < p.receivers.size(); ++k) {
    for (MessageId m : p.receivers[k].wants) {
      s.prior_of_row[m] = p.receivers[k].has;
      s.row_group_of[m] = k;
    }
  }
  return s;
}

std::vector<std::size_t> demand_sizes(const IndexCodingProblem& p) {
  std::vector<std::size_t> out;
  out.reserve(p.receivers.size());
  for (const auto& r : p.receivers) out.push_back(r.wants.size());
  return out;
}

std::size_t max_demand_size(const IndexCodingProblem& p) {
  std::size_t w = 0;
  for (const auto& r : p.receivers) w = std::max(w, r.wants.size());
  return w;
}

std::vector<std::optional<ReceiverId>> demander_of(const IndexCodingProblem& p) {
  std::vector<std::optional<ReceiverId>> out(p.n);
  for (ReceiverId k = 0; k < p.receivers.size(); ++k) {
    for (MessageId m : p.receivers[k].wants) {
      if (m < p.n) out[m] = k;
    }
  }
  return out;
}

std::vector<std::optional<ReceiverId>> knower_of(const IndexCodingProblem& p) {
  std::vector<std::optional<ReceiverId>> out(p.n);
  for (ReceiverId k = 0; k < p.receivers.size(); ++k) {
    for (MessageId m : p.receivers[k].has) {
      if (m < p.n) out[m] = k;
    }
  }
  return out;
}

BigCount table_instance_count(const IndexCodingProblem& p) {
  require_valid(p);
  const std::size_t w_max = max_demand_size(p);
  BigCount beta = 1;
  for (const auto& r : p.receivers) {
    beta *= binomial(w_max, r.wants.size()) * factorial(r.wants.size());
  }
  return beta;
}

void require_table_budget(const BigCount& beta, std::uint64_t budget) {
  if (beta > budget) {
    throw SizeGuardExceeded("beta-budget", "table enumeration needs " + beta.str() +
                                               " tables, above the budget of " +
                                               std::to_string(budget) + "; raise --beta-budget");
  }
}

std::size_t free_bit_count(const IndexCodingProblem& p) {
  std::size_t total = 0;
  for (const auto& r : p.receivers) total += r.has.size() * r.wants.size();
  return total;
}

NormalizeResult normalize(const IndexCodingProblem& p) {
  NormalizeResult out;
  const auto demanders = owners(p, true);
  const auto knowers = owners(p, false);

  std::vector<std::optional<MessageId>> new_id(p.n);
  for (MessageId m = 0; m < p.n; ++m) {
    if (demanders[m].empty()) {
      out.dropped.push_back(m);
      out.warnings.push_back("dropping " + msg(m) + ": demanded by no receiver");
    } else if (knowers[m].empty()) {
      out.dropped.push_back(m);
      out.warnings.push_back("dropping " + msg(m) + ": known by no receiver, send it uncoded");
    } else {
      new_id[m] = out.original_id.size();
      out.original_id.push_back(m);
    }
  }

  out.problem.n = out.original_id.size();
  for (const auto& r : p.receivers) {
    Receiver nr;
    for (MessageId m : r.wants) {
      if (m < p.n && new_id[m]) nr.wants.push_back(*new_id[m]);
    }
    for (MessageId m : r.has) {
      if (m < p.n && new_id[m]) nr.has.push_back(*new_id[m]);
    }
    out.problem.receivers.push_back(std::move(nr));
  }
  return out;
}

IndexCodingProblem remove_side_information(const IndexCodingProblem& p, ReceiverId receiver,
                                           MessageId message) {
  if (receiver >= p.receivers.size()) throw std::out_of_range("receiver index out of range");
  IndexCodingProblem out = p;
  auto& has = out.receivers[receiver].has;
  const auto it = std::find(has.begin(), has.end(), message);
  if (it == has.end()) {
    throw std::invalid_argument(rcv(receiver) + " does not know " + msg(message));
  }
  has.erase(it);
  return out;
}

}  // namespace minrank
