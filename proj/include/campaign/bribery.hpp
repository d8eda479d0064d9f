#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "campaign/cost.hpp"
#include "campaign/election.hpp"

namespace campaign {

/// Per-voter shift-bribery cost function pi^i, given by its values at
/// 0..m: pi(0) = 0 and pi is non-decreasing.
struct ShiftCostProfile {
  std::vector<std::vector<Cost>> rows;  // rows[i][t], t = 0..m

  int n() const { return static_cast<int>(rows.size()); }
};

/// Throws std::invalid_argument on a malformed profile for the election.
void validate(const Election& e, const ShiftCostProfile& costs);

struct ShiftInstance {
  Election election;
  ShiftCostProfile costs;
  RuleId rule;
};

/// Per-voter support-bribery cost function sigma^i over the approval-count
/// changes [-l^i, m-l^i], stored by resulting count: values[i][c] is the
/// cost of moving voter i's approval count to c, c = 0..m. values[i][l^i]
/// must be 0 and the function is non-decreasing away from l^i.
struct SupportCostProfile {
  std::vector<std::vector<Cost>> values;

  int n() const { return static_cast<int>(values.size()); }
  Cost at(const Election& e, int voter, int delta) const;

  /// sigma(k) = +inf for all k < 0 in every vote.
  bool is_positive(const Election& e) const;
  /// sigma(k) = +inf for all k > 0 in every vote.
  bool is_negative(const Election& e) const;
  /// sigma(k) = |k| everywhere.
  bool is_unit(const Election& e) const;
};

void validate(const Election& e, const SupportCostProfile& costs);

struct SupportInstance {
  Election election;
  SupportCostProfile costs;
  RuleId rule;
  std::optional<Cost> budget;
};

/// Outcome of a bribery solver: the action, its total cost, and the winner
/// report of the post-action election. For an infinite cost the action is
/// all zeros and the certificate is the untouched election's report.
struct BriberySolution {
  std::variant<ShiftAction, PushAction> action;
  Cost cost;
  WinnerReport certificate;

  const ShiftAction& shift() const { return std::get<ShiftAction>(action); }
  const PushAction& push() const { return std::get<PushAction>(action); }
};

}  // namespace campaign
