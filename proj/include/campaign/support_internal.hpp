#pragma once

#include <vector>

#include "campaign/election.hpp"

namespace campaign::detail {

/// Fast success evaluator for push enumerations. Candidates that can never
/// reach a majority nor match the designated candidate's guaranteed approval
/// count (given the per-voter count ranges actually enumerated) are skipped.
class PushEval {
 public:
  PushEval(const Election& e, const RuleId& rule, const std::vector<int>& min_count,
           const std::vector<int>& max_count);

  /// True iff the designated candidate is a winner at these approval counts.
  bool designated_wins(const std::vector<int>& counts) const;

 private:
  bool outcome(const std::vector<int>& counts, int target) const;

  const Election* e_;
  RuleId rule_;
  int maj_;
  std::vector<std::vector<int>> pos_;
  std::vector<int> relevant_;
  mutable std::vector<int> scratch_;
};

}  // namespace campaign::detail
