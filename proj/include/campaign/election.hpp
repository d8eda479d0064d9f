#pragma once

#include <optional>
#include <string>
#include <vector>

#include "campaign/cost.hpp"

namespace campaign {

/// One voter: a full preference permutation (index 0 = most preferred) over
/// candidates 0..m-1, plus the number of top candidates she approves of.
struct Voter {
  std::vector<int> preference;
  int approval_count = 0;
};

/// Candidates are dense indices 0..m-1; `designated` is the preferred
/// candidate p (or the despised candidate d for destructive problems).
struct Election {
  int num_candidates = 0;
  int designated = 0;
  std::vector<Voter> voters;

  int m() const { return num_candidates; }
  int n() const { return static_cast<int>(voters.size()); }
  int majority() const { return n() / 2 + 1; }
};

/// Throws std::invalid_argument describing the first violated invariant.
void validate(const Election& e);

enum class RuleKind {
  k_approval,
  bucklin,
  bucklin_simplified,
  spav,
  fallback,
  fallback_simplified,
};

struct RuleId {
  RuleKind kind = RuleKind::bucklin;
  int k = 1;  // round index, k-Approval only

  static RuleId k_approval(int k) { return {RuleKind::k_approval, k}; }
  static RuleId bucklin() { return {RuleKind::bucklin, 0}; }
  static RuleId bucklin_simplified() { return {RuleKind::bucklin_simplified, 0}; }
  static RuleId spav() { return {RuleKind::spav, 0}; }
  static RuleId fallback() { return {RuleKind::fallback, 0}; }
  static RuleId fallback_simplified() { return {RuleKind::fallback_simplified, 0}; }

  bool uses_rounds() const {
    return kind != RuleKind::spav && kind != RuleKind::k_approval;
  }
  bool is_fallback() const {
    return kind == RuleKind::fallback || kind == RuleKind::fallback_simplified;
  }
  friend bool operator==(const RuleId& a, const RuleId& b) {
    return a.kind == b.kind && (a.kind != RuleKind::k_approval || a.k == b.k);
  }
};

std::string rule_name(const RuleId& rule);
std::optional<RuleId> rule_from_name(const std::string& name);

/// Winner set plus the score vector that decided it. `winning_round` is
/// absent for SP-AV, k-Approval, and for Fallback elections decided by
/// approval count (the "extra round").
struct WinnerReport {
  std::vector<int> winners;  // ascending candidate indices
  std::optional<int> winning_round;
  std::vector<int> scores;

  bool contains(int c) const;
};

/// Per-voter upward shifts of the designated candidate.
struct ShiftAction {
  std::vector<int> shifts;
};

/// Per-voter signed approval-count changes.
struct PushAction {
  std::vector<int> deltas;
};

/// 1-based position of candidate c in voter v's preference order.
int rank(const Election& e, int candidate, int voter);

/// Number of voters ranking each candidate within their top k positions.
/// Ignores approval counts entirely.
std::vector<int> k_approval_scores(const Election& e, int k);

/// Approval score: voter i contributes to her top approval_count candidates.
std::vector<int> approval_scores(const Election& e);

/// Truncated k-approval score used by Fallback: candidate must be ranked in
/// the top k positions *and* approved.
std::vector<int> truncated_round_scores(const Election& e, int k);

WinnerReport winners(const Election& e, const RuleId& rule);

/// Moves the designated candidate up by action.shifts[i] positions in vote i
/// (clamped at the top); approval counts are unchanged.
Election apply_shift(const Election& e, const ShiftAction& action);

/// Sets voter i's approval count to approval_count + deltas[i], clamped to
/// [0, m]; preferences are unchanged.
Election apply_push(const Election& e, const PushAction& action);

}  // namespace campaign
