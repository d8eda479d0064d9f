#pragma once

#include <cstdint>
#include <optional>

#include "campaign/bribery.hpp"
#include "campaign/election.hpp"

namespace campaign {

/// Saturating total cost of a push action. Throws when some delta is
/// outside a voter's cost-function domain.
Cost support_cost(const Election& e, const SupportCostProfile& costs, const PushAction& action);

/// Exhaustive minimum-cost support bribery. Enumerates per-voter deltas with
/// finite cost; throws when the enumeration exceeds the desk-scale guard.
BriberySolution brute_force_support(const SupportInstance& instance);

/// Exhaustive destructive oracle: cheapest push action after which the
/// designated (despised) candidate is not a winner.
BriberySolution brute_force_destructive(const SupportInstance& instance);

/// alpha / beta / beta' over all minimal optimal briberies.
struct ParamStats {
  int alpha = 0;
  int beta = 0;
  int beta_prime = 0;
};

/// nullopt when no finite-cost successful bribery exists. Enumerates every
/// optimal action (same guard as the oracle), filters to the minimal ones.
std::optional<ParamStats> compute_parameters(const SupportInstance& instance);

/// True iff no componentwise-toward-zero distinct action still succeeds.
bool is_minimal_push(const SupportInstance& instance, const PushAction& action);

/// Componentwise-toward-zero reduction of a successful action to a minimal one.
PushAction minimalize_push(const SupportInstance& instance, const PushAction& action);

/// Bounded-search-tree solver for all-negative cost functions (approval
/// counts may only decrease). Returns the cheapest successful bribery with
/// total change at most beta_prime; infinite cost when none exists in that
/// range. Rules: SP-AV, Fallback, simplified Fallback.
BriberySolution solve_support_negative_fpt(const SupportInstance& instance, int beta_prime);

/// Color-coding solver for all-positive cost functions. Deterministic given
/// (seed, trials); one-sided error: any finite result is a verified success.
/// Falls back to exact subset search when the instance is small enough.
BriberySolution solve_support_positive_fpt(const SupportInstance& instance, int beta_prime,
                                           std::uint64_t seed, int trials);

/// Tries beta' = 0, 1, ..., max_beta_prime with the matching one-sided
/// solver and returns the cheapest solution found. Throws on mixed-sign
/// cost profiles.
BriberySolution solve_support_fpt(const SupportInstance& instance, int max_beta_prime,
                                  std::uint64_t seed = 1, int trials = 0);

/// (1+eps)-approximation for SP-AV support bribery on single-peaked
/// elections (Thm-8 style guess / color-code / match / sweep machinery).
/// epsilon is eps_num/eps_den > 0. Any finite result is a verified success
/// of cost at most (1+eps)*budget.
BriberySolution approx_spav_single_peaked(const SupportInstance& instance, int eps_num,
                                          int eps_den, Cost budget, int beta_prime,
                                          std::uint64_t seed, int trials);

/// Appendix dynamic programs: cheapest push action preventing the despised
/// candidate from winning. Rules: SP-AV, Fallback, simplified Fallback.
BriberySolution solve_destructive_support(const Election& election,
                                          const SupportCostProfile& costs, const RuleId& rule);

}  // namespace campaign
