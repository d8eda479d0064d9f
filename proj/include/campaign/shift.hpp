#pragma once

#include "campaign/bribery.hpp"
#include "campaign/election.hpp"

namespace campaign {

/// Saturating total cost of a shift action.
Cost shift_cost(const ShiftCostProfile& costs, const ShiftAction& action);

/// Exhaustive minimum-cost shift bribery. Enumerates every shift vector with
/// 0 <= t_i < rank(p, v^i); throws when the enumeration would exceed the
/// desk-scale guard (1e7 actions).
BriberySolution brute_force_shift(const ShiftInstance& instance);

/// Thm-style polynomial solvers, one per rule.
BriberySolution solve_shift_bucklin_simplified(const ShiftInstance& instance);
BriberySolution solve_shift_fallback_simplified(const ShiftInstance& instance);
BriberySolution solve_shift_bucklin(const ShiftInstance& instance);
BriberySolution solve_shift_fallback(const ShiftInstance& instance);

/// Dispatch on instance.rule.
BriberySolution solve_shift(const ShiftInstance& instance);

/// True iff no componentwise-smaller distinct action still makes the
/// designated candidate a winner. Pre: `action` makes her a winner.
bool is_minimal_shift(const ShiftInstance& instance, const ShiftAction& action);

/// Componentwise reduction of a successful action to a minimal one.
ShiftAction minimalize_shift(const ShiftInstance& instance, const ShiftAction& action);

}  // namespace campaign
