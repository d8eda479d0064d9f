"""Campaign-management (bribery) solvers for approval-driven voting rules.

Thin wrapper around the C++ core: elections, winner determination for
Bucklin / Fallback / SP-AV / k-Approval, shift- and support-bribery solvers,
instance generators, and the instance-file parser.
"""

from campaign_bribery._core import (  # noqa: F401
    Election,
    winners,
    rank,
    k_approval_scores,
    approval_scores,
    single_peaked_axis,
    apply_shift,
    apply_push,
    solve_shift,
    brute_force_shift,
    solve_support,
    brute_force_support,
    solve_destructive,
    approx_spav_single_peaked,
    compute_parameters,
    gen_random,
    gen_single_peaked,
    unit_support_costs,
    unit_shift_costs,
    parse_instance,
    roundtrip_instance,
)

__all__ = [
    "Election",
    "winners",
    "rank",
    "k_approval_scores",
    "approval_scores",
    "single_peaked_axis",
    "apply_shift",
    "apply_push",
    "solve_shift",
    "brute_force_shift",
    "solve_support",
    "brute_force_support",
    "solve_destructive",
    "approx_spav_single_peaked",
    "compute_parameters",
    "gen_random",
    "gen_single_peaked",
    "unit_support_costs",
    "unit_shift_costs",
    "parse_instance",
    "roundtrip_instance",
]
