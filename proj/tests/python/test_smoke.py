"""Smoke tests for the python bindings."""

import campaign_bribery as cb


def test_winners_bucklin_example():
    e = cb.Election(3, 0, [([0, 1, 2], 3), ([1, 0, 2], 3), ([2, 0, 1], 3)])
    simple = cb.winners(e, "bucklin-simplified")
    assert simple["winning_round"] == 2
    assert simple["winners"] == [0, 1]
    classic = cb.winners(e, "bucklin")
    assert classic["winners"] == [0]


def test_axis_detection():
    e = cb.Election(3, 0, [([0, 1, 2], 1), ([2, 1, 0], 1)])
    axis = cb.single_peaked_axis(e)
    assert axis is not None and axis[1] == 1
    cyc = cb.Election(3, 0, [([0, 1, 2], 1), ([1, 2, 0], 1), ([2, 0, 1], 1)])
    assert cb.single_peaked_axis(cyc) is None


def test_shift_solver_matches_oracle():
    e = cb.gen_random(4, 4, seed=7)
    costs = cb.unit_shift_costs(e)
    fast = cb.solve_shift(e, costs, "bucklin")
    slow = cb.brute_force_shift(e, costs, "bucklin")
    assert fast["cost"] == slow["cost"]


def test_support_solver_and_apply_push():
    e = cb.Election(3, 0, [([1, 0, 2], 1), ([1, 0, 2], 0), ([2, 0, 1], 0)])
    costs = [[-1 if c < ell else c - ell for c in range(4)]
             for ell in (1, 0, 0)]
    sol = cb.solve_support(e, costs, "spav", max_beta_prime=4)
    assert sol["cost"] is not None
    pushed = cb.apply_push(e, sol["deltas"])
    assert 0 in cb.winners(pushed, "spav")["winners"]


def test_destructive_and_parameters():
    e = cb.Election(2, 0, [([0, 1], 1), ([1, 0], 0)])
    costs = cb.unit_support_costs(e)
    sol = cb.solve_destructive(e, costs, "spav")
    assert sol["cost"] is not None
    assert 0 not in sol["certificate"]["winners"]
    stats = cb.compute_parameters(e, costs, "spav")
    assert stats is not None and stats["beta"] >= stats["beta_prime"]


def test_instance_roundtrip():
    text = "election 2 1\nrule spav\ndesignated 0\nvote: 0 1 | 1\n"
    assert cb.roundtrip_instance(text) == text
    parsed = cb.parse_instance(text)
    assert parsed["rule"] == "spav"
