#include <doctest.h>

#include "campaign/instances.hpp"
#include "campaign/rng.hpp"
#include "campaign/shift.hpp"
#include "testutil.hpp"

using namespace campaign;
using testutil::make_election;

namespace {

ShiftInstance random_instance(std::uint64_t seed, const RuleId& rule, int max_m = 4,
                              int max_n = 5) {
  Rng rng(seed * 1009 + 7);
  int m = rng.uniform_int(2, max_m);
  int n = rng.uniform_int(1, max_n);
  Election e = gen_random(m, n, seed, std::nullopt, rng.uniform_int(0, m - 1));
  ShiftCostProfile costs = random_shift_costs(e, seed ^ 0x5555, 5, 12);
  return {std::move(e), std::move(costs), rule};
}

void check_solution(const ShiftInstance& inst, const BriberySolution& sol) {
  if (sol.cost.is_infinite()) return;
  CHECK(sol.certificate.contains(inst.election.designated));
  CHECK(shift_cost(inst.costs, sol.shift()) == sol.cost);
}

}  // namespace

TEST_CASE("shift_cost saturates and checks dimensions") {
  Election e = make_election(3, 0, {{{1, 0, 2}, 1}, {{0, 1, 2}, 1}});
  ShiftCostProfile costs;
  costs.rows = {{Cost(0), Cost(2), Cost(5), Cost(5)},
                {Cost(0), Cost::infinite(), Cost::infinite(), Cost::infinite()}};
  CHECK(shift_cost(costs, ShiftAction{{0, 0}}) == Cost(0));
  CHECK(shift_cost(costs, ShiftAction{{2, 0}}) == Cost(5));
  CHECK(shift_cost(costs, ShiftAction{{0, 1}}).is_infinite());
  CHECK_THROWS_AS(shift_cost(costs, ShiftAction{{0}}), std::invalid_argument);
}

TEST_CASE("oracle returns zero action when p already wins") {
  Election e = make_election(3, 0, {{{0, 1, 2}, 3}});
  ShiftInstance inst{e, unit_shift_costs(e), RuleId::bucklin()};
  BriberySolution sol = brute_force_shift(inst);
  CHECK(sol.cost == Cost(0));
  CHECK(sol.shift().shifts == std::vector<int>{0});
}

TEST_CASE("oracle on the three-voter majority example") {
  Election e = make_election(3, 1,
                             {{{0, 1, 2}, 3}, {{0, 1, 2}, 3}, {{0, 1, 2}, 3}});
  ShiftInstance inst{e, unit_shift_costs(e), RuleId::bucklin_simplified()};
  // p = 1 sits second everywhere; majority in round 1 needs 2 shifts.
  BriberySolution sol = brute_force_shift(inst);
  CHECK(sol.cost == Cost(2));
}

TEST_CASE("oracle reports infinite cost when every move is forbidden") {
  Election e = make_election(2, 1, {{{0, 1}, 2}, {{0, 1}, 2}, {{0, 1}, 2}});
  ShiftCostProfile costs;
  costs.rows.assign(3, {Cost(0), Cost::infinite(), Cost::infinite()});
  ShiftInstance inst{e, costs, RuleId::bucklin()};
  CHECK(brute_force_shift(inst).cost.is_infinite());
}

TEST_CASE("simplified Bucklin solver matches the oracle") {
  for (std::uint64_t seed = 0; seed < 160; ++seed) {
    ShiftInstance inst = random_instance(seed, RuleId::bucklin_simplified());
    BriberySolution fast = solve_shift_bucklin_simplified(inst);
    BriberySolution slow = brute_force_shift(inst);
    CAPTURE(seed);
    CHECK(fast.cost == slow.cost);
    check_solution(inst, fast);
  }
}

TEST_CASE("classic Bucklin solver matches the oracle") {
  for (std::uint64_t seed = 0; seed < 160; ++seed) {
    ShiftInstance inst = random_instance(seed, RuleId::bucklin());
    BriberySolution fast = solve_shift_bucklin(inst);
    BriberySolution slow = brute_force_shift(inst);
    CAPTURE(seed);
    CHECK(fast.cost == slow.cost);
    check_solution(inst, fast);
  }
}

TEST_CASE("simplified Fallback solver matches the oracle") {
  for (std::uint64_t seed = 0; seed < 160; ++seed) {
    ShiftInstance inst = random_instance(seed, RuleId::fallback_simplified());
    BriberySolution fast = solve_shift_fallback_simplified(inst);
    BriberySolution slow = brute_force_shift(inst);
    CAPTURE(seed);
    CHECK(fast.cost == slow.cost);
    check_solution(inst, fast);
  }
}

TEST_CASE("classic Fallback solver matches the oracle") {
  for (std::uint64_t seed = 0; seed < 160; ++seed) {
    ShiftInstance inst = random_instance(seed, RuleId::fallback());
    BriberySolution fast = solve_shift_fallback(inst);
    BriberySolution slow = brute_force_shift(inst);
    CAPTURE(seed);
    CHECK(fast.cost == slow.cost);
    check_solution(inst, fast);
  }
}

TEST_CASE("fallback exploits candidates dropping out of approval") {
  // Voter 0: c=0 occupies the approval boundary; shifting p past it removes
  // 0's approval entirely, which classic Bucklin machinery alone undervalues.
  Election e = make_election(3, 2,
                             {{{0, 2, 1}, 1}, {{0, 1, 2}, 2}, {{2, 0, 1}, 1}});
  ShiftInstance inst{e, unit_shift_costs(e), RuleId::fallback()};
  BriberySolution fast = solve_shift_fallback(inst);
  BriberySolution slow = brute_force_shift(inst);
  CHECK(fast.cost == slow.cost);
}

TEST_CASE("lowering a cost function never raises the optimum") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    ShiftInstance inst = random_instance(seed, RuleId::bucklin_simplified());
    ShiftInstance cheaper = inst;
    Rng rng(seed + 4242);
    for (auto& row : cheaper.costs.rows)
      for (size_t t = 1; t < row.size(); ++t) {
        if (row[t].is_infinite()) {
          if (rng.coin()) row[t] = row[t - 1] + Cost(rng.uniform_int(0, 3));
        } else if (row[t].value() > 0 && rng.coin()) {
          row[t] = std::max(row[t - 1], Cost(row[t].value() - 1));
        }
      }
    CHECK_FALSE(solve_shift_bucklin_simplified(cheaper).cost >
                solve_shift_bucklin_simplified(inst).cost);
  }
}

TEST_CASE("minimal winning rounds stay within the theorem's window") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    for (bool simplified : {true, false}) {
      RuleId rule = simplified ? RuleId::bucklin_simplified() : RuleId::bucklin();
      ShiftInstance inst = random_instance(seed, rule);
      WinnerReport before = winners(inst.election, rule);
      if (before.contains(inst.election.designated)) continue;
      BriberySolution sol = solve_shift(inst);
      if (sol.cost.is_infinite()) continue;
      ShiftAction minimal = minimalize_shift(inst, sol.shift());
      WinnerReport after = winners(apply_shift(inst.election, minimal), rule);
      REQUIRE(after.winning_round.has_value());
      int k = *before.winning_round;
      CAPTURE(seed);
      CAPTURE(simplified);
      if (simplified) {
        CHECK(*after.winning_round >= k);
        CHECK(*after.winning_round <= k + 1);
      } else {
        CHECK(*after.winning_round >= k - 1);
        CHECK(*after.winning_round <= k + 1);
      }
    }
  }
}

TEST_CASE("is_minimal_shift flags redundant zero-cost shifts") {
  Election e = make_election(3, 0, {{{0, 1, 2}, 3}, {{1, 0, 2}, 3}});
  ShiftCostProfile costs;
  costs.rows = {{Cost(0), Cost(0), Cost(0), Cost(0)}, {Cost(0), Cost(0), Cost(0), Cost(0)}};
  ShiftInstance inst{e, costs, RuleId::bucklin_simplified()};
  CHECK(is_minimal_shift(inst, ShiftAction{{0, 0}}));
  CHECK_FALSE(is_minimal_shift(inst, ShiftAction{{0, 1}}));
  CHECK(minimalize_shift(inst, ShiftAction{{0, 1}}).shifts == std::vector<int>{0, 0});
  Election f = make_election(2, 1, {{{0, 1}, 2}});
  ShiftInstance bad{f, unit_shift_costs(f), RuleId::bucklin()};
  CHECK_THROWS_AS(is_minimal_shift(bad, ShiftAction{{0}}), std::invalid_argument);
}
