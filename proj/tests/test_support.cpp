#include <doctest.h>

#include "campaign/instances.hpp"
#include "campaign/rng.hpp"
#include "campaign/support.hpp"
#include "testutil.hpp"

using namespace campaign;
using testutil::make_election;

namespace {

SupportInstance random_instance(std::uint64_t seed, const RuleId& rule, bool positive,
                                bool negative, int max_m = 4, int max_n = 5) {
  Rng rng(seed * 2029 + 3);
  int m = rng.uniform_int(2, max_m);
  int n = rng.uniform_int(1, max_n);
  Election e = gen_random(m, n, seed ^ 0xabc, std::nullopt, rng.uniform_int(0, m - 1));
  SupportCostProfile costs;
  if (positive)
    costs = random_one_sided_support_costs(e, true, seed + 5, 5, 10);
  else if (negative)
    costs = random_one_sided_support_costs(e, false, seed + 5, 5, 10);
  else
    costs = random_support_costs(e, seed + 5, 5, 10);
  return {std::move(e), std::move(costs), rule, std::nullopt};
}

void check_solution(const SupportInstance& inst, const BriberySolution& sol) {
  if (sol.cost.is_infinite()) return;
  CHECK(sol.certificate.contains(inst.election.designated));
  CHECK(support_cost(inst.election, inst.costs, sol.push()) == sol.cost);
}

RuleId support_rule(std::uint64_t seed) {
  switch (seed % 3) {
    case 0: return RuleId::spav();
    case 1: return RuleId::fallback();
    default: return RuleId::fallback_simplified();
  }
}

}  // namespace

TEST_CASE("support_cost adds per-voter values and saturates") {
  Election e = make_election(3, 0, {{{0, 1, 2}, 2}, {{1, 0, 2}, 1}, {{2, 1, 0}, 0}});
  SupportCostProfile costs = unit_support_costs(e);
  CHECK(support_cost(e, costs, PushAction{{0, 0, 0}}) == Cost(0));
  CHECK(support_cost(e, costs, PushAction{{1, -1, 0}}) == Cost(2));
  CHECK(support_cost(e, costs, PushAction{{1, -1, 3}}) == Cost(5));
  CHECK_THROWS_AS(support_cost(e, costs, PushAction{{5, 0, 0}}), std::invalid_argument);
  SupportCostProfile pos = one_sided_support_costs(e, true);
  CHECK(support_cost(e, pos, PushAction{{0, -1, 0}}).is_infinite());
  CHECK(pos.is_positive(e));
  CHECK_FALSE(pos.is_negative(e));
  CHECK(costs.is_unit(e));
}

TEST_CASE("support oracle: spav with empty approvals") {
  // All scores are zero, so p is already a co-winner.
  Election e = make_election(3, 0, {{{0, 1, 2}, 0}, {{0, 1, 2}, 0}, {{0, 1, 2}, 0}});
  SupportInstance inst{e, unit_support_costs(e), RuleId::spav(), std::nullopt};
  BriberySolution sol = brute_force_support(inst);
  CHECK(sol.cost == Cost(0));
  check_solution(inst, sol);

  // Once a rival holds one approval, p genuinely needs one push.
  Election f = make_election(3, 0, {{{1, 0, 2}, 1}, {{0, 1, 2}, 0}, {{0, 1, 2}, 0}});
  SupportInstance inst2{f, unit_support_costs(f), RuleId::spav(), std::nullopt};
  BriberySolution sol2 = brute_force_support(inst2);
  CHECK(sol2.cost == Cost(1));
  check_solution(inst2, sol2);
}

TEST_CASE("support oracle: infinite when nothing can move") {
  Election e = make_election(2, 1, {{{0, 1}, 1}, {{0, 1}, 1}, {{0, 1}, 1}});
  SupportCostProfile costs;
  costs.values.assign(3, {Cost::infinite(), Cost(0), Cost::infinite()});
  for (auto& row : costs.values) row[1] = Cost(0);
  SupportInstance inst{e, costs, RuleId::spav(), std::nullopt};
  CHECK(brute_force_support(inst).cost.is_infinite());
}

TEST_CASE("negative FPT solver matches the oracle") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    SupportInstance inst = random_instance(seed, support_rule(seed), false, true);
    BriberySolution slow = brute_force_support(inst);
    BriberySolution fast = solve_support_fpt(inst, 8);
    CAPTURE(seed);
    CAPTURE(rule_name(inst.rule));
    CHECK(fast.cost == slow.cost);
    check_solution(inst, fast);
  }
}

TEST_CASE("positive FPT solver matches the oracle") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    SupportInstance inst = random_instance(seed, support_rule(seed), true, false);
    BriberySolution slow = brute_force_support(inst);
    BriberySolution fast = solve_support_fpt(inst, 8, 1, 200);
    CAPTURE(seed);
    CAPTURE(rule_name(inst.rule));
    CHECK(fast.cost == slow.cost);
    check_solution(inst, fast);
  }
}

TEST_CASE("sweep caps the total change") {
  // Solvable only with two units of change.
  Election e = make_election(3, 0,
                             {{{1, 0, 2}, 1}, {{1, 0, 2}, 0}, {{2, 0, 1}, 0}});
  SupportInstance inst{e, one_sided_support_costs(e, true), RuleId::spav(), std::nullopt};
  BriberySolution full = solve_support_fpt(inst, 6);
  BriberySolution tight = solve_support_fpt(inst, 2);
  CHECK(full.cost == tight.cost);
  BriberySolution zero = solve_support_fpt(inst, 0);
  CHECK(zero.cost.is_infinite());
}

TEST_CASE("mixed-sign profiles are rejected by the FPT dispatcher") {
  Election e = make_election(3, 0, {{{1, 0, 2}, 1}, {{2, 1, 0}, 2}});
  SupportInstance inst{e, unit_support_costs(e), RuleId::spav(), std::nullopt};
  CHECK_THROWS_AS(solve_support_fpt(inst, 4), std::invalid_argument);
  CHECK_THROWS_AS(solve_support_negative_fpt(inst, 4), std::invalid_argument);
  CHECK_THROWS_AS(solve_support_positive_fpt(inst, 4, 1, 10), std::invalid_argument);
}

TEST_CASE("parameters: already winning means all zeros") {
  Election e = make_election(2, 0, {{{0, 1}, 1}});
  SupportInstance inst{e, unit_support_costs(e), RuleId::spav(), std::nullopt};
  auto stats = compute_parameters(inst);
  REQUIRE(stats.has_value());
  CHECK(stats->alpha == 0);
  CHECK(stats->beta == 0);
  CHECK(stats->beta_prime == 0);
}

TEST_CASE("parameter invariants hold on random instances") {
  int feasible = 0;
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    SupportInstance inst = random_instance(seed, support_rule(seed), false, false, 3, 4);
    auto stats = compute_parameters(inst);
    if (!stats) continue;
    ++feasible;
    CHECK(stats->beta >= stats->beta_prime);
    CHECK(stats->beta >= stats->alpha);
  }
  CHECK(feasible > 0);
}

TEST_CASE("positive minimal briberies set counts to the rank of p") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    SupportInstance inst = random_instance(seed, support_rule(seed), true, false);
    BriberySolution sol = solve_support_fpt(inst, 8, 1, 200);
    if (sol.cost.is_infinite()) continue;
    PushAction minimal = minimalize_push(inst, sol.push());
    for (int v = 0; v < inst.election.n(); ++v) {
      if (minimal.deltas[v] == 0) continue;
      int count = inst.election.voters[v].approval_count + minimal.deltas[v];
      CHECK(count == rank(inst.election, inst.election.designated, v));
    }
  }
}

TEST_CASE("is_minimal_push spots removable pushes") {
  Election e = make_election(2, 0, {{{0, 1}, 1}, {{1, 0}, 0}});
  SupportCostProfile costs;
  costs.values = {{Cost(0), Cost(0), Cost(0)}, {Cost(0), Cost(0), Cost(0)}};
  costs.values[0][0] = Cost(0);
  SupportInstance inst{e, costs, RuleId::spav(), std::nullopt};
  CHECK(is_minimal_push(inst, PushAction{{0, 0}}));
  CHECK_FALSE(is_minimal_push(inst, PushAction{{1, 0}}));
  CHECK(minimalize_push(inst, PushAction{{1, 0}}).deltas == std::vector<int>{0, 0});
}
