#include <doctest.h>

#include "campaign/instances.hpp"
#include "campaign/rng.hpp"
#include "campaign/support.hpp"
#include "testutil.hpp"

using namespace campaign;
using testutil::make_election;

namespace {

RuleId destructive_rule(std::uint64_t seed) {
  switch (seed % 3) {
    case 0: return RuleId::spav();
    case 1: return RuleId::fallback();
    default: return RuleId::fallback_simplified();
  }
}

}  // namespace

TEST_CASE("zero action when the despised candidate already loses") {
  Election e = make_election(2, 1, {{{0, 1}, 1}});
  BriberySolution sol = solve_destructive_support(e, unit_support_costs(e), RuleId::spav());
  CHECK(sol.cost == Cost(0));
  CHECK_FALSE(sol.certificate.contains(1));
}

TEST_CASE("spav two-voter example needs both a push and a retraction") {
  // d=0 approved by voter 0; challenger 1 approved by nobody.
  Election e = make_election(2, 0, {{{0, 1}, 1}, {{1, 0}, 0}});
  SupportCostProfile costs = unit_support_costs(e);
  BriberySolution sol = solve_destructive_support(e, costs, RuleId::spav());
  SupportInstance inst{e, costs, RuleId::spav(), std::nullopt};
  BriberySolution oracle = brute_force_destructive(inst);
  CHECK(sol.cost == oracle.cost);
  CHECK_FALSE(sol.certificate.contains(0));
}

TEST_CASE("destructive DP matches the oracle across rules") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed * 31 + 11);
    int m = rng.uniform_int(2, 4);
    int n = rng.uniform_int(1, 5);
    Election e = gen_random(m, n, seed ^ 0xd00d, std::nullopt, rng.uniform_int(0, m - 1));
    SupportCostProfile costs = random_support_costs(e, seed + 77, 5, 10);
    RuleId rule = destructive_rule(seed);
    SupportInstance inst{e, costs, rule, std::nullopt};
    BriberySolution fast = solve_destructive_support(e, costs, rule);
    BriberySolution slow = brute_force_destructive(inst);
    CAPTURE(seed);
    CAPTURE(rule_name(rule));
    CHECK(fast.cost == slow.cost);
    if (!fast.cost.is_infinite()) {
      CHECK_FALSE(fast.certificate.contains(e.designated));
      CHECK(support_cost(e, costs, fast.push()) == fast.cost);
    }
  }
}

TEST_CASE("destructive rejects rules without approval semantics") {
  Election e = make_election(2, 0, {{{0, 1}, 1}});
  CHECK_THROWS_AS(solve_destructive_support(e, unit_support_costs(e), RuleId::bucklin()),
                  std::invalid_argument);
}
