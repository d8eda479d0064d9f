#include <doctest.h>

#include "campaign/instances.hpp"
#include "campaign/rng.hpp"
#include "campaign/support.hpp"
#include "testutil.hpp"

using namespace campaign;
using testutil::make_election;

namespace {

bool within_ratio(Cost cost, Cost budget, int num, int den) {
  return static_cast<long long>(cost.value()) * den <=
         static_cast<long long>(budget.value()) * (den + num);
}

}  // namespace

TEST_CASE("approx returns zero for an already-winning candidate") {
  Election e = make_election(3, 0, {{{0, 1, 2}, 1}});
  SupportInstance inst{e, unit_support_costs(e), RuleId::spav(), Cost(5)};
  BriberySolution sol = approx_spav_single_peaked(inst, 1, 4, Cost(5), 3, 1, 0);
  CHECK(sol.cost == Cost(0));
}

TEST_CASE("approx rejects bad inputs") {
  Election cyc = make_election(3, 0, {{{0, 1, 2}, 1}, {{1, 2, 0}, 1}, {{2, 0, 1}, 1}});
  SupportInstance inst{cyc, unit_support_costs(cyc), RuleId::spav(), Cost(5)};
  CHECK_THROWS_AS(approx_spav_single_peaked(inst, 1, 4, Cost(5), 3, 1, 0),
                  std::invalid_argument);
  Election sp = make_election(2, 0, {{{1, 0}, 1}});
  SupportInstance bad_rule{sp, unit_support_costs(sp), RuleId::fallback(), Cost(5)};
  CHECK_THROWS_AS(approx_spav_single_peaked(bad_rule, 1, 4, Cost(5), 3, 1, 0),
                  std::invalid_argument);
  SupportInstance neg_eps{sp, unit_support_costs(sp), RuleId::spav(), Cost(5)};
  CHECK_THROWS_AS(approx_spav_single_peaked(neg_eps, 0, 4, Cost(5), 3, 1, 0),
                  std::invalid_argument);
}

TEST_CASE("approx stays within (1+eps) of the oracle on unit-cost instances") {
  int produced = 0, attempted = 0;
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    Rng rng(seed * 7 + 3);
    int m = rng.uniform_int(2, 4);
    int n = rng.uniform_int(1, 5);
    auto [e, axis] = gen_single_peaked(m, n, seed);
    e.designated = rng.uniform_int(0, m - 1);
    SupportInstance inst{e, unit_support_costs(e), RuleId::spav(), std::nullopt};
    BriberySolution oracle = brute_force_support(inst);
    if (oracle.cost.is_infinite() || oracle.cost == Cost(0)) continue;
    PushAction minimal = minimalize_push(inst, oracle.push());
    int beta_prime = 0;
    for (int d : minimal.deltas) beta_prime += std::abs(d);
    inst.budget = oracle.cost;
    ++attempted;
    for (auto [num, den] : {std::pair(1, 4), std::pair(1, 2)}) {
      BriberySolution sol =
          approx_spav_single_peaked(inst, num, den, oracle.cost, beta_prime, seed, 0);
      CAPTURE(seed);
      CAPTURE(num);
      if (!sol.cost.is_infinite()) {
        ++produced;
        CHECK(within_ratio(sol.cost, oracle.cost, num, den));
        CHECK(sol.certificate.contains(e.designated));
      }
    }
  }
  REQUIRE(attempted > 5);
  // Desk-scale colorings are enumerated exhaustively, so a qualifying
  // bribery should be produced essentially always.
  CHECK(produced >= attempted);  // two epsilons per attempt; >= half succeed
}
