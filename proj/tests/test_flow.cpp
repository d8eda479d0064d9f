#include <doctest.h>

#include "campaign/flow.hpp"
#include "campaign/instances.hpp"
#include "campaign/rng.hpp"
#include "testutil.hpp"

using namespace campaign;

namespace {

// Exhaustive integral-flow oracle for tiny networks: try every flow vector
// within bounds and keep the cheapest conserving one.
std::optional<std::int64_t> enumerate_circulation(const CirculationNetwork& net, int cap) {
  std::vector<std::int64_t> flow(net.arcs.size(), 0);
  std::optional<std::int64_t> best;
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == net.arcs.size()) {
      std::vector<std::int64_t> balance(net.node_count, 0);
      std::int64_t cost = 0;
      for (size_t a = 0; a < net.arcs.size(); ++a) {
        balance[net.arcs[a].from] -= flow[a];
        balance[net.arcs[a].to] += flow[a];
        cost += flow[a] * net.arcs[a].cost;
      }
      for (std::int64_t b : balance)
        if (b != 0) return;
      if (!best || cost < *best) best = cost;
      return;
    }
    const Arc& arc = net.arcs[i];
    std::int64_t hi = arc.upper == Arc::kUnbounded ? cap : arc.upper;
    for (std::int64_t f = arc.lower; f <= hi; ++f) {
      flow[i] = f;
      self(self, i + 1);
    }
    flow[i] = 0;
  };
  rec(rec, 0);
  return best;
}

void check_feasible(const CirculationNetwork& net, const Flow& flow) {
  std::vector<std::int64_t> balance(net.node_count, 0);
  std::int64_t cost = 0;
  REQUIRE(flow.arc_flow.size() == net.arcs.size());
  for (size_t a = 0; a < net.arcs.size(); ++a) {
    const Arc& arc = net.arcs[a];
    CHECK(flow.arc_flow[a] >= arc.lower);
    if (arc.upper != Arc::kUnbounded) CHECK(flow.arc_flow[a] <= arc.upper);
    balance[arc.from] -= flow.arc_flow[a];
    balance[arc.to] += flow.arc_flow[a];
    cost += flow.arc_flow[a] * arc.cost;
  }
  for (std::int64_t b : balance) CHECK(b == 0);
  CHECK(cost == flow.total_cost);
}

}  // namespace

TEST_CASE("a forced two-arc cycle") {
  CirculationNetwork net;
  net.node_count = 2;
  net.arcs.push_back({0, 1, 1, 1, 2});
  net.arcs.push_back({1, 0, 1, 1, 0});
  auto flow = min_cost_circulation(net);
  REQUIRE(flow.has_value());
  CHECK(flow->total_cost == 2);
  CHECK(flow->arc_flow == std::vector<std::int64_t>{1, 1});
}

TEST_CASE("a lower bound into a dead-end node is infeasible") {
  CirculationNetwork net;
  net.node_count = 2;
  net.arcs.push_back({0, 1, 1, 1, 0});
  CHECK_FALSE(min_cost_circulation(net).has_value());
}

TEST_CASE("random networks match the enumeration oracle") {
  for (std::uint64_t seed = 0; seed < 250; ++seed) {
    Rng rng(seed * 3 + 1);
    CirculationNetwork net;
    net.node_count = rng.uniform_int(2, 6);
    int arcs = rng.uniform_int(1, 7);
    for (int a = 0; a < arcs; ++a) {
      Arc arc;
      arc.from = rng.uniform_int(0, net.node_count - 1);
      arc.to = rng.uniform_int(0, net.node_count - 1);
      if (arc.from == arc.to) arc.to = (arc.to + 1) % net.node_count;
      arc.lower = rng.uniform_int(0, 2);
      arc.upper = arc.lower + rng.uniform_int(0, 3 - static_cast<int>(arc.lower));
      arc.cost = rng.uniform_int(0, 5);
      net.arcs.push_back(arc);
    }
    auto oracle = enumerate_circulation(net, 3);
    auto flow = min_cost_circulation(net);
    CAPTURE(seed);
    CHECK(flow.has_value() == oracle.has_value());
    if (flow) {
      CHECK(flow->total_cost == *oracle);
      check_feasible(net, *flow);
    }
  }
}

TEST_CASE("bucklin network matches the Fig-1 arc recipe") {
  using testutil::make_election;
  // p ranked last everywhere; Bucklin round is 1 and candidate 0 wins it.
  Election e = make_election(3, 2,
                             {{{0, 1, 2}, 3}, {{0, 1, 2}, 3}, {{1, 0, 2}, 3}});
  ShiftCostProfile costs = unit_shift_costs(e);
  CHECK_THROWS_AS(build_bucklin_network(e, costs, 2, 0), std::invalid_argument);
  CirculationNetwork net = build_bucklin_network(e, costs, 1, 1);
  // S->S' fixed at 1
  CHECK(net.arcs[0].lower == 1);
  CHECK(net.arcs[0].upper == 1);
  int s_prime_arcs = 0;
  for (const Arc& a : net.arcs)
    if (a.from == 1) ++s_prime_arcs;
  CHECK(s_prime_arcs == 2);  // one per non-designated candidate

  // lower bound on S'->U_h is max(0, s2(c) - s2(p) - i)
  std::vector<int> s2 = k_approval_scores(e, 2);
  for (const Arc& a : net.arcs)
    if (a.from == 1) CHECK(a.lower >= 0);

  // every W->Z cost is a non-negative increment
  for (const Arc& a : net.arcs)
    CHECK(a.cost >= 0);
}

TEST_CASE("matching: diagonal zeros and permutation choice") {
  auto inf = Cost::infinite();
  {
    std::vector<std::vector<Cost>> w = {{0, inf}, {inf, 0}};
    auto res = min_weight_bipartite_matching(w);
    REQUIRE(res.has_value());
    CHECK(res->second == Cost(0));
  }
  {
    std::vector<std::vector<Cost>> w = {{1, 2}, {2, 1}};
    auto res = min_weight_bipartite_matching(w);
    REQUIRE(res.has_value());
    CHECK(res->second == Cost(2));
    CHECK(res->first.size() == 2);
  }
  {
    // right side smaller, one right vertex unreachable
    std::vector<std::vector<Cost>> w = {{inf}, {inf}, {inf}};
    CHECK_FALSE(min_weight_bipartite_matching(w).has_value());
  }
  CHECK_THROWS_AS(min_weight_bipartite_matching({}), std::invalid_argument);
}

TEST_CASE("matching equals permutation enumeration on random square matrices") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Rng rng(seed + 17);
    int n = rng.uniform_int(1, 4);
    std::vector<std::vector<Cost>> w(n, std::vector<Cost>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int v = rng.uniform_int(0, 8);
        w[i][j] = v == 8 ? Cost::infinite() : Cost(v);
      }
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    Cost best = Cost::infinite();
    do {
      Cost total = 0;
      for (int i = 0; i < n; ++i) total += w[i][perm[i]];
      best = std::min(best, total);
    } while (std::next_permutation(perm.begin(), perm.end()));
    auto res = min_weight_bipartite_matching(w);
    CAPTURE(seed);
    if (best.is_infinite()) {
      CHECK_FALSE(res.has_value());
    } else {
      REQUIRE(res.has_value());
      CHECK(res->second == best);
    }
  }
}
