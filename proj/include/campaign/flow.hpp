#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "campaign/bribery.hpp"
#include "campaign/cost.hpp"
#include "campaign/election.hpp"

namespace campaign {

/// An arc with flow bounds and a per-unit cost. `upper == kUnbounded` means
/// no capacity limit.
struct Arc {
  int from = 0;
  int to = 0;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  std::int64_t cost = 0;

  static constexpr std::int64_t kUnbounded = -1;
};

struct CirculationNetwork {
  int node_count = 0;
  std::vector<Arc> arcs;
};

struct Flow {
  std::vector<std::int64_t> arc_flow;  // parallel to CirculationNetwork::arcs
  std::int64_t total_cost = 0;
};

/// Minimum-cost integral circulation honoring lower/upper bounds and
/// conservation at every node, or nullopt when no feasible flow exists.
/// Costs must be non-negative.
std::optional<Flow> min_cost_circulation(const CirculationNetwork& network);

/// The six-layer network whose minimum-cost circulations are the cheapest
/// shift actions making the designated candidate win classic Bucklin in
/// round k+1 while bribing exactly `deep_bribes` voters that rank her in
/// position k+2 or lower. `k` must be the Bucklin winning round.
CirculationNetwork build_bucklin_network(const Election& e, const ShiftCostProfile& costs,
                                         int k, int deep_bribes);

/// Minimum-weight matching saturating the smaller side of a bipartite graph.
/// weights[i][j] is the edge weight between left i and right j; infinite
/// weight means no edge. Returns (pairs, total weight) or nullopt when the
/// smaller side cannot be saturated with finite edges.
std::optional<std::pair<std::vector<std::pair<int, int>>, Cost>> min_weight_bipartite_matching(
    const std::vector<std::vector<Cost>>& weights);

}  // namespace campaign
