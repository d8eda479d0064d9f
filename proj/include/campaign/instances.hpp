#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "campaign/bribery.hpp"
#include "campaign/election.hpp"
#include "campaign/single_peaked.hpp"

namespace campaign {

struct GraphInstance {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;            // 0-based, unordered
  std::vector<std::vector<int>> partition;           // empty when absent
};

void validate(const GraphInstance& g);

/// Edge-list text: first line `V E [K]`, then one `u v` pair per line, then
/// optional K partition lines `class v1 v2 ...`; vertices are 1-based.
GraphInstance parse_graph(const std::string& text);
std::string serialize_graph(const GraphInstance& g);

/// n independent uniform preference permutations; approval counts uniform in
/// [0, m] or fixed. Deterministic in the seed.
Election gen_random(int m, int n, std::uint64_t seed, std::optional<int> fixed_approvals,
                    int designated = 0);

/// Votes grown as random intervals around a random peak on the identity
/// axis; always single-peaked.
std::pair<Election, Axis> gen_single_peaked(int m, int n, std::uint64_t seed, int designated = 0);

/// Cost-profile helpers for generated instances.
ShiftCostProfile unit_shift_costs(const Election& e);
ShiftCostProfile random_shift_costs(const Election& e, std::uint64_t seed, int max_step,
                                    int inf_percent);
SupportCostProfile unit_support_costs(const Election& e);
SupportCostProfile one_sided_support_costs(const Election& e, bool positive);
SupportCostProfile random_support_costs(const Election& e, std::uint64_t seed, int max_step,
                                        int inf_percent);
SupportCostProfile random_one_sided_support_costs(const Election& e, bool positive,
                                                  std::uint64_t seed, int max_step,
                                                  int inf_percent);

/// Dominating-set reduction: a zero-budget support-bribery instance that is
/// feasible iff the graph has a dominating set of size <= k. The negative
/// variant has 6|V| voters approving |V|+3 candidates each; the positive one
/// has 2|V|+2 voters. Requires |V| >= k+2 (negative) and k >= 2 (positive).
SupportInstance reduce_dominating_set(const GraphInstance& g, int k, bool positive,
                                      RuleId rule = RuleId::fallback());

/// Multicolored-clique reduction: a single-peaked unit-cost SP-AV instance
/// with budget 2k^3 - k that admits a bribery within budget iff the graph
/// has a multicolored k-clique (and always one of cost budget+1).
std::pair<SupportInstance, Cost> reduce_multicolored_clique(const GraphInstance& g, int k);

}  // namespace campaign
