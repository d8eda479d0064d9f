#include "campaign/shift.hpp"

#include <algorithm>
#include <stdexcept>

#include "campaign/flow.hpp"

namespace campaign {

void validate(const Election& e, const ShiftCostProfile& costs) {
  if (costs.n() != e.n()) throw std::invalid_argument("shift costs: row count != voter count");
  for (const auto& row : costs.rows) {
    if (static_cast<int>(row.size()) != e.m() + 1)
      throw std::invalid_argument("shift costs: row length != m+1");
    if (row[0] != Cost(0)) throw std::invalid_argument("shift costs: pi(0) != 0");
    for (size_t t = 1; t < row.size(); ++t)
      if (row[t] < row[t - 1]) throw std::invalid_argument("shift costs: pi not non-decreasing");
  }
}

Cost shift_cost(const ShiftCostProfile& costs, const ShiftAction& action) {
  if (costs.n() != static_cast<int>(action.shifts.size()))
    throw std::invalid_argument("shift_cost: dimension mismatch");
  Cost total = 0;
  for (int i = 0; i < costs.n(); ++i) {
    int t = action.shifts[i];
    if (t < 0 || t >= static_cast<int>(costs.rows[i].size()))
      throw std::invalid_argument("shift_cost: shift out of range");
    total += costs.rows[i][t];
  }
  return total;
}

namespace {

BriberySolution make_shift_solution(const ShiftInstance& inst, const ShiftAction& action) {
  BriberySolution sol;
  sol.action = action;
  sol.cost = shift_cost(inst.costs, action);
  sol.certificate = winners(apply_shift(inst.election, action), inst.rule);
  return sol;
}

BriberySolution infeasible_shift(const ShiftInstance& inst) {
  BriberySolution sol;
  sol.action = ShiftAction{std::vector<int>(inst.election.n(), 0)};
  sol.cost = Cost::infinite();
  sol.certificate = winners(inst.election, inst.rule);
  return sol;
}

bool shift_succeeds(const ShiftInstance& inst, const ShiftAction& action) {
  return winners(apply_shift(inst.election, action), inst.rule)
      .contains(inst.election.designated);
}

// Cost of shifting p into position `target` (1-based) in vote v, zero when
// already at or above it.
Cost cost_to_position(const ShiftInstance& inst, int voter, int target) {
  int r = rank(inst.election, inst.election.designated, voter);
  if (r <= target) return 0;
  return inst.costs.rows[voter][r - target];
}

struct GreedyPick {
  Cost cost = 0;
  std::vector<int> voters;
  bool feasible = true;
};

// Cheapest `need` voters from `pool`, each priced by `price`; stable in
// voter order on ties.
GreedyPick pick_cheapest(const std::vector<int>& pool, const std::vector<Cost>& price, int need) {
  GreedyPick out;
  if (need <= 0) return out;
  if (static_cast<int>(pool.size()) < need) {
    out.feasible = false;
    out.cost = Cost::infinite();
    return out;
  }
  std::vector<int> order = pool;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return price[a] < price[b]; });
  for (int i = 0; i < need; ++i) {
    out.voters.push_back(order[i]);
    out.cost += price[order[i]];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Per-competitor dynamic program shared by the simplified Bucklin and
// simplified Fallback solvers. Voters in `b_good`/`b_excl` are the two
// bribery options of a B_c voter (land p in a counting position / also
// demote c); `a_excl` prices an A_c voter's one-step demotion of c.
// b(i) = min cost landing p in a counting position in exactly i B_c votes
// while demoting c in at least n_c votes of A_c and B_c together.
// ---------------------------------------------------------------------------
struct CompetitorPlan {
  std::vector<Cost> cost_by_i;                      // i = 0..|B_c|
  std::vector<std::vector<std::pair<int, int>>> action_by_i;  // (voter, target)
};

struct BVoter {
  int voter;
  Cost good;
  Cost excl;
  int good_target;
  int excl_target;
};
struct AVoter {
  int voter;
  Cost excl;
  int excl_target;
};

CompetitorPlan competitor_dp(std::vector<BVoter> b, std::vector<AVoter> a, int n_c) {
  std::stable_sort(b.begin(), b.end(), [](const BVoter& x, const BVoter& y) {
    if (x.good != y.good) return x.good < y.good;
    return x.voter < y.voter;
  });
  std::stable_sort(a.begin(), a.end(), [](const AVoter& x, const AVoter& y) {
    if (x.excl != y.excl) return x.excl < y.excl;
    return x.voter < y.voter;
  });
  const int nb = static_cast<int>(b.size());
  const int na = static_cast<int>(a.size());
  const Cost inf = Cost::infinite();

  std::vector<Cost> pref_a(na + 1, 0);
  for (int h = 1; h <= na; ++h) pref_a[h] = pref_a[h - 1] + a[h - 1].excl;

  // dp[i][j][h]; backpointer 0 = skip, 1 = good, 2 = exclude, 3 = boundary.
  auto idx = [&](int i, int j, int h) { return (i * (nb + 1) + j) * (n_c + 1) + h; };
  std::vector<Cost> dp((nb + 1) * (nb + 1) * (n_c + 1), inf);
  std::vector<signed char> choice(dp.size(), -1);
  for (int j = 0; j <= nb; ++j)
    for (int h = 0; h <= n_c; ++h) {
      dp[idx(0, j, h)] = h <= na ? pref_a[h] : inf;
      choice[idx(0, j, h)] = 3;
    }
  for (int i = 1; i <= nb; ++i)
    for (int j = i; j <= nb; ++j)
      for (int h = 0; h <= n_c; ++h) {
        Cost best = inf;
        signed char pick = -1;
        Cost cand = dp[idx(i - 1, j - 1, h)] + b[j - 1].good;
        if (cand < best) best = cand, pick = 1;
        if (h >= 1) {
          cand = dp[idx(i - 1, j - 1, h - 1)] + b[j - 1].excl;
          if (cand < best) best = cand, pick = 2;
        }
        if (j - 1 >= i) {
          cand = dp[idx(i, j - 1, h)];
          if (cand < best) best = cand, pick = 0;
        }
        dp[idx(i, j, h)] = best;
        choice[idx(i, j, h)] = pick;
      }

  CompetitorPlan plan;
  plan.cost_by_i.assign(nb + 1, inf);
  plan.action_by_i.assign(nb + 1, {});
  for (int i = 0; i <= nb; ++i) {
    plan.cost_by_i[i] = dp[idx(i, nb, n_c)];
    if (plan.cost_by_i[i].is_infinite()) continue;
    std::vector<std::pair<int, int>> acts;
    int ci = i, cj = nb, ch = n_c;
    while (true) {
      signed char pick = choice[idx(ci, cj, ch)];
      if (pick == 3) {
        for (int h = 0; h < ch; ++h) acts.push_back({a[h].voter, a[h].excl_target});
        break;
      }
      if (pick == 1) {
        acts.push_back({b[cj - 1].voter, b[cj - 1].good_target});
        --ci, --cj;
      } else if (pick == 2) {
        acts.push_back({b[cj - 1].voter, b[cj - 1].excl_target});
        --ci, --cj, --ch;
      } else {
        --cj;
      }
    }
    plan.action_by_i[i] = std::move(acts);
  }
  return plan;
}

// Combination over competitors: beta(j, i) = cheapest way for the first j
// competitor plans to contribute exactly i counting positions for p.
struct BetaResult {
  Cost cost = Cost::infinite();
  std::vector<std::pair<int, int>> action;  // (voter, target)
};

BetaResult combine_competitors(const std::vector<CompetitorPlan>& plans, int target) {
  const Cost inf = Cost::infinite();
  // Bucket i = total counting positions contributed so far, capped at
  // `target` (overshoot never hurts and may be forced by demotion needs).
  std::vector<std::vector<Cost>> beta(plans.size() + 1, std::vector<Cost>(target + 1, inf));
  std::vector<std::vector<int>> take(plans.size() + 1, std::vector<int>(target + 1, -1));
  std::vector<std::vector<int>> from(plans.size() + 1, std::vector<int>(target + 1, -1));
  beta[0][0] = 0;
  for (size_t j = 1; j <= plans.size(); ++j) {
    const CompetitorPlan& pl = plans[j - 1];
    for (int before = 0; before <= target; ++before) {
      if (beta[j - 1][before].is_infinite()) continue;
      for (int l = 0; l < static_cast<int>(pl.cost_by_i.size()); ++l) {
        if (pl.cost_by_i[l].is_infinite()) continue;
        int nb = std::min(target, before + l);
        Cost cand = beta[j - 1][before] + pl.cost_by_i[l];
        if (cand < beta[j][nb]) {
          beta[j][nb] = cand;
          take[j][nb] = l;
          from[j][nb] = before;
        }
      }
    }
  }
  BetaResult out;
  out.cost = beta[plans.size()][target];
  if (out.cost.is_infinite()) return out;
  int i = target;
  for (int j = static_cast<int>(plans.size()); j >= 1; --j) {
    int l = take[j][i];
    const auto& acts = plans[j - 1].action_by_i[l];
    out.action.insert(out.action.end(), acts.begin(), acts.end());
    i = from[j][i];
  }
  return out;
}

ShiftAction action_from_targets(const ShiftInstance& inst,
                                const std::vector<std::pair<int, int>>& targets) {
  ShiftAction act{std::vector<int>(inst.election.n(), 0)};
  for (auto [voter, target] : targets) {
    int r = rank(inst.election, inst.election.designated, voter);
    act.shifts[voter] = std::max(act.shifts[voter], std::max(0, r - target));
  }
  return act;
}

BriberySolution best_of(const ShiftInstance& inst, const std::vector<ShiftAction>& candidates) {
  BriberySolution best = infeasible_shift(inst);
  for (const ShiftAction& a : candidates) {
    Cost c = shift_cost(inst.costs, a);
    if (c < best.cost && shift_succeeds(inst, a)) best = make_shift_solution(inst, a);
  }
  return best;
}

}  // namespace

BriberySolution brute_force_shift(const ShiftInstance& inst) {
  validate(inst.election);
  validate(inst.election, inst.costs);
  const Election& e = inst.election;
  const int n = e.n();
  double combos = 1;
  std::vector<int> max_shift(n);
  for (int i = 0; i < n; ++i) {
    max_shift[i] = rank(e, e.designated, i) - 1;
    combos *= max_shift[i] + 1;
    if (combos > 1e7) throw std::runtime_error("brute_force_shift: enumeration guard exceeded");
  }
  ShiftAction cur{std::vector<int>(n, 0)};
  BriberySolution best = infeasible_shift(inst);
  std::vector<int> best_action;
  Cost best_cost = Cost::infinite();
  auto rec = [&](auto&& self, int i, Cost acc) -> void {
    if (acc >= best_cost) return;
    if (i == n) {
      if (shift_succeeds(inst, cur)) {
        best_cost = acc;
        best_action = cur.shifts;
      }
      return;
    }
    for (int t = 0; t <= max_shift[i]; ++t) {
      cur.shifts[i] = t;
      self(self, i + 1, acc + inst.costs.rows[i][t]);
    }
    cur.shifts[i] = 0;
  };
  rec(rec, 0, 0);
  if (best_cost.is_infinite()) return best;
  return make_shift_solution(inst, ShiftAction{best_action});
}

BriberySolution solve_shift_bucklin_simplified(const ShiftInstance& inst) {
  if (inst.rule.kind != RuleKind::bucklin_simplified)
    throw std::invalid_argument("solve_shift_bucklin_simplified: wrong rule");
  validate(inst.election);
  validate(inst.election, inst.costs);
  const Election& e = inst.election;
  const int n = e.n(), m = e.m(), p = e.designated, maj = e.majority();

  WinnerReport w0 = winners(e, inst.rule);
  if (w0.contains(p)) return make_shift_solution(inst, ShiftAction{std::vector<int>(n, 0)});
  const int k = *w0.winning_round;
  std::vector<int> sk = k_approval_scores(e, k);

  std::vector<ShiftAction> branches;

  {  // Win in round k: move p into position k in the cheapest votes.
    std::vector<int> pool;
    std::vector<Cost> price(n, 0);
    for (int j = 0; j < n; ++j)
      if (rank(e, p, j) > k) {
        pool.push_back(j);
        price[j] = cost_to_position(inst, j, k);
      }
    GreedyPick pick = pick_cheapest(pool, price, maj - sk[p]);
    if (pick.feasible) {
      std::vector<std::pair<int, int>> targets;
      for (int v : pick.voters) targets.push_back({v, k});
      branches.push_back(action_from_targets(inst, targets));
    }
  }

  if (k + 1 <= m) {  // Win in round k+1, demoting every round-k winner.
    std::vector<int> sk1 = k_approval_scores(e, k + 1);
    bool feasible = true;
    std::vector<CompetitorPlan> plans;
    for (int c = 0; c < m && feasible; ++c) {
      if (c == p) continue;
      int n_c = std::max(0, sk[c] - n / 2);
      std::vector<BVoter> bs;
      std::vector<AVoter> as;
      for (int j = 0; j < n; ++j) {
        if (e.voters[j].preference[k - 1] != c) continue;
        int r = rank(e, p, j);
        if (r <= k) continue;
        if (r == k + 1) {
          as.push_back({j, inst.costs.rows[j][1], k});
        } else {
          bs.push_back({j, inst.costs.rows[j][r - (k + 1)], inst.costs.rows[j][r - k], k + 1, k});
        }
      }
      if (static_cast<int>(bs.size() + as.size()) < n_c) {
        feasible = false;
        break;
      }
      plans.push_back(competitor_dp(std::move(bs), std::move(as), n_c));
    }
    if (feasible) {
      BetaResult beta = combine_competitors(plans, std::max(0, maj - sk1[p]));
      if (!beta.cost.is_infinite()) branches.push_back(action_from_targets(inst, beta.action));
    }
  }

  return best_of(inst, branches);
}

namespace {

// Stage 1 of the simplified Fallback algorithm, shared with the classic
// Fallback solver: for each target approval level t, exclude competitors
// from approval until nobody exceeds t and p reaches at least t approvals.
void approval_stage_actions(const ShiftInstance& inst, std::vector<ShiftAction>& out) {
  const Election& e = inst.election;
  const int n = e.n(), m = e.m(), p = e.designated;
  std::vector<int> appr = approval_scores(e);

  // V_c by last-approved occupant; price of excluding c (= landing p there).
  std::vector<std::vector<int>> by_cand(m);
  std::vector<Cost> price(n, Cost::infinite());
  std::vector<int> target_pos(n, 0);
  for (int j = 0; j < n; ++j) {
    int l = e.voters[j].approval_count;
    if (l < 1) continue;
    int c = e.voters[j].preference[l - 1];
    if (c == p || rank(e, p, j) <= l) continue;
    by_cand[c].push_back(j);
    price[j] = cost_to_position(inst, j, l);
    target_pos[j] = l;
  }
  for (auto& pool : by_cand)
    std::stable_sort(pool.begin(), pool.end(),
                     [&](int a, int b) { return price[a] < price[b]; });

  for (int t = 1; t <= n / 2; ++t) {
    bool ok = true;
    std::vector<char> bribed(n, 0);
    std::vector<std::pair<int, int>> targets;
    int p_approvals = appr[p];
    for (int c = 0; c < m && ok; ++c) {
      if (c == p || appr[c] <= t) continue;
      int need = appr[c] - t;
      if (static_cast<int>(by_cand[c].size()) < need) {
        ok = false;
        break;
      }
      for (int z = 0; z < need; ++z) {
        int v = by_cand[c][z];
        bribed[v] = 1;
        targets.push_back({v, target_pos[v]});
        ++p_approvals;
      }
    }
    if (!ok) continue;
    if (p_approvals < t) {
      std::vector<int> rest;
      for (int c = 0; c < m; ++c)
        for (int v : by_cand[c])
          if (!bribed[v]) rest.push_back(v);
      GreedyPick pick = pick_cheapest(rest, price, t - p_approvals);
      if (!pick.feasible) continue;
      for (int v : pick.voters) targets.push_back({v, target_pos[v]});
    }
    out.push_back(action_from_targets(inst, targets));
  }
}

}  // namespace

BriberySolution solve_shift_fallback_simplified(const ShiftInstance& inst) {
  if (inst.rule.kind != RuleKind::fallback_simplified)
    throw std::invalid_argument("solve_shift_fallback_simplified: wrong rule");
  validate(inst.election);
  validate(inst.election, inst.costs);
  const Election& e = inst.election;
  const int n = e.n(), m = e.m(), p = e.designated, maj = e.majority();

  if (winners(e, inst.rule).contains(p))
    return make_shift_solution(inst, ShiftAction{std::vector<int>(n, 0)});

  std::vector<ShiftAction> branches;
  approval_stage_actions(inst, branches);

  int big_l = 0;
  for (const Voter& v : e.voters) big_l = std::max(big_l, v.approval_count);

  for (int l = 1; l <= big_l; ++l) {
    std::vector<int> s_l = truncated_round_scores(e, l);
    if (l == 1) {
      std::vector<int> pool;
      std::vector<Cost> price(n, 0);
      for (int j = 0; j < n; ++j)
        if (e.voters[j].approval_count >= 1 && rank(e, p, j) > 1) {
          pool.push_back(j);
          price[j] = cost_to_position(inst, j, 1);
        }
      GreedyPick pick = pick_cheapest(pool, price, maj - s_l[p]);
      if (pick.feasible) {
        std::vector<std::pair<int, int>> targets;
        for (int v : pick.voters) targets.push_back({v, 1});
        branches.push_back(action_from_targets(inst, targets));
      }
      continue;
    }
    std::vector<int> s_prev = truncated_round_scores(e, l - 1);
    bool feasible = true;
    std::vector<CompetitorPlan> plans;
    for (int c = 0; c < m && feasible; ++c) {
      if (c == p) continue;
      int n_c = std::max(0, s_prev[c] - n / 2);
      std::vector<BVoter> bs;
      std::vector<AVoter> as;
      for (int j = 0; j < n; ++j) {
        int lv = e.voters[j].approval_count;
        if (lv < 1) continue;
        int excl_pos = std::min(lv, l - 1);
        if (e.voters[j].preference[excl_pos - 1] != c) continue;
        int r = rank(e, p, j);
        if (r <= excl_pos) continue;
        int good_pos = std::min(lv, l);
        if (excl_pos == l - 1 && r == l && l <= lv) {
          as.push_back({j, inst.costs.rows[j][1], l - 1});
        } else if (r > good_pos) {
          bs.push_back({j, inst.costs.rows[j][r - good_pos], inst.costs.rows[j][r - excl_pos],
                        good_pos, excl_pos});
        } else {
          // p already occupies a counting position and can still demote c.
          as.push_back({j, inst.costs.rows[j][r - excl_pos], excl_pos});
        }
      }
      if (static_cast<int>(bs.size() + as.size()) < n_c) {
        feasible = false;
        break;
      }
      plans.push_back(competitor_dp(std::move(bs), std::move(as), n_c));
    }
    if (!feasible) continue;
    BetaResult beta = combine_competitors(plans, std::max(0, maj - s_l[p]));
    if (!beta.cost.is_infinite()) branches.push_back(action_from_targets(inst, beta.action));
  }

  return best_of(inst, branches);
}

BriberySolution solve_shift_bucklin(const ShiftInstance& inst) {
  if (inst.rule.kind != RuleKind::bucklin)
    throw std::invalid_argument("solve_shift_bucklin: wrong rule");
  validate(inst.election);
  validate(inst.election, inst.costs);
  const Election& e = inst.election;
  const int n = e.n(), m = e.m(), p = e.designated, maj = e.majority();

  WinnerReport w0 = winners(e, inst.rule);
  if (w0.contains(p)) return make_shift_solution(inst, ShiftAction{std::vector<int>(n, 0)});
  const int k = *w0.winning_round;
  std::vector<int> sk = k_approval_scores(e, k);

  std::vector<ShiftAction> branches;

  if (k >= 2) {  // Win in round k-1 outright.
    std::vector<int> s_prev = k_approval_scores(e, k - 1);
    std::vector<int> pool;
    std::vector<Cost> price(n, 0);
    for (int j = 0; j < n; ++j)
      if (rank(e, p, j) > k - 1) {
        pool.push_back(j);
        price[j] = cost_to_position(inst, j, k - 1);
      }
    GreedyPick pick = pick_cheapest(pool, price, maj - s_prev[p]);
    if (pick.feasible) {
      std::vector<std::pair<int, int>> targets;
      for (int v : pick.voters) targets.push_back({v, k - 1});
      branches.push_back(action_from_targets(inst, targets));
    }
  }

  {  // Win in round k: cap every rival at i points and lift p to i.
    std::vector<std::vector<int>> v_c(m);
    std::vector<Cost> price(n, Cost::infinite());
    for (int j = 0; j < n; ++j) {
      int r = rank(e, p, j);
      if (r <= k) continue;
      v_c[e.voters[j].preference[k - 1]].push_back(j);
      price[j] = cost_to_position(inst, j, k);
    }
    for (auto& pool : v_c)
      std::stable_sort(pool.begin(), pool.end(),
                       [&](int a, int b) { return price[a] < price[b]; });
    Cost best_cost = Cost::infinite();
    std::vector<std::pair<int, int>> best_targets;
    for (int i = maj; i <= n; ++i) {
      bool ok = true;
      Cost total = 0;
      std::vector<char> bribed(n, 0);
      std::vector<std::pair<int, int>> targets;
      int p_score = sk[p];
      for (int c = 0; c < m && ok; ++c) {
        if (c == p || sk[c] <= i) continue;
        int need = sk[c] - i;
        if (static_cast<int>(v_c[c].size()) < need) {
          ok = false;
          break;
        }
        for (int z = 0; z < need; ++z) {
          int v = v_c[c][z];
          bribed[v] = 1;
          targets.push_back({v, k});
          total += price[v];
          ++p_score;
        }
      }
      if (!ok) continue;
      if (p_score < i) {
        std::vector<int> rest;
        for (int j = 0; j < n; ++j)
          if (!bribed[j] && rank(e, p, j) > k) rest.push_back(j);
        GreedyPick pick = pick_cheapest(rest, price, i - p_score);
        if (!pick.feasible) continue;
        total += pick.cost;
        for (int v : pick.voters) targets.push_back({v, k});
      }
      if (total < best_cost) {
        best_cost = total;
        best_targets = targets;
      }
    }
    if (!best_cost.is_infinite()) branches.push_back(action_from_targets(inst, best_targets));
  }

  if (k + 1 <= m) {  // Win in round k+1 via minimum-cost circulation.
    std::vector<int> sk1 = k_approval_scores(e, k + 1);
    Cost best_cost = Cost::infinite();
    ShiftAction best_action;
    const int w_base = 2 + (m - 1);
    for (int i = std::max(0, maj - sk1[p]); i <= n; ++i) {
      CirculationNetwork net = build_bucklin_network(e, inst.costs, k, i);
      std::optional<Flow> flow = min_cost_circulation(net);
      if (!flow) continue;
      if (Cost(flow->total_cost) >= best_cost) continue;
      ShiftAction act{std::vector<int>(n, 0)};
      for (size_t a = 0; a < net.arcs.size(); ++a) {
        if (flow->arc_flow[a] <= 0) continue;
        const Arc& arc = net.arcs[a];
        bool from_w = arc.from >= w_base && arc.from < w_base + n;
        bool to_w = arc.to >= w_base && arc.to < w_base + n;
        if (to_w && arc.from >= 2 && arc.from < w_base) {  // U_h -> W_j
          int j = arc.to - w_base;
          act.shifts[j] = rank(e, p, j) - (k + 1);
        } else if (from_w && arc.to >= w_base + n && arc.to < w_base + n + (m - 1)) {  // W_j -> Z_h
          int j = arc.from - w_base;
          act.shifts[j] = rank(e, p, j) - k;
        }
      }
      best_cost = flow->total_cost;
      best_action = act;
    }
    if (!best_cost.is_infinite()) branches.push_back(best_action);
  }

  return best_of(inst, branches);
}

BriberySolution solve_shift_fallback(const ShiftInstance& inst) {
  if (inst.rule.kind != RuleKind::fallback)
    throw std::invalid_argument("solve_shift_fallback: wrong rule");
  validate(inst.election);
  validate(inst.election, inst.costs);
  const Election& e = inst.election;
  const int n = e.n(), m = e.m(), p = e.designated, maj = e.majority();

  if (winners(e, inst.rule).contains(p))
    return make_shift_solution(inst, ShiftAction{std::vector<int>(n, 0)});

  std::vector<ShiftAction> branches;
  approval_stage_actions(inst, branches);

  int big_l = 0;
  for (const Voter& v : e.voters) big_l = std::max(big_l, v.approval_count);

  // One circulation family per target round l: candidates lose enough
  // round-(l-1) points (Z layer) and enough round-l points (U layer), with
  // approval-boundary demotions handled by both layers at once whenever the
  // voter's approval count is below l.
  for (int l = 1; l <= big_l; ++l) {
    std::vector<int> s_l = truncated_round_scores(e, l);
    std::vector<int> s_prev = l >= 2 ? truncated_round_scores(e, l - 1) : std::vector<int>(m, 0);

    std::vector<int> b1(n), b2(n), rp(n);
    int deep_candidates = 0;
    for (int j = 0; j < n; ++j) {
      int lv = e.voters[j].approval_count;
      b1[j] = std::min(lv, l - 1);
      b2[j] = std::min(lv, l);
      rp[j] = rank(e, p, j);
      if (b2[j] >= 1 && rp[j] > b2[j]) ++deep_candidates;
    }

    Cost best_cost = Cost::infinite();
    ShiftAction best_action;
    const int S = 0, Sp = 1;
    auto U = [&](int c) { return 2 + (c < p ? c : c - 1); };
    const int w_base = 2 + (m - 1);
    auto Wn = [&](int j) { return w_base + j; };
    auto Z = [&](int c) { return w_base + n + (c < p ? c : c - 1); };
    const int T = w_base + n + (m - 1);

    for (int i = std::max(0, maj - s_l[p]); i <= deep_candidates; ++i) {
      CirculationNetwork net;
      net.node_count = T + 1;
      net.arcs.push_back({S, Sp, i, i, 0});
      for (int c = 0; c < m; ++c) {
        if (c == p) continue;
        std::int64_t lb = std::max(0, s_l[c] - (s_l[p] + i));
        net.arcs.push_back({Sp, U(c), lb, Arc::kUnbounded, 0});
      }
      for (int j = 0; j < n; ++j) {
        if (b2[j] < 1) continue;
        int r = rp[j];
        if (r > b2[j]) {
          int cand2 = e.voters[j].preference[b2[j] - 1];
          Cost to_good = inst.costs.rows[j][r - b2[j]];
          if (to_good.is_finite()) net.arcs.push_back({U(cand2), Wn(j), 0, 1, to_good.value()});
        } else if (b1[j] >= 1 && r > b1[j]) {
          net.arcs.push_back({S, Wn(j), 0, Arc::kUnbounded, 0});
        }
        if (b1[j] >= 1 && r > b1[j]) {
          int cand1 = e.voters[j].preference[b1[j] - 1];
          Cost to_excl = inst.costs.rows[j][r - b1[j]];
          Cost to_good = inst.costs.rows[j][std::max(0, r - b2[j])];
          if (to_excl.is_finite() && to_good.is_finite())
            net.arcs.push_back({Wn(j), Z(cand1), 0, 1, to_excl.value() - to_good.value()});
        }
        net.arcs.push_back({Wn(j), T, 0, Arc::kUnbounded, 0});
      }
      for (int c = 0; c < m; ++c) {
        if (c == p) continue;
        std::int64_t lb = std::max(0, s_prev[c] - n / 2);
        net.arcs.push_back({Z(c), T, lb, Arc::kUnbounded, 0});
      }
      net.arcs.push_back({T, S, 0, Arc::kUnbounded, 0});

      std::optional<Flow> flow = min_cost_circulation(net);
      if (!flow) continue;
      if (Cost(flow->total_cost) >= best_cost) continue;
      ShiftAction act{std::vector<int>(n, 0)};
      for (size_t a = 0; a < net.arcs.size(); ++a) {
        if (flow->arc_flow[a] <= 0) continue;
        const Arc& arc = net.arcs[a];
        bool to_w = arc.to >= w_base && arc.to < w_base + n;
        bool from_w = arc.from >= w_base && arc.from < w_base + n;
        if (to_w && arc.from >= 2 && arc.from < w_base) {
          int j = arc.to - w_base;
          act.shifts[j] = rp[j] - b2[j];
        } else if (from_w && arc.to >= w_base + n && arc.to < T) {
          int j = arc.from - w_base;
          act.shifts[j] = rp[j] - b1[j];
        }
      }
      best_cost = flow->total_cost;
      best_action = act;
    }
    if (!best_cost.is_infinite()) branches.push_back(best_action);
  }

  return best_of(inst, branches);
}

BriberySolution solve_shift(const ShiftInstance& inst) {
  switch (inst.rule.kind) {
    case RuleKind::bucklin: return solve_shift_bucklin(inst);
    case RuleKind::bucklin_simplified: return solve_shift_bucklin_simplified(inst);
    case RuleKind::fallback: return solve_shift_fallback(inst);
    case RuleKind::fallback_simplified: return solve_shift_fallback_simplified(inst);
    default:
      throw std::invalid_argument("solve_shift: no shift solver for this rule");
  }
}

bool is_minimal_shift(const ShiftInstance& inst, const ShiftAction& action) {
  if (!shift_succeeds(inst, action))
    throw std::invalid_argument("is_minimal_shift: action does not make p a winner");
  const int n = inst.election.n();
  double combos = 1;
  for (int t : action.shifts) {
    combos *= t + 1;
    if (combos > 1e7) throw std::runtime_error("is_minimal_shift: enumeration guard exceeded");
  }
  ShiftAction cur{std::vector<int>(n, 0)};
  auto rec = [&](auto&& self, int i, bool smaller) -> bool {  // true = found smaller success
    if (i == n) return smaller && shift_succeeds(inst, cur);
    for (int t = 0; t <= action.shifts[i]; ++t) {
      cur.shifts[i] = t;
      if (self(self, i + 1, smaller || t < action.shifts[i])) return true;
    }
    return false;
  };
  return !rec(rec, 0, false);
}

ShiftAction minimalize_shift(const ShiftInstance& inst, const ShiftAction& action) {
  if (!shift_succeeds(inst, action))
    throw std::invalid_argument("minimalize_shift: action does not make p a winner");
  ShiftAction cur = action;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < inst.election.n(); ++i) {
      while (cur.shifts[i] > 0) {
        --cur.shifts[i];
        if (shift_succeeds(inst, cur)) {
          changed = true;
        } else {
          ++cur.shifts[i];
          break;
        }
      }
    }
  }
  // Single-coordinate descent can stall on a non-minimal plateau; finish by
  // walking to any strictly smaller successful action while one exists.
  while (!is_minimal_shift(inst, cur)) {
    const int n = inst.election.n();
    ShiftAction probe{std::vector<int>(n, 0)};
    bool found = false;
    auto rec = [&](auto&& self, int i, bool smaller) -> bool {
      if (i == n) return smaller && shift_succeeds(inst, probe);
      for (int t = 0; t <= cur.shifts[i]; ++t) {
        probe.shifts[i] = t;
        if (self(self, i + 1, smaller || t < cur.shifts[i])) return true;
      }
      return false;
    };
    found = rec(rec, 0, false);
    if (!found) break;
    cur = probe;
  }
  return cur;
}

}  // namespace campaign
