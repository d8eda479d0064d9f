#include <algorithm>
#include <stdexcept>

#include "campaign/support.hpp"

namespace campaign {

namespace {

constexpr int kNone = -1;

struct DestructiveBest {
  Cost cost = Cost::infinite();
  std::vector<int> counts;  // per-voter approval counts
};

// Per voter: cheapest count choice realizing each (a, b) combination, where
// a = challenger approved in top t, b = despised approved in top t.
struct ComboCosts {
  Cost cost[2][2];
  int count[2][2];
};

std::vector<ComboCosts> combo_costs(const Election& e, const SupportCostProfile& costs,
                                    int challenger, int despised, int t) {
  std::vector<ComboCosts> out(e.n());
  for (int v = 0; v < e.n(); ++v) {
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        out[v].cost[a][b] = Cost::infinite();
        out[v].count[a][b] = kNone;
      }
    int qc = rank(e, challenger, v);
    int qd = rank(e, despised, v);
    for (int kappa = 0; kappa <= e.m(); ++kappa) {
      Cost c = costs.values[v][kappa];
      if (c.is_infinite()) continue;
      int a = qc <= std::min(t, kappa) ? 1 : 0;
      int b = qd <= std::min(t, kappa) ? 1 : 0;
      if (c < out[v].cost[a][b]) {
        out[v].cost[a][b] = c;
        out[v].count[a][b] = kappa;
      }
    }
  }
  return out;
}

// f_t(k, i, j): cheapest bribery making exactly i of the first k voters
// approve the challenger in top t and exactly j approve the despised
// candidate in top t.
struct TableF {
  int n;
  std::vector<Cost> f;
  std::vector<signed char> pick;  // combo index a*2+b

  int idx(int k, int i, int j) const { return (k * (n + 1) + i) * (n + 1) + j; }
};

TableF run_f(const Election& e, const std::vector<ComboCosts>& combos) {
  const int n = e.n();
  TableF tb;
  tb.n = n;
  tb.f.assign((n + 1) * (n + 1) * (n + 1), Cost::infinite());
  tb.pick.assign(tb.f.size(), -1);
  tb.f[tb.idx(0, 0, 0)] = 0;
  for (int k = 1; k <= n; ++k)
    for (int i = 0; i <= k; ++i)
      for (int j = 0; j <= k; ++j) {
        Cost best = Cost::infinite();
        signed char best_pick = -1;
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b) {
            if (a > i || b > j) continue;
            Cost prev = tb.f[tb.idx(k - 1, i - a, j - b)];
            Cost c = combos[k - 1].cost[a][b];
            if (prev.is_infinite() || c.is_infinite()) continue;
            Cost cand = prev + c;
            if (cand < best) {
              best = cand;
              best_pick = static_cast<signed char>(a * 2 + b);
            }
          }
        tb.f[tb.idx(k, i, j)] = best;
        tb.pick[tb.idx(k, i, j)] = best_pick;
      }
  return tb;
}

std::vector<int> reconstruct_f(const Election& e, const std::vector<ComboCosts>& combos,
                               const TableF& tb, int i, int j) {
  std::vector<int> counts(e.n());
  for (int k = e.n(); k >= 1; --k) {
    int p = tb.pick[tb.idx(k, i, j)];
    int a = p / 2, b = p % 2;
    counts[k - 1] = combos[k - 1].count[a][b];
    i -= a;
    j -= b;
  }
  return counts;
}

// The classic-Fallback variant with the extra dimension r = number of the
// first k voters approving the despised candidate in top t-1.
struct ComboCosts3 {
  Cost cost[2][2][2];
  int count[2][2][2];
};

std::vector<ComboCosts3> combo_costs3(const Election& e, const SupportCostProfile& costs,
                                      int challenger, int despised, int t) {
  std::vector<ComboCosts3> out(e.n());
  for (int v = 0; v < e.n(); ++v) {
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int r = 0; r < 2; ++r) {
          out[v].cost[a][b][r] = Cost::infinite();
          out[v].count[a][b][r] = kNone;
        }
    int qc = rank(e, challenger, v);
    int qd = rank(e, despised, v);
    for (int kappa = 0; kappa <= e.m(); ++kappa) {
      Cost c = costs.values[v][kappa];
      if (c.is_infinite()) continue;
      int a = qc <= std::min(t, kappa) ? 1 : 0;
      int b = qd <= std::min(t, kappa) ? 1 : 0;
      int r = qd <= std::min(t - 1, kappa) ? 1 : 0;
      if (c < out[v].cost[a][b][r]) {
        out[v].cost[a][b][r] = c;
        out[v].count[a][b][r] = kappa;
      }
    }
  }
  return out;
}

struct TableF3 {
  int n;
  std::vector<Cost> f;
  std::vector<signed char> pick;  // a*4 + b*2 + r

  size_t idx(int k, int i, int j, int r) const {
    return ((static_cast<size_t>(k) * (n + 1) + i) * (n + 1) + j) * (n + 1) + r;
  }
};

TableF3 run_f3(const Election& e, const std::vector<ComboCosts3>& combos) {
  const int n = e.n();
  TableF3 tb;
  tb.n = n;
  tb.f.assign(static_cast<size_t>(n + 1) * (n + 1) * (n + 1) * (n + 1), Cost::infinite());
  tb.pick.assign(tb.f.size(), -1);
  tb.f[tb.idx(0, 0, 0, 0)] = 0;
  for (int k = 1; k <= n; ++k)
    for (int i = 0; i <= k; ++i)
      for (int j = 0; j <= k; ++j)
        for (int r = 0; r <= j; ++r) {
          Cost best = Cost::infinite();
          signed char best_pick = -1;
          for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
              for (int rr = 0; rr <= b; ++rr) {
                if (a > i || b > j || rr > r) continue;
                Cost prev = tb.f[tb.idx(k - 1, i - a, j - b, r - rr)];
                Cost c = combos[k - 1].cost[a][b][rr];
                if (prev.is_infinite() || c.is_infinite()) continue;
                Cost cand = prev + c;
                if (cand < best) {
                  best = cand;
                  best_pick = static_cast<signed char>(a * 4 + b * 2 + rr);
                }
              }
          tb.f[tb.idx(k, i, j, r)] = best;
          tb.pick[tb.idx(k, i, j, r)] = best_pick;
        }
  return tb;
}

std::vector<int> reconstruct_f3(const Election& e, const std::vector<ComboCosts3>& combos,
                                const TableF3& tb, int i, int j, int r) {
  std::vector<int> counts(e.n());
  for (int k = e.n(); k >= 1; --k) {
    int p = tb.pick[tb.idx(k, i, j, r)];
    int a = p / 4, b = (p / 2) % 2, rr = p % 2;
    counts[k - 1] = combos[k - 1].count[a][b][rr];
    i -= a;
    j -= b;
    r -= rr;
  }
  return counts;
}

}  // namespace

BriberySolution solve_destructive_support(const Election& e, const SupportCostProfile& costs,
                                          const RuleId& rule) {
  validate(e);
  validate(e, costs);
  if (rule.kind != RuleKind::spav && !rule.is_fallback())
    throw std::invalid_argument("solve_destructive_support: unsupported rule");
  const int n = e.n(), m = e.m(), d = e.designated, maj = e.majority();

  auto finish = [&](const PushAction& act) {
    BriberySolution sol;
    sol.action = act;
    sol.cost = support_cost(e, costs, act);
    sol.certificate = winners(apply_push(e, act), rule);
    return sol;
  };

  if (!winners(e, rule).contains(d)) return finish(PushAction{std::vector<int>(n, 0)});

  DestructiveBest best;
  auto offer = [&](Cost c, std::vector<int> counts) {
    if (c < best.cost) {
      best.cost = c;
      best.counts = std::move(counts);
    }
  };

  for (int challenger = 0; challenger < m; ++challenger) {
    if (challenger == d) continue;

    {  // Approval-total conditions (a) / (a'): use t = m.
      std::vector<ComboCosts> combos = combo_costs(e, costs, challenger, d, m);
      TableF tb = run_f(e, combos);
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
          if (i <= j) continue;
          if (rule.is_fallback() && j >= maj) continue;
          Cost c = tb.f[tb.idx(n, i, j)];
          if (c < best.cost) offer(c, reconstruct_f(e, combos, tb, i, j));
        }
    }

    if (rule.kind == RuleKind::fallback_simplified) {  // condition (b)
      for (int t = 1; t <= m; ++t) {
        std::vector<ComboCosts> combos = combo_costs(e, costs, challenger, d, t);
        TableF tb = run_f(e, combos);
        for (int i = maj; i <= n; ++i)
          for (int j = 0; j < maj; ++j) {
            Cost c = tb.f[tb.idx(n, i, j)];
            if (c < best.cost) offer(c, reconstruct_f(e, combos, tb, i, j));
          }
      }
    }

    if (rule.kind == RuleKind::fallback) {  // condition (b')
      for (int t = 1; t <= m; ++t) {
        std::vector<ComboCosts3> combos = combo_costs3(e, costs, challenger, d, t);
        TableF3 tb = run_f3(e, combos);
        for (int i = maj; i <= n; ++i)
          for (int j = 0; j < i; ++j)
            for (int r = 0; r <= j && r < maj; ++r) {
              Cost c = tb.f[tb.idx(n, i, j, r)];
              if (c < best.cost) offer(c, reconstruct_f3(e, combos, tb, i, j, r));
            }
      }
    }
  }

  if (best.cost.is_infinite()) {
    BriberySolution sol;
    sol.action = PushAction{std::vector<int>(n, 0)};
    sol.cost = Cost::infinite();
    sol.certificate = winners(e, rule);
    return sol;
  }
  PushAction act{std::vector<int>(n, 0)};
  for (int v = 0; v < n; ++v) act.deltas[v] = best.counts[v] - e.voters[v].approval_count;
  return finish(act);
}

}  // namespace campaign
