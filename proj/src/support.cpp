#include "campaign/support.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "campaign/flow.hpp"
#include "campaign/rng.hpp"
#include "campaign/support_internal.hpp"

namespace campaign {

Cost SupportCostProfile::at(const Election& e, int voter, int delta) const {
  int l = e.voters[voter].approval_count;
  int c = l + delta;
  if (c < 0 || c > e.m()) throw std::invalid_argument("support cost: delta outside domain");
  return values[voter][c];
}

bool SupportCostProfile::is_positive(const Election& e) const {
  for (int v = 0; v < n(); ++v)
    for (int c = 0; c < e.voters[v].approval_count; ++c)
      if (values[v][c].is_finite()) return false;
  return true;
}

bool SupportCostProfile::is_negative(const Election& e) const {
  for (int v = 0; v < n(); ++v)
    for (int c = e.voters[v].approval_count + 1; c <= e.m(); ++c)
      if (values[v][c].is_finite()) return false;
  return true;
}

bool SupportCostProfile::is_unit(const Election& e) const {
  for (int v = 0; v < n(); ++v)
    for (int c = 0; c <= e.m(); ++c)
      if (values[v][c] != Cost(std::abs(c - e.voters[v].approval_count))) return false;
  return true;
}

void validate(const Election& e, const SupportCostProfile& costs) {
  if (costs.n() != e.n()) throw std::invalid_argument("support costs: row count != voter count");
  for (int v = 0; v < e.n(); ++v) {
    const auto& row = costs.values[v];
    if (static_cast<int>(row.size()) != e.m() + 1)
      throw std::invalid_argument("support costs: row length != m+1");
    int l = e.voters[v].approval_count;
    if (row[l] != Cost(0)) throw std::invalid_argument("support costs: sigma(0) != 0");
    for (int c = l + 1; c <= e.m(); ++c)
      if (row[c] < row[c - 1]) throw std::invalid_argument("support costs: sigma not monotone");
    for (int c = l - 1; c >= 0; --c)
      if (row[c] < row[c + 1]) throw std::invalid_argument("support costs: sigma not monotone");
  }
}

Cost support_cost(const Election& e, const SupportCostProfile& costs, const PushAction& action) {
  if (costs.n() != static_cast<int>(action.deltas.size()))
    throw std::invalid_argument("support_cost: dimension mismatch");
  Cost total = 0;
  for (int v = 0; v < costs.n(); ++v) total += costs.at(e, v, action.deltas[v]);
  return total;
}

namespace detail {

PushEval::PushEval(const Election& e, const RuleId& rule, const std::vector<int>& min_count,
                   const std::vector<int>& max_count)
    : e_(&e), rule_(rule), maj_(e.majority()) {
  const int n = e.n(), m = e.m();
  pos_.assign(n, std::vector<int>(m));
  for (int v = 0; v < n; ++v)
    for (int j = 0; j < m; ++j) pos_[v][e.voters[v].preference[j]] = j + 1;
  // A candidate matters only if it can ever reach a majority or ever hold at
  // least as many approvals as the designated candidate is guaranteed.
  int des = e.designated;
  int guaranteed = 0;
  for (int v = 0; v < n; ++v)
    if (pos_[v][des] <= min_count[v]) ++guaranteed;
  for (int c = 0; c < m; ++c) {
    if (c == des) {
      relevant_.push_back(c);
      continue;
    }
    int upper = 0;
    for (int v = 0; v < n; ++v)
      if (pos_[v][c] <= max_count[v]) ++upper;
    bool rounds = rule.uses_rounds();
    if ((rounds && upper >= maj_) || upper >= guaranteed) relevant_.push_back(c);
  }
  scratch_.resize(n);
}

bool PushEval::designated_wins(const std::vector<int>& counts) const {
  return outcome(counts, e_->designated);
}

bool PushEval::outcome(const std::vector<int>& counts, int target) const {
  const int n = e_->n();
  const int inf_pos = e_->m() + 1;
  if (!rule_.uses_rounds()) {
    int best = 0, mine = 0;
    for (int c : relevant_) {
      int cnt = 0;
      for (int v = 0; v < n; ++v)
        if (pos_[v][c] <= counts[v]) ++cnt;
      best = std::max(best, cnt);
      if (c == target) mine = cnt;
    }
    return mine == best;
  }
  int k_b = inf_pos;
  for (int c : relevant_) {
    int finite = 0;
    for (int v = 0; v < n; ++v) {
      int ev = pos_[v][c] <= std::min(counts[v], e_->m()) ? pos_[v][c] : inf_pos;
      scratch_[v] = ev;
      if (ev < inf_pos) ++finite;
    }
    if (finite < maj_) continue;
    std::nth_element(scratch_.begin(), scratch_.begin() + maj_ - 1, scratch_.end());
    k_b = std::min(k_b, scratch_[maj_ - 1]);
  }
  auto count_up_to = [&](int c, int bound) {
    int cnt = 0;
    for (int v = 0; v < n; ++v)
      if (pos_[v][c] <= std::min(counts[v], bound)) ++cnt;
    return cnt;
  };
  if (k_b < inf_pos) {
    if (rule_.kind == RuleKind::fallback_simplified)
      return count_up_to(target, k_b) >= maj_;
    int best = 0, mine = 0;
    for (int c : relevant_) {
      int cnt = count_up_to(c, k_b);
      best = std::max(best, cnt);
      if (c == target) mine = cnt;
    }
    return mine == best;
  }
  int best = 0, mine = 0;
  for (int c : relevant_) {
    int cnt = count_up_to(c, e_->m());
    best = std::max(best, cnt);
    if (c == target) mine = cnt;
  }
  return mine == best;
}

}  // namespace detail

namespace {

BriberySolution make_push_solution(const SupportInstance& inst, const PushAction& action) {
  BriberySolution sol;
  sol.action = action;
  Cost total = 0;
  for (int v = 0; v < inst.election.n(); ++v) total += inst.costs.at(inst.election, v, action.deltas[v]);
  sol.cost = total;
  sol.certificate = winners(apply_push(inst.election, action), inst.rule);
  return sol;
}

BriberySolution infeasible_push(const SupportInstance& inst) {
  BriberySolution sol;
  sol.action = PushAction{std::vector<int>(inst.election.n(), 0)};
  sol.cost = Cost::infinite();
  sol.certificate = winners(inst.election, inst.rule);
  return sol;
}

bool push_succeeds(const SupportInstance& inst, const PushAction& action) {
  return winners(apply_push(inst.election, action), inst.rule).contains(inst.election.designated);
}

struct VoterOptions {
  std::vector<int> counts;  // reachable counts, ascending; cost finite
};

// Finite-cost options per voter; enumeration over infinite moves is useless.
std::vector<VoterOptions> finite_options(const SupportInstance& inst, double guard) {
  const Election& e = inst.election;
  std::vector<VoterOptions> opts(e.n());
  double combos = 1;
  for (int v = 0; v < e.n(); ++v) {
    for (int c = 0; c <= e.m(); ++c)
      if (inst.costs.values[v][c].is_finite()) opts[v].counts.push_back(c);
    combos *= static_cast<double>(opts[v].counts.size());
    if (combos > guard)
      throw std::runtime_error("support enumeration: guard exceeded");
  }
  return opts;
}

template <typename Found>
void enumerate_pushes(const SupportInstance& inst, const std::vector<VoterOptions>& opts,
                      const detail::PushEval& eval, bool want_loser, Found&& found) {
  const Election& e = inst.election;
  const int n = e.n();
  std::vector<int> counts(n);
  Cost best = Cost::infinite();
  auto rec = [&](auto&& self, int v, Cost acc) -> void {
    if (acc > best) return;
    if (v == n) {
      bool des_wins = eval.designated_wins(counts);
      if (des_wins == want_loser) return;
      found(counts, acc, best);
      return;
    }
    for (int c : opts[v].counts) {
      counts[v] = c;
      self(self, v + 1, acc + inst.costs.values[v][c]);
    }
  };
  rec(rec, 0, 0);
}

BriberySolution brute_force_common(const SupportInstance& inst, bool destructive) {
  validate(inst.election);
  validate(inst.election, inst.costs);
  std::vector<VoterOptions> opts = finite_options(inst, 1e7);
  std::vector<int> min_count(inst.election.n()), max_count(inst.election.n());
  for (int v = 0; v < inst.election.n(); ++v) {
    min_count[v] = opts[v].counts.front();
    max_count[v] = opts[v].counts.back();
  }
  detail::PushEval eval(inst.election, inst.rule, min_count, max_count);
  std::vector<int> best_counts;
  bool any = false;
  Cost best_cost = Cost::infinite();
  enumerate_pushes(inst, opts, eval, destructive,
                   [&](const std::vector<int>& counts, Cost acc, Cost& best) {
                     if (acc < best_cost) {
                       best_cost = acc;
                       best_counts = counts;
                       best = acc;
                       any = true;
                     }
                   });
  if (!any) return infeasible_push(inst);
  PushAction act{std::vector<int>(inst.election.n(), 0)};
  for (int v = 0; v < inst.election.n(); ++v)
    act.deltas[v] = best_counts[v] - inst.election.voters[v].approval_count;
  return make_push_solution(inst, act);
}

}  // namespace

BriberySolution brute_force_support(const SupportInstance& inst) {
  return brute_force_common(inst, false);
}

BriberySolution brute_force_destructive(const SupportInstance& inst) {
  return brute_force_common(inst, true);
}

bool is_minimal_push(const SupportInstance& inst, const PushAction& action) {
  if (!push_succeeds(inst, action))
    throw std::invalid_argument("is_minimal_push: action does not make p a winner");
  const int n = inst.election.n();
  double combos = 1;
  for (int t : action.deltas) {
    combos *= std::abs(t) + 1;
    if (combos > 1e7) throw std::runtime_error("is_minimal_push: enumeration guard exceeded");
  }
  PushAction cur{std::vector<int>(n, 0)};
  auto rec = [&](auto&& self, int i, bool smaller) -> bool {
    if (i == n) return smaller && push_succeeds(inst, cur);
    int hi = std::abs(action.deltas[i]);
    int sign = action.deltas[i] >= 0 ? 1 : -1;
    for (int t = 0; t <= hi; ++t) {
      cur.deltas[i] = sign * t;
      if (self(self, i + 1, smaller || t < hi)) return true;
    }
    return false;
  };
  return !rec(rec, 0, false);
}

PushAction minimalize_push(const SupportInstance& inst, const PushAction& action) {
  if (!push_succeeds(inst, action))
    throw std::invalid_argument("minimalize_push: action does not make p a winner");
  PushAction cur = action;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < inst.election.n(); ++i) {
      while (cur.deltas[i] != 0) {
        int step = cur.deltas[i] > 0 ? -1 : 1;
        cur.deltas[i] += step;
        if (push_succeeds(inst, cur)) {
          changed = true;
        } else {
          cur.deltas[i] -= step;
          break;
        }
      }
    }
  }
  while (!is_minimal_push(inst, cur)) {
    const int n = inst.election.n();
    PushAction probe{std::vector<int>(n, 0)};
    auto rec = [&](auto&& self, int i, bool smaller) -> bool {
      if (i == n) return smaller && push_succeeds(inst, probe);
      int hi = std::abs(cur.deltas[i]);
      int sign = cur.deltas[i] >= 0 ? 1 : -1;
      for (int t = 0; t <= hi; ++t) {
        probe.deltas[i] = sign * t;
        if (self(self, i + 1, smaller || t < hi)) return true;
      }
      return false;
    };
    if (!rec(rec, 0, false)) break;
    cur = probe;
  }
  return cur;
}

std::optional<ParamStats> compute_parameters(const SupportInstance& inst) {
  validate(inst.election);
  validate(inst.election, inst.costs);
  const Election& e = inst.election;
  std::vector<VoterOptions> opts = finite_options(inst, 2e7);
  std::vector<int> min_count(e.n()), max_count(e.n());
  for (int v = 0; v < e.n(); ++v) {
    min_count[v] = opts[v].counts.front();
    max_count[v] = opts[v].counts.back();
  }
  detail::PushEval eval(e, inst.rule, min_count, max_count);

  Cost opt = Cost::infinite();
  enumerate_pushes(inst, opts, eval, false,
                   [&](const std::vector<int>&, Cost acc, Cost& best) {
                     if (acc < opt) {
                       opt = acc;
                       best = acc;
                     }
                   });
  if (opt.is_infinite()) return std::nullopt;

  std::vector<std::vector<int>> optimal;  // count vectors of optimal successes
  {
    const int n = e.n();
    std::vector<int> counts(n);
    auto rec = [&](auto&& self, int v, Cost acc) -> void {
      if (acc > opt) return;
      if (v == n) {
        if (eval.designated_wins(counts) && acc == opt) {
          optimal.push_back(counts);
          if (optimal.size() > 500000)
            throw std::runtime_error("compute_parameters: too many optimal actions");
        }
        return;
      }
      for (int c : opts[v].counts) {
        counts[v] = c;
        self(self, v + 1, acc + inst.costs.values[v][c]);
      }
    };
    rec(rec, 0, 0);
  }

  // Keep the minimal ones: no componentwise move toward the original counts
  // may stay successful.
  std::vector<int> probe(e.n());
  auto has_successful_reduction = [&](const std::vector<int>& counts) {
    auto rec = [&](auto&& self, int v, bool smaller) -> bool {
      if (v == e.n()) return smaller && eval.designated_wins(probe);
      int base = e.voters[v].approval_count;
      int from = std::min(base, counts[v]), to = std::max(base, counts[v]);
      for (int c = from; c <= to; ++c) {
        probe[v] = c;
        if (self(self, v + 1, smaller || c != counts[v])) return true;
      }
      return false;
    };
    return rec(rec, 0, false);
  };

  ParamStats stats;
  int beta_prime = -1;
  for (const std::vector<int>& counts : optimal) {
    if (has_successful_reduction(counts)) continue;
    int bribed = 0, total = 0;
    for (int v = 0; v < e.n(); ++v) {
      int d = std::abs(counts[v] - e.voters[v].approval_count);
      if (d > 0) ++bribed;
      total += d;
    }
    stats.alpha = std::max(stats.alpha, bribed);
    stats.beta = std::max(stats.beta, total);
    beta_prime = beta_prime < 0 ? total : std::min(beta_prime, total);
  }
  if (beta_prime < 0) return std::nullopt;  // cannot happen: some optimum is minimal
  stats.beta_prime = beta_prime;
  return stats;
}

// ---------------------------------------------------------------------------
// Negative cost functions: bounded search tree over (voter, decrement)
// equivalence classes.
// ---------------------------------------------------------------------------

namespace {

struct NegPair {
  int voter;
  int t;  // decrement
  Cost cost;
  std::vector<signed char> effect;  // per relevant rival: 0 none, 1 late, 2 both rounds
  bool hits_p;
};

struct NegSearch {
  const SupportInstance& inst;
  const std::vector<int>& rivals;
  std::vector<std::vector<const NegPair*>> classes;  // sorted by cost within
  int budget;
  int p_budget;
  std::vector<int> need1, need2;
  std::vector<char> used_voter;
  std::vector<int> chosen_count;
  Cost best_cost = Cost::infinite();
  std::vector<int> best_counts;
  Cost cur_cost = 0;
  std::vector<char> pair_used;

  bool needs_met() const {
    for (size_t i = 0; i < need1.size(); ++i)
      if (need1[i] > 0 || need2[i] > 0) return false;
    return true;
  }

  bool prune_infeasible() const {
    for (size_t r = 0; r < need1.size(); ++r) {
      for (int round = 0; round < 2; ++round) {
        int need = round == 0 ? need1[r] : need2[r];
        if (need <= 0) continue;
        int min_t = -1;
        for (const auto& cls : classes)
          for (const NegPair* pr : cls) {
            signed char eff = pr->effect[r];
            bool helps = round == 0 ? eff == 2 : eff >= 1;
            if (!helps || used_voter[pr->voter] || pr->t > budget) continue;
            if (pr->hits_p && p_budget < 1) continue;
            if (min_t < 0 || pr->t < min_t) min_t = pr->t;
          }
        if (min_t < 0 || static_cast<long long>(min_t) * need > budget) return true;
      }
    }
    return false;
  }

  void record(const detail::PushEval& eval) {
    if (cur_cost >= best_cost) return;
    std::vector<int> counts(inst.election.n());
    for (int v = 0; v < inst.election.n(); ++v) counts[v] = chosen_count[v];
    if (!eval.designated_wins(counts)) return;
    best_cost = cur_cost;
    best_counts = counts;
  }

  void dfs(const detail::PushEval& eval) {
    if (needs_met()) {
      record(eval);
      return;
    }
    if (cur_cost >= best_cost) return;
    if (prune_infeasible()) return;
    for (const auto& cls : classes) {
      const NegPair* pick = nullptr;
      for (const NegPair* pr : cls) {
        if (used_voter[pr->voter] || pr->t > budget) continue;
        if (pr->hits_p && p_budget < 1) continue;
        pick = pr;
        break;
      }
      if (!pick) continue;
      bool useful = false;
      for (size_t r = 0; r < need1.size(); ++r) {
        if (need1[r] > 0 && pick->effect[r] == 2) useful = true;
        if (need2[r] > 0 && pick->effect[r] >= 1) useful = true;
      }
      if (!useful) continue;
      // apply
      used_voter[pick->voter] = 1;
      int saved = chosen_count[pick->voter];
      chosen_count[pick->voter] = inst.election.voters[pick->voter].approval_count - pick->t;
      budget -= pick->t;
      if (pick->hits_p) --p_budget;
      Cost saved_cost = cur_cost;
      cur_cost += pick->cost;
      for (size_t r = 0; r < need1.size(); ++r) {
        if (pick->effect[r] == 2) --need1[r];
        if (pick->effect[r] >= 1) --need2[r];
      }
      dfs(eval);
      for (size_t r = 0; r < need1.size(); ++r) {
        if (pick->effect[r] == 2) ++need1[r];
        if (pick->effect[r] >= 1) ++need2[r];
      }
      cur_cost = saved_cost;
      if (pick->hits_p) ++p_budget;
      budget += pick->t;
      chosen_count[pick->voter] = saved;
      used_voter[pick->voter] = 0;
    }
  }
};

}  // namespace

BriberySolution solve_support_negative_fpt(const SupportInstance& inst, int beta_prime) {
  validate(inst.election);
  validate(inst.election, inst.costs);
  if (!inst.costs.is_negative(inst.election))
    throw std::invalid_argument("solve_support_negative_fpt: cost profile is not negative");
  if (!inst.rule.uses_rounds() && inst.rule.kind != RuleKind::spav)
    throw std::invalid_argument("solve_support_negative_fpt: unsupported rule");
  const Election& e = inst.election;
  const int n = e.n(), m = e.m(), p = e.designated, maj = e.majority();

  if (winners(e, inst.rule).contains(p))
    return make_push_solution(inst, PushAction{std::vector<int>(n, 0)});
  if (beta_prime <= 0) return infeasible_push(inst);

  std::vector<int> min_count(n), max_count(n);
  for (int v = 0; v < n; ++v) {
    min_count[v] = e.voters[v].approval_count;
    for (int c = e.voters[v].approval_count; c >= 0; --c)
      if (inst.costs.values[v][c].is_finite()) min_count[v] = c;
    max_count[v] = e.voters[v].approval_count;
  }
  detail::PushEval eval(e, inst.rule, min_count, max_count);

  // Rounds where p's truncated score grows (winning can only happen there),
  // then the extra round, encoded as round 0.
  std::vector<int> guess_rounds;
  if (inst.rule.uses_rounds()) {
    std::vector<int> e_p;
    for (int v = 0; v < n; ++v) {
      int q = rank(e, p, v);
      if (q <= e.voters[v].approval_count) e_p.push_back(q);
    }
    std::sort(e_p.begin(), e_p.end());
    if (static_cast<int>(e_p.size()) >= maj) {
      int l0 = e_p[maj - 1];
      guess_rounds.push_back(l0);
      int extra = 0;
      for (size_t i = maj; i < e_p.size() && extra < beta_prime; ++i)
        if (e_p[i] != e_p[i - 1] && e_p[i] > l0) {
          guess_rounds.push_back(e_p[i]);
          ++extra;
        }
    }
  }
  guess_rounds.push_back(0);  // extra round

  std::vector<int> approvals = approval_scores(e);
  Cost best_cost = Cost::infinite();
  std::vector<int> best_counts;

  for (int round : guess_rounds) {
    std::vector<int> s_l, s_prev;
    int j1, j2;
    if (round == 0) {
      s_l = approvals;
      s_prev = approvals;
      j1 = inst.rule.uses_rounds() ? m : 0;
      j2 = m;
    } else {
      s_l = truncated_round_scores(e, round);
      s_prev = round >= 2 ? truncated_round_scores(e, round - 1) : std::vector<int>(m, 0);
      j1 = round - 1;
      j2 = round;
    }
    for (int dp = 0; dp <= beta_prime; ++dp) {
      if (round != 0 && s_l[p] - dp < maj) continue;
      if (s_l[p] - dp < 0) continue;
      std::vector<int> rivals;
      std::vector<int> need1, need2;
      bool ok = true;
      for (int c = 0; c < m; ++c) {
        if (c == p) continue;
        int d1 = j1 >= 1 ? std::max(0, s_prev[c] - n / 2) : 0;
        if (round == 0 && inst.rule.uses_rounds()) d1 = std::max(0, s_l[c] - n / 2);
        int d2 = std::max(d1, s_l[c] - (s_l[p] - dp));
        if (inst.rule.kind == RuleKind::fallback_simplified && round != 0) d2 = d1;
        if (d2 <= 0) continue;
        rivals.push_back(c);
        need1.push_back(d1);
        need2.push_back(d2);
      }
      if (static_cast<int>(rivals.size()) > beta_prime) continue;

      // Build pairs and their equivalence classes.
      std::vector<NegPair> pairs;
      for (int v = 0; v < n; ++v) {
        int lv = e.voters[v].approval_count;
        for (int t = 1; t <= std::min(lv, beta_prime); ++t) {
          Cost c = inst.costs.values[v][lv - t];
          if (c.is_infinite()) continue;
          NegPair pr;
          pr.voter = v;
          pr.t = t;
          pr.cost = c;
          pr.hits_p = false;
          int kappa = lv - t;
          int qp = rank(e, p, v);
          if (qp <= std::min(j2, lv) && qp > kappa) pr.hits_p = true;
          bool any = false;
          pr.effect.resize(rivals.size(), 0);
          for (size_t r = 0; r < rivals.size(); ++r) {
            int q = rank(e, rivals[r], v);
            bool loss2 = q <= std::min(j2, lv) && q > kappa;
            bool loss1 = q <= std::min(j1, lv) && q > kappa;
            pr.effect[r] = loss1 ? 2 : (loss2 ? 1 : 0);
            if (pr.effect[r] != 0) any = true;
          }
          if (any) pairs.push_back(std::move(pr));
        }
      }
      std::map<std::vector<signed char>, std::vector<const NegPair*>> grouped;
      for (const NegPair& pr : pairs) {
        std::vector<signed char> key = pr.effect;
        key.push_back(pr.hits_p ? 1 : 0);
        grouped[key].push_back(&pr);
      }
      NegSearch search{inst, rivals};
      for (auto& [key, vec] : grouped) {
        std::stable_sort(vec.begin(), vec.end(), [](const NegPair* a, const NegPair* b) {
          if (a->cost != b->cost) return a->cost < b->cost;
          if (a->voter != b->voter) return a->voter < b->voter;
          return a->t < b->t;
        });
        search.classes.push_back(vec);
      }
      search.budget = beta_prime;
      search.p_budget = dp;
      search.need1 = need1;
      search.need2 = need2;
      search.used_voter.assign(n, 0);
      search.chosen_count.resize(n);
      for (int v = 0; v < n; ++v) search.chosen_count[v] = e.voters[v].approval_count;
      search.best_cost = best_cost;
      search.dfs(eval);
      if (search.best_cost < best_cost) {
        best_cost = search.best_cost;
        best_counts = search.best_counts;
      }
    }
  }

  if (best_cost.is_infinite()) return infeasible_push(inst);
  PushAction act{std::vector<int>(n, 0)};
  for (int v = 0; v < n; ++v) act.deltas[v] = best_counts[v] - e.voters[v].approval_count;
  return make_push_solution(inst, act);
}

// ---------------------------------------------------------------------------
// Positive cost functions.
// ---------------------------------------------------------------------------

namespace {

struct Buyable {
  int voter;
  int t;  // rank(p) - approval count
  Cost price;
};

// Exact search over sets of bought voters; minimal positive briberies set
// each bribed voter's count to the rank of p, so subsets are the whole
// action space. Returns false when the node budget is exhausted.
bool positive_exact(const SupportInstance& inst, const std::vector<Buyable>& buyable,
                    int beta_prime, Cost& best_cost, std::vector<int>& best_set) {
  long long nodes = 0;
  const long long node_budget = 400000;
  std::vector<int> chosen;
  bool aborted = false;
  auto rec = [&](auto&& self, size_t i, int budget, Cost acc) -> void {
    if (aborted) return;
    if (++nodes > node_budget) {
      aborted = true;
      return;
    }
    if (acc >= best_cost) {
    } else {
      PushAction act{std::vector<int>(inst.election.n(), 0)};
      for (int idx : chosen) act.deltas[buyable[idx].voter] = buyable[idx].t;
      if (winners(apply_push(inst.election, act), inst.rule).contains(inst.election.designated)) {
        best_cost = acc;
        best_set = chosen;
      }
    }
    for (size_t j = i; j < buyable.size(); ++j) {
      if (buyable[j].t > budget) continue;
      chosen.push_back(static_cast<int>(j));
      self(self, j + 1, budget - buyable[j].t, acc + buyable[j].price);
      chosen.pop_back();
    }
  };
  rec(rec, 0, beta_prime, Cost(0));
  return !aborted;
}

}  // namespace

BriberySolution solve_support_positive_fpt(const SupportInstance& inst, int beta_prime,
                                           std::uint64_t seed, int trials) {
  validate(inst.election);
  validate(inst.election, inst.costs);
  if (!inst.costs.is_positive(inst.election))
    throw std::invalid_argument("solve_support_positive_fpt: cost profile is not positive");
  if (!inst.rule.uses_rounds() && inst.rule.kind != RuleKind::spav)
    throw std::invalid_argument("solve_support_positive_fpt: unsupported rule");
  const Election& e = inst.election;
  const int n = e.n(), m = e.m(), p = e.designated, maj = e.majority();

  if (winners(e, inst.rule).contains(p))
    return make_push_solution(inst, PushAction{std::vector<int>(n, 0)});
  if (beta_prime <= 0) return infeasible_push(inst);

  std::vector<Buyable> buyable;
  for (int v = 0; v < n; ++v) {
    int t = rank(e, p, v) - e.voters[v].approval_count;
    if (t <= 0 || t > beta_prime) continue;
    Cost price = inst.costs.values[v][rank(e, p, v)];
    if (price.is_infinite()) continue;
    buyable.push_back({v, t, price});
  }

  Cost best_cost = Cost::infinite();
  std::vector<int> best_set;
  if (positive_exact(inst, buyable, beta_prime, best_cost, best_set)) {
    if (best_cost.is_infinite()) return infeasible_push(inst);
    PushAction act{std::vector<int>(n, 0)};
    for (int idx : best_set) act.deltas[buyable[idx].voter] = buyable[idx].t;
    return make_push_solution(inst, act);
  }

  // Color-coding path for instances too large for the exact search.
  if (trials <= 0) {
    double t = 3.0 * std::pow(beta_prime + 1, beta_prime);
    trials = t > 10000 ? 10000 : static_cast<int>(std::ceil(t));
  }
  std::vector<int> s_total = approval_scores(e);
  best_cost = Cost::infinite();
  PushAction best_act{std::vector<int>(n, 0)};
  bool have_best = false;

  std::vector<int> rounds;
  if (inst.rule.uses_rounds())
    for (int l = 1; l <= m; ++l) rounds.push_back(l);
  rounds.push_back(0);  // extra round

  for (int round : rounds) {
    std::vector<int> s_l = round == 0 ? s_total : truncated_round_scores(e, round);
    std::vector<int> s_prev;
    if (round == 0)
      s_prev = s_total;
    else
      s_prev = round >= 2 ? truncated_round_scores(e, round - 1) : std::vector<int>(m, 0);

    for (int dp = 1; dp <= beta_prime; ++dp) {
      if (round != 0 && s_l[p] + dp < maj) continue;
      int cap_p = round != 0 ? n / 2 - s_prev[p] : beta_prime;  // early points p may take
      if (cap_p < 0) continue;
      // Allowed gains per rival.
      std::vector<int> delta_c(m, 0);
      bool feasible = true;
      for (int c = 0; c < m && feasible; ++c) {
        if (c == p) continue;
        int cap = beta_prime;
        if (round != 0 && inst.rule.uses_rounds()) {
          cap = std::min(cap, n / 2 - s_prev[c]);
          if (inst.rule.kind == RuleKind::fallback)
            cap = std::min(cap, s_l[p] + dp - s_l[c]);
        } else {
          cap = std::min(cap, s_total[p] + dp - s_total[c]);
          if (inst.rule.uses_rounds()) cap = std::min(cap, n / 2 - s_total[c]);
        }
        delta_c[c] = cap;
        if (cap < 0) feasible = false;
      }
      if (!feasible) continue;

      // Multisets t[1..dp] of positive integers summing to beta'.
      std::vector<std::vector<int>> multisets;
      std::vector<int> cur;
      auto gen = [&](auto&& self, int remaining, int parts, int minv) -> void {
        if (parts == 0) {
          if (remaining == 0) multisets.push_back(cur);
          return;
        }
        for (int v = minv; v <= remaining - (parts - 1); ++v) {
          cur.push_back(v);
          self(self, remaining - v, parts - 1, v);
          cur.pop_back();
        }
      };
      gen(gen, beta_prime, dp, 1);

      for (const std::vector<int>& ts : multisets) {
        // Candidates that can gain approvals from a buy, plus p.
        std::vector<int> colorable_cands;
        std::vector<char> cand_mark(m, 0);
        cand_mark[p] = 1;
        for (const Buyable& b : buyable) {
          int lv = e.voters[b.voter].approval_count;
          int rp = lv + b.t;
          for (int pos = lv + 1; pos < rp; ++pos) {
            int c = e.voters[b.voter].preference[pos - 1];
            if (!cand_mark[c]) {
              cand_mark[c] = 1;
              colorable_cands.push_back(c);
            }
          }
        }

        int horizon = round == 0 ? m : (inst.rule.kind == RuleKind::fallback ? round : round - 1);

        auto run_coloring = [&](const std::vector<unsigned>& color_sets) {
          // color_sets indexed by candidate; bit x = color x+1 assigned.
          if (static_cast<int>(__builtin_popcount(color_sets[p])) > cap_p) return;
          for (int c : colorable_cands)
            if (static_cast<int>(__builtin_popcount(color_sets[c])) > delta_c[c]) return;
          // Admissible colors per buyable voter.
          std::vector<std::vector<Cost>> weights(buyable.size(), std::vector<Cost>(dp, Cost::infinite()));
          for (size_t bi = 0; bi < buyable.size(); ++bi) {
            const Buyable& b = buyable[bi];
            int lv = e.voters[b.voter].approval_count;
            int rp = lv + b.t;
            if (round != 0 && rp > round) continue;  // p must gain by round l
            for (int x = 0; x < dp; ++x) {
              if (ts[x] != b.t) continue;
              if (round != 0 && rp < round && !(color_sets[p] >> x & 1)) continue;
              bool ok = true;
              for (int pos = lv + 1; pos < rp && ok; ++pos) {
                int c = e.voters[b.voter].preference[pos - 1];
                if (pos <= horizon && !(color_sets[c] >> x & 1)) ok = false;
              }
              if (ok) weights[bi][x] = b.price;
            }
          }
          if (buyable.empty()) return;
          auto match = min_weight_bipartite_matching(weights);
          if (!match || static_cast<int>(match->first.size()) < dp) return;
          if (match->second >= best_cost) return;
          PushAction act{std::vector<int>(n, 0)};
          for (auto [bi, x] : match->first) act.deltas[buyable[bi].voter] = buyable[bi].t;
          if (!push_succeeds(inst, act)) return;
          Cost total = match->second;
          if (total < best_cost) {
            best_cost = total;
            best_act = act;
            have_best = true;
          }
        };

        int involved = static_cast<int>(colorable_cands.size()) + 1;
        double exhaustive = std::pow(std::pow(2.0, dp), involved);
        if (exhaustive <= 100000.0) {
          std::vector<unsigned> sets(m, 0);
          std::vector<int> order = colorable_cands;
          order.push_back(p);
          auto enum_sets = [&](auto&& self, size_t i) -> void {
            if (i == order.size()) {
              run_coloring(sets);
              return;
            }
            for (unsigned s = 0; s < (1u << dp); ++s) {
              sets[order[i]] = s;
              self(self, i + 1);
            }
          };
          enum_sets(enum_sets, 0);
        } else {
          for (int trial = 0; trial < trials; ++trial) {
            Rng rng(Rng::child_seed(seed, trial));
            std::vector<unsigned> sets(m, 0);
            for (int c : colorable_cands) sets[c] = static_cast<unsigned>(rng.next_u64() & ((1u << dp) - 1));
            sets[p] = static_cast<unsigned>(rng.next_u64() & ((1u << dp) - 1));
            run_coloring(sets);
          }
        }
      }
    }
  }

  if (!have_best) return infeasible_push(inst);
  return make_push_solution(inst, best_act);
}

BriberySolution solve_support_fpt(const SupportInstance& inst, int max_beta_prime,
                                  std::uint64_t seed, int trials) {
  validate(inst.election);
  validate(inst.election, inst.costs);
  bool neg = inst.costs.is_negative(inst.election);
  bool pos = inst.costs.is_positive(inst.election);
  if (!neg && !pos)
    throw std::invalid_argument("solve_support_fpt: mixed-sign cost profile");
  BriberySolution best = infeasible_push(inst);
  for (int b = 0; b <= max_beta_prime; ++b) {
    BriberySolution sol = neg ? solve_support_negative_fpt(inst, b)
                              : solve_support_positive_fpt(inst, b, seed, trials);
    if (sol.cost < best.cost) best = std::move(sol);
    if (best.cost == Cost(0)) break;
  }
  return best;
}

}  // namespace campaign
