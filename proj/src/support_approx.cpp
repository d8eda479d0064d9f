#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>

#include "campaign/rng.hpp"
#include "campaign/single_peaked.hpp"
#include "campaign/support.hpp"

namespace campaign {

namespace {

struct Interval {
  int lo = 1, hi = 0;  // axis positions; empty when lo > hi
  int len() const { return hi < lo ? 0 : hi - lo + 1; }
  bool empty() const { return hi < lo; }
  bool intersects(const Interval& o) const {
    return !empty() && !o.empty() && lo <= o.hi && o.lo <= hi;
  }
  friend bool operator==(const Interval& a, const Interval& b) {
    return (a.empty() && b.empty()) || (!a.empty() && !b.empty() && a.lo == b.lo && a.hi == b.hi);
  }
  friend bool operator<(const Interval& a, const Interval& b) {
    return std::pair(a.lo, a.hi) < std::pair(b.lo, b.hi);
  }
};

struct BuyInfo {
  int voter = 0;
  int t = 0;  // rank(p) - approval count
  Cost price;
  Interval base;    // newly approved axis interval containing p
  Interval shadow;  // the disjoint other piece, possibly empty
};

bool within_cap(Cost cost, Cost budget, int num, int den) {
  if (cost.is_infinite()) return false;
  return static_cast<__int128>(cost.value()) * den <=
         static_cast<__int128>(budget.value()) * (den + num);
}

bool price_expensive(Cost price, Cost budget, int num, int den) {
  return static_cast<__int128>(price.value()) * den >=
         static_cast<__int128>(budget.value()) * num;
}

struct ReductionPlan {
  Cost cost = 0;
  std::vector<std::pair<int, int>> decrements;  // (voter, t > 0)
};

// Bribe a subset of `pool` to lower each watched candidate's approval score
// by at least its need, removing at most p_allow of p's approvals and using
// at most `units` total decrement.
std::optional<ReductionPlan> reduction_dp(const SupportInstance& inst, int p,
                                          const std::vector<int>& pool,
                                          const std::vector<int>& watched,
                                          const std::vector<int>& needs, int p_allow, int units,
                                          long long& work, long long work_budget) {
  const Election& e = inst.election;
  const int w = static_cast<int>(watched.size());
  long long states = 1;
  std::vector<int> dims(w);
  for (int i = 0; i < w; ++i) {
    dims[i] = needs[i] + 1;
    states *= dims[i];
    if (states > 200000) return std::nullopt;
  }
  states *= static_cast<long long>(p_allow + 1) * (units + 1);
  if (states > 200000) return std::nullopt;
  if (static_cast<long long>(pool.size()) * states > 8000000) return std::nullopt;
  work += static_cast<long long>(pool.size() + 1) * states;
  if (work > work_budget) return std::nullopt;

  const Cost inf = Cost::infinite();
  std::vector<Cost> dp(states, inf), next(states, inf);
  std::vector<std::vector<std::int32_t>> parent(pool.size());
  std::vector<std::vector<signed char>> dec(pool.size());

  auto encode = [&](const std::vector<int>& rem, int pl, int un) {
    long long s = 0;
    for (int i = 0; i < w; ++i) s = s * dims[i] + rem[i];
    return (s * (p_allow + 1) + pl) * (units + 1) + un;
  };
  std::vector<int> rem(w);
  for (int i = 0; i < w; ++i) rem[i] = needs[i];
  dp[encode(rem, 0, 0)] = 0;

  std::vector<int> nrem(w);
  for (size_t vi = 0; vi < pool.size(); ++vi) {
    int v = pool[vi];
    int lv = e.voters[v].approval_count;
    int qp = rank(e, p, v);
    parent[vi].assign(states, -1);
    dec[vi].assign(states, 0);
    std::fill(next.begin(), next.end(), inf);
    for (long long s = 0; s < states; ++s) {
      if (dp[s].is_infinite()) continue;
      long long tmp = s;
      int un = static_cast<int>(tmp % (units + 1));
      tmp /= units + 1;
      int pl = static_cast<int>(tmp % (p_allow + 1));
      tmp /= p_allow + 1;
      for (int i = w - 1; i >= 0; --i) {
        rem[i] = static_cast<int>(tmp % dims[i]);
        tmp /= dims[i];
      }
      for (int t = 0; t + un <= units && t <= lv; ++t) {
        Cost c = inst.costs.values[v][lv - t];
        if (c.is_infinite()) continue;
        int npl = pl;
        if (t > 0 && qp <= lv && qp > lv - t) {
          if (pl + 1 > p_allow) break;  // deeper t keeps p removed
          npl = pl + 1;
        }
        for (int i = 0; i < w; ++i) {
          int q = rank(e, watched[i], v);
          bool hit = t > 0 && q <= lv && q > lv - t;
          nrem[i] = hit ? std::max(0, rem[i] - 1) : rem[i];
        }
        long long ns = encode(nrem, npl, un + t);
        Cost cand = dp[s] + c;
        if (cand < next[ns]) {
          next[ns] = cand;
          parent[vi][ns] = static_cast<std::int32_t>(s);
          dec[vi][ns] = static_cast<signed char>(t);
        }
      }
    }
    dp.swap(next);
  }

  std::fill(rem.begin(), rem.end(), 0);
  Cost best = inf;
  long long best_state = -1;
  for (int pl = 0; pl <= p_allow; ++pl)
    for (int un = 0; un <= units; ++un) {
      long long s = encode(rem, pl, un);
      if (dp[s] < best) {
        best = dp[s];
        best_state = s;
      }
    }
  if (best.is_infinite()) return std::nullopt;

  ReductionPlan plan;
  plan.cost = best;
  long long cur = best_state;
  for (int vi = static_cast<int>(pool.size()) - 1; vi >= 0; --vi) {
    if (pool.empty()) break;
    std::int32_t prev = parent[vi][cur];
    signed char t = dec[vi][cur];
    if (prev < 0) return std::nullopt;  // unreachable by construction
    if (t > 0) plan.decrements.push_back({pool[vi], t});
    cur = prev;
  }
  return plan;
}

struct GuessContext {
  const SupportInstance& inst;
  const Election& e;
  int p;
  int num, den;
  Cost budget;
  int beta_prime;
  std::uint64_t seed;
  int trials;
  std::uint64_t trial_counter = 0;
  long long work = 0;
  static constexpr long long kWorkBudget = 60'000'000;
  BriberySolution best;
  bool done = false;

  void consider(const std::vector<const BuyInfo*>& buys, const ReductionPlan& plan) {
    PushAction act{std::vector<int>(e.n(), 0)};
    for (const BuyInfo* b : buys) act.deltas[b->voter] = b->t;
    for (auto [v, t] : plan.decrements) {
      if (act.deltas[v] != 0) return;  // bought and reduced: not composable
      act.deltas[v] = -t;
    }
    Cost c = support_cost(e, inst.costs, act);
    if (!within_cap(c, budget, num, den)) return;
    WinnerReport rep = winners(apply_push(e, act), inst.rule);
    if (!rep.contains(p)) return;
    best.action = act;
    best.cost = c;
    best.certificate = std::move(rep);
    done = true;
  }
};

}  // namespace

BriberySolution approx_spav_single_peaked(const SupportInstance& inst, int eps_num, int eps_den,
                                          Cost budget, int beta_prime, std::uint64_t seed,
                                          int trials) {
  validate(inst.election);
  validate(inst.election, inst.costs);
  if (inst.rule.kind != RuleKind::spav)
    throw std::invalid_argument("approx_spav_single_peaked: rule must be SP-AV");
  if (eps_num <= 0 || eps_den <= 0)
    throw std::invalid_argument("approx_spav_single_peaked: epsilon must be positive");
  if (budget.is_infinite())
    throw std::invalid_argument("approx_spav_single_peaked: budget must be finite");
  const Election& e = inst.election;
  const int n = e.n(), m = e.m(), p = e.designated;
  for (int v = 0; v < n; ++v)
    for (int c = 0; c <= m; ++c)
      if (c != e.voters[v].approval_count && inst.costs.values[v][c] == Cost(0))
        throw std::invalid_argument("approx_spav_single_peaked: costs must be >= 1 off zero");

  std::optional<Axis> axis = single_peaked_axis(e);
  if (!axis) throw std::invalid_argument("approx_spav_single_peaked: election is not single-peaked");
  std::vector<int> axis_pos(m);
  for (int i = 0; i < m; ++i) axis_pos[axis->order[i]] = i;

  GuessContext ctx{inst, e, p, eps_num, eps_den, budget, beta_prime, seed, trials};
  ctx.best.action = PushAction{std::vector<int>(n, 0)};
  ctx.best.cost = Cost::infinite();
  ctx.best.certificate = winners(e, inst.rule);
  if (ctx.best.certificate.contains(p)) {
    ctx.best.cost = 0;
    return ctx.best;
  }

  std::vector<int> s0 = approval_scores(e);

  // Buyable voters with base/shadow read off the axis.
  std::vector<BuyInfo> cheap, expensive;
  for (int v = 0; v < n; ++v) {
    int lv = e.voters[v].approval_count;
    int rp = rank(e, p, v);
    if (rp <= lv) continue;
    Cost price = inst.costs.values[v][rp];
    if (price.is_infinite()) continue;
    BuyInfo b;
    b.voter = v;
    b.t = rp - lv;
    b.price = price;
    Interval oldint, newint;
    if (lv > 0) {
      int lo = m, hi = -1;
      for (int j = 0; j < lv; ++j) {
        lo = std::min(lo, axis_pos[e.voters[v].preference[j]]);
        hi = std::max(hi, axis_pos[e.voters[v].preference[j]]);
      }
      oldint = {lo, hi};
    }
    {
      int lo = m, hi = -1;
      for (int j = 0; j < rp; ++j) {
        lo = std::min(lo, axis_pos[e.voters[v].preference[j]]);
        hi = std::max(hi, axis_pos[e.voters[v].preference[j]]);
      }
      newint = {lo, hi};
    }
    Interval left, right;
    if (oldint.empty()) {
      // Everything newly approved forms one interval; split at p.
      left = newint;
      right = {1, 0};
      if (axis_pos[p] == newint.lo) {
        left = newint;
        right = {1, 0};
      }
    } else {
      left = {newint.lo, oldint.lo - 1};
      right = {oldint.hi + 1, newint.hi};
    }
    Interval base, shadow;
    if (!left.empty() && left.lo <= axis_pos[p] && axis_pos[p] <= left.hi) {
      base = left;
      shadow = right;
    } else if (!right.empty() && right.lo <= axis_pos[p] && axis_pos[p] <= right.hi) {
      base = right;
      shadow = left;
    } else {
      base = left.empty() ? right : left;  // p must be in the new part
      shadow = {1, 0};
    }
    b.base = base;
    b.shadow = shadow;
    if (price_expensive(price, budget, eps_num, eps_den))
      expensive.push_back(b);
    else
      cheap.push_back(b);
  }

  const int r_limit = beta_prime * beta_prime + 1;

  // Distinct (base, shadow length) pairs realized by cheap voters.
  std::vector<std::pair<Interval, int>> realized;
  for (const BuyInfo& b : cheap) {
    auto key = std::make_pair(b.base, b.shadow.len());
    if (std::find(realized.begin(), realized.end(), key) == realized.end())
      realized.push_back(key);
  }
  std::sort(realized.begin(), realized.end(), [](const auto& a, const auto& b) {
    if (!(a.first == b.first)) return a.first < b.first;
    return a.second < b.second;
  });

  int max_v1 = std::min({eps_den / eps_num, beta_prime, static_cast<int>(expensive.size())});

  // Enumerate expensive subsets by size, then lexicographically.
  std::vector<int> v1_idx;
  auto for_each_v1 = [&](auto&& body) {
    for (int size = 0; size <= max_v1 && !ctx.done; ++size) {
      v1_idx.assign(size, 0);
      auto rec = [&](auto&& self, int pos, int from) -> void {
        if (ctx.done || ctx.work > GuessContext::kWorkBudget) return;
        if (pos == size) {
          body();
          return;
        }
        for (int i = from; i < static_cast<int>(expensive.size()); ++i) {
          v1_idx[pos] = i;
          self(self, pos + 1, i + 1);
        }
      };
      rec(rec, 0, 0);
    }
  };

  for_each_v1([&] {
    int unit_v1 = 0;
    Cost price_v1 = 0;
    std::vector<const BuyInfo*> v1;
    for (int i : v1_idx) {
      v1.push_back(&expensive[i]);
      unit_v1 += expensive[i].t;
      price_v1 += expensive[i].price;
    }
    if (unit_v1 > beta_prime) return;
    if (!within_cap(price_v1, budget, 0, 1)) return;  // buys alone exceed B

    int max_k = std::min(beta_prime, static_cast<int>(cheap.size()));
    for (int k = 0; k <= max_k && !ctx.done; ++k) {
      // Multisets of k realized (base, shadow size) pairs.
      std::vector<int> pick(k, 0);
      auto for_each_multiset = [&](auto&& body) {
        if (k == 0) {
          body();
          return;
        }
        auto rec = [&](auto&& self, int pos, int from) -> void {
          if (ctx.done || ctx.work > GuessContext::kWorkBudget) return;
          if (pos == k) {
            body();
            return;
          }
          for (int i = from; i < static_cast<int>(realized.size()); ++i) {
            pick[pos] = i;
            self(self, pos + 1, i);
          }
        };
        rec(rec, 0, 0);
      };

      for_each_multiset([&] {
        int unit_w = 0;
        for (int i : pick) unit_w += realized[i].first.len() + realized[i].second;
        if (unit_v1 + unit_w > beta_prime) return;
        int units_rem = beta_prime - unit_v1 - unit_w;

        // Suitable colors per cheap voter.
        std::vector<std::vector<int>> suitable(cheap.size());
        bool any_colorable = k > 0;
        for (size_t ci = 0; ci < cheap.size(); ++ci)
          for (int x = 0; x < k; ++x)
            if (cheap[ci].base == realized[pick[x]].first &&
                cheap[ci].shadow.len() == realized[pick[x]].second)
              suitable[ci].push_back(x);
        (void)any_colorable;

        std::vector<int> colorable;
        double combos = 1;
        for (size_t ci = 0; ci < cheap.size(); ++ci)
          if (!suitable[ci].empty()) {
            colorable.push_back(static_cast<int>(ci));
            combos *= suitable[ci].size() + 1;
          }

        // color[ci] = color or -1; voters outside `colorable` stay -1.
        std::vector<int> color(cheap.size(), -1);

        auto with_coloring = [&](auto&& body) {
          if (combos <= 20000) {
            auto rec = [&](auto&& self, size_t i) -> void {
              if (ctx.done || ctx.work > GuessContext::kWorkBudget) return;
              if (i == colorable.size()) {
                body();
                return;
              }
              int ci = colorable[i];
              color[ci] = -1;
              self(self, i + 1);
              for (int x : suitable[ci]) {
                color[ci] = x;
                self(self, i + 1);
              }
              color[ci] = -1;
            };
            rec(rec, 0);
          } else {
            int count = ctx.trials;
            if (count <= 0) {
              double t = 3.0 * std::pow(k + 1, beta_prime);
              count = t > 10000 ? 10000 : static_cast<int>(std::ceil(t));
            }
            for (int trial = 0; trial < count && !ctx.done; ++trial) {
              Rng rng(Rng::child_seed(seed, ctx.trial_counter++));
              for (int ci : colorable) {
                int roll = rng.uniform_int(0, static_cast<int>(suitable[ci].size()));
                color[ci] = roll == 0 ? -1 : suitable[ci][roll - 1];
              }
              body();
            }
            for (int ci : colorable) color[ci] = -1;
          }
        };

        with_coloring([&] {
          ctx.work += n;
          // Relevant sets R_x: cheapest colored voters with pairwise
          // distinct shadows, capped at beta'^2 + 1.
          std::vector<std::vector<int>> r_set(k);
          for (int x = 0; x < k; ++x) {
            std::vector<int> members;
            for (size_t ci = 0; ci < cheap.size(); ++ci)
              if (color[ci] == x) members.push_back(static_cast<int>(ci));
            std::stable_sort(members.begin(), members.end(), [&](int a, int b) {
              if (cheap[a].price != cheap[b].price) return cheap[a].price < cheap[b].price;
              return cheap[a].voter < cheap[b].voter;
            });
            for (int ci : members) {
              if (static_cast<int>(r_set[x].size()) >= r_limit) break;
              bool dup = false;
              for (int prev : r_set[x])
                if (cheap[prev].shadow == cheap[ci].shadow) dup = true;
              if (!dup) r_set[x].push_back(ci);
            }
          }

          // Guess per color: a member of R_x, or "missing".
          std::vector<int> guess(k, -1);
          auto rec = [&](auto&& self, int x) -> void {
            if (ctx.done || ctx.work > GuessContext::kWorkBudget) return;
            if (x == k) {
              ctx.work += 4 * n + 2 * m;
              std::vector<const BuyInfo*> buys = v1;
              std::vector<int> missing;
              for (int y = 0; y < k; ++y) {
                if (guess[y] < 0)
                  missing.push_back(y);
                else
                  buys.push_back(&cheap[r_set[y][guess[y]]]);
              }
              // Modeled score after all of V+ is bought.
              std::vector<int> score = s0;
              for (const BuyInfo* b : buys) {
                int lv = e.voters[b->voter].approval_count;
                for (int pos = lv + 1; pos <= lv + b->t; ++pos)
                  ++score[e.voters[b->voter].preference[pos - 1]];
              }
              for (int y : missing) {
                const Interval& base = realized[pick[y]].first;
                for (int ap = base.lo; ap <= base.hi; ++ap) ++score[axis->order[ap]];
              }
              int p_model = s0[p] + static_cast<int>(v1.size()) + k;
              for (int s_star = p_model; s_star >= p_model - beta_prime && !ctx.done; --s_star) {
                int plosses = p_model - s_star;
                if (plosses > units_rem) break;
                std::vector<int> watched, needs;
                bool bad = false;
                long long total_need = 0;
                for (int c = 0; c < m; ++c) {
                  if (c == p) continue;
                  if (score[c] > s_star) {
                    watched.push_back(c);
                    needs.push_back(score[c] - s_star);
                    total_need += score[c] - s_star;
                  }
                }
                if (static_cast<int>(watched.size()) > beta_prime) continue;
                if (total_need > units_rem) continue;
                if (bad) continue;
                std::vector<int> pool;
                std::vector<char> excluded(n, 0);
                for (const BuyInfo* b : buys) excluded[b->voter] = 1;
                for (size_t ci = 0; ci < cheap.size(); ++ci)
                  if (color[ci] >= 0) excluded[cheap[ci].voter] = 1;
                for (int v = 0; v < n; ++v)
                  if (!excluded[v] && e.voters[v].approval_count > 0) pool.push_back(v);
                auto plan = reduction_dp(inst, p, pool, watched, needs, plosses, units_rem,
                                         ctx.work, GuessContext::kWorkBudget);
                if (!plan) continue;

                // Greedy disjoint-shadow phase for the missing colors.
                std::vector<const BuyInfo*> buys_all = buys;
                bool ok = true;
                std::vector<Interval> shadows;
                auto take_available = [&](int y, const BuyInfo* skip) -> const BuyInfo* {
                  for (int ci : r_set[y]) {
                    const BuyInfo* b = &cheap[ci];
                    if (b == skip) continue;
                    bool clash = false;
                    for (const Interval& s : shadows)
                      if (b->shadow.intersects(s)) clash = true;
                    if (!clash) return b;
                  }
                  return nullptr;
                };
                const BuyInfo* first_of_last = nullptr;
                for (size_t mi = 0; mi < missing.size() && ok; ++mi) {
                  const BuyInfo* b = take_available(missing[mi], nullptr);
                  if (!b) {
                    ok = false;
                    break;
                  }
                  if (mi + 1 == missing.size()) first_of_last = b;
                  buys_all.push_back(b);
                  if (!b->shadow.empty()) shadows.push_back(b->shadow);
                }
                if (ok && !missing.empty()) {
                  const BuyInfo* extra = take_available(missing.back(), first_of_last);
                  if (!extra)
                    ok = false;
                  else
                    buys_all.push_back(extra);
                }
                if (!ok) continue;
                ctx.consider(buys_all, *plan);
              }
              return;
            }
            guess[x] = -1;
            self(self, x + 1);
            for (int gi = 0; gi < static_cast<int>(r_set[x].size()); ++gi) {
              guess[x] = gi;
              self(self, x + 1);
            }
            guess[x] = -1;
          };
          rec(rec, 0);
        });
      });
    }
  });

  return ctx.best;
}

}  // namespace campaign
