#include "campaign/flow.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace campaign {

namespace {

// Successive shortest augmenting paths with node potentials.
class MinCostFlow {
 public:
  explicit MinCostFlow(int n) : head_(n, -1), dist_(n), pot_(n), prev_arc_(n) {}

  int add_edge(int from, int to, std::int64_t cap, std::int64_t cost) {
    int id = static_cast<int>(es_.size());
    es_.push_back({to, head_[from], cap, cost});
    head_[from] = id;
    es_.push_back({from, head_[to], 0, -cost});
    head_[to] = id + 1;
    return id;
  }

  // Max flow from s to t of minimum cost. Initial costs must be >= 0.
  std::pair<std::int64_t, std::int64_t> solve(int s, int t) {
    std::int64_t flow = 0, cost = 0;
    std::fill(pot_.begin(), pot_.end(), 0);
    while (dijkstra(s, t)) {
      for (size_t v = 0; v < pot_.size(); ++v)
        if (dist_[v] < kInf) pot_[v] += dist_[v];
      std::int64_t push = kInf;
      for (int v = t; v != s;) {
        const E& e = es_[prev_arc_[v]];
        push = std::min(push, e.cap);
        v = es_[prev_arc_[v] ^ 1].to;
      }
      for (int v = t; v != s;) {
        es_[prev_arc_[v]].cap -= push;
        es_[prev_arc_[v] ^ 1].cap += push;
        cost += es_[prev_arc_[v]].cost * push;
        v = es_[prev_arc_[v] ^ 1].to;
      }
      flow += push;
    }
    return {flow, cost};
  }

  std::int64_t residual(int edge_id) const { return es_[edge_id].cap; }

 private:
  struct E {
    int to;
    int next;
    std::int64_t cap;
    std::int64_t cost;
  };
  static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

  bool dijkstra(int s, int t) {
    std::fill(dist_.begin(), dist_.end(), kInf);
    dist_[s] = 0;
    using Item = std::pair<std::int64_t, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    pq.push({0, s});
    while (!pq.empty()) {
      auto [d, v] = pq.top();
      pq.pop();
      if (d > dist_[v]) continue;
      for (int id = head_[v]; id != -1; id = es_[id].next) {
        const E& e = es_[id];
        if (e.cap <= 0) continue;
        std::int64_t nd = d + e.cost + pot_[v] - pot_[e.to];
        if (nd < dist_[e.to]) {
          dist_[e.to] = nd;
          prev_arc_[e.to] = id;
          pq.push({nd, e.to});
        }
      }
    }
    return dist_[t] < kInf;
  }

  std::vector<int> head_;
  std::vector<std::int64_t> dist_, pot_;
  std::vector<int> prev_arc_;
  std::vector<E> es_;
};

}  // namespace

std::optional<Flow> min_cost_circulation(const CirculationNetwork& network) {
  std::int64_t bound_sum = 1;
  for (const Arc& a : network.arcs) {
    if (a.from < 0 || a.from >= network.node_count || a.to < 0 || a.to >= network.node_count)
      throw std::invalid_argument("min_cost_circulation: arc endpoint out of range");
    if (a.cost < 0) throw std::invalid_argument("min_cost_circulation: negative cost");
    if (a.lower < 0 || (a.upper != Arc::kUnbounded && a.upper < a.lower))
      throw std::invalid_argument("min_cost_circulation: bad bounds");
    bound_sum += a.lower + (a.upper == Arc::kUnbounded ? 0 : a.upper);
  }
  // Cap for unbounded arcs: some optimal circulation decomposes into cycles
  // each pinned by a bounded or lower-bounded arc, so this total suffices.
  const std::int64_t cap_unbounded = bound_sum;

  const int n = network.node_count;
  const int src = n, snk = n + 1;
  MinCostFlow mcf(n + 2);
  std::vector<std::int64_t> excess(n, 0);
  std::vector<int> arc_edge(network.arcs.size(), -1);
  std::int64_t base_cost = 0;
  for (size_t i = 0; i < network.arcs.size(); ++i) {
    const Arc& a = network.arcs[i];
    std::int64_t upper = a.upper == Arc::kUnbounded ? std::max(a.lower, cap_unbounded) : a.upper;
    excess[a.to] += a.lower;
    excess[a.from] -= a.lower;
    base_cost += a.lower * a.cost;
    arc_edge[i] = mcf.add_edge(a.from, a.to, upper - a.lower, a.cost);
  }
  std::int64_t need = 0;
  for (int v = 0; v < n; ++v) {
    if (excess[v] > 0) {
      mcf.add_edge(src, v, excess[v], 0);
      need += excess[v];
    } else if (excess[v] < 0) {
      mcf.add_edge(v, snk, -excess[v], 0);
    }
  }
  auto [flow, cost] = mcf.solve(src, snk);
  if (flow != need) return std::nullopt;
  Flow out;
  out.total_cost = base_cost + cost;
  out.arc_flow.resize(network.arcs.size());
  for (size_t i = 0; i < network.arcs.size(); ++i) {
    const Arc& a = network.arcs[i];
    std::int64_t upper = a.upper == Arc::kUnbounded ? std::max(a.lower, cap_unbounded) : a.upper;
    std::int64_t sent = (upper - a.lower) - mcf.residual(arc_edge[i]);
    out.arc_flow[i] = a.lower + sent;
  }
  return out;
}

CirculationNetwork build_bucklin_network(const Election& e, const ShiftCostProfile& costs,
                                         int k, int deep_bribes) {
  const int m = e.m(), n = e.n(), p = e.designated;
  if (k < 1 || k + 1 > m) throw std::invalid_argument("build_bucklin_network: bad round");
  {
    WinnerReport w = winners(e, RuleId::bucklin());
    if (!w.winning_round || *w.winning_round != k)
      throw std::invalid_argument("build_bucklin_network: k is not the Bucklin winning round");
  }
  std::vector<int> sk = k_approval_scores(e, k);
  std::vector<int> sk1 = k_approval_scores(e, k + 1);

  // Layers: S, S', U_h (one per non-p candidate), W_j (one per voter),
  // Z_h (one per non-p candidate), T.
  CirculationNetwork net;
  const int S = 0, Sp = 1;
  auto U = [&](int c) { return 2 + (c < p ? c : c - 1); };
  auto W = [&](int j) { return 2 + (m - 1) + j; };
  auto Z = [&](int c) { return 2 + (m - 1) + n + (c < p ? c : c - 1); };
  const int T = 2 + 2 * (m - 1) + n;
  net.node_count = T + 1;

  net.arcs.push_back({S, Sp, deep_bribes, deep_bribes, 0});
  for (int c = 0; c < m; ++c) {
    if (c == p) continue;
    std::int64_t lb = std::max(0, sk1[c] - sk1[p] - deep_bribes);
    net.arcs.push_back({Sp, U(c), lb, Arc::kUnbounded, 0});
  }
  for (int j = 0; j < n; ++j) {
    int rp = rank(e, p, j);
    if (rp >= k + 2) {
      int at_k1 = e.voters[j].preference[k];  // candidate in position k+1
      Cost to_k1 = costs.rows[j][rp - (k + 1)];
      if (to_k1.is_finite())
        net.arcs.push_back({U(at_k1), W(j), 0, 1, to_k1.value()});
    } else if (rp == k + 1) {
      net.arcs.push_back({S, W(j), 0, Arc::kUnbounded, 0});
    }
    if (rp >= k + 1) {
      int at_k = e.voters[j].preference[k - 1];  // candidate in position k
      Cost to_k = costs.rows[j][rp - k];
      Cost to_k1 = costs.rows[j][rp - (k + 1)];
      if (to_k.is_finite() && to_k1.is_finite())
        net.arcs.push_back({W(j), Z(at_k), 0, 1, to_k.value() - to_k1.value()});
    }
    net.arcs.push_back({W(j), T, 0, Arc::kUnbounded, 0});
  }
  for (int c = 0; c < m; ++c) {
    if (c == p) continue;
    std::int64_t lb = std::max(0, sk[c] - e.n() / 2);
    net.arcs.push_back({Z(c), T, lb, Arc::kUnbounded, 0});
  }
  net.arcs.push_back({T, S, 0, Arc::kUnbounded, 0});
  return net;
}

std::optional<std::pair<std::vector<std::pair<int, int>>, Cost>> min_weight_bipartite_matching(
    const std::vector<std::vector<Cost>>& weights) {
  const int L = static_cast<int>(weights.size());
  if (L == 0 || weights[0].empty())
    throw std::invalid_argument("min_weight_bipartite_matching: empty matrix");
  const int R = static_cast<int>(weights[0].size());
  for (const auto& row : weights)
    if (static_cast<int>(row.size()) != R)
      throw std::invalid_argument("min_weight_bipartite_matching: ragged matrix");

  const int src = L + R, snk = L + R + 1;
  MinCostFlow mcf(L + R + 2);
  std::vector<std::vector<int>> edge_id(L, std::vector<int>(R, -1));
  for (int i = 0; i < L; ++i) mcf.add_edge(src, i, 1, 0);
  for (int j = 0; j < R; ++j) mcf.add_edge(L + j, snk, 1, 0);
  for (int i = 0; i < L; ++i)
    for (int j = 0; j < R; ++j)
      if (weights[i][j].is_finite()) edge_id[i][j] = mcf.add_edge(i, L + j, 1, weights[i][j].value());
  auto [flow, cost] = mcf.solve(src, snk);
  if (flow < std::min(L, R)) return std::nullopt;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < L; ++i)
    for (int j = 0; j < R; ++j)
      if (edge_id[i][j] != -1 && mcf.residual(edge_id[i][j]) == 0) pairs.push_back({i, j});
  return std::make_pair(pairs, Cost(cost));
}

}  // namespace campaign
