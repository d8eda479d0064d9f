#include "campaign/instances.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "campaign/rng.hpp"

namespace campaign {

void validate(const GraphInstance& g) {
  if (g.vertex_count < 1) throw std::invalid_argument("graph: need at least one vertex");
  for (auto [u, v] : g.edges)
    if (u < 0 || v < 0 || u >= g.vertex_count || v >= g.vertex_count || u == v)
      throw std::invalid_argument("graph: bad edge");
  if (!g.partition.empty()) {
    std::vector<int> cls(g.vertex_count, -1);
    for (size_t i = 0; i < g.partition.size(); ++i)
      for (int v : g.partition[i]) {
        if (v < 0 || v >= g.vertex_count || cls[v] != -1)
          throw std::invalid_argument("graph: partition classes must be disjoint");
        cls[v] = static_cast<int>(i);
      }
    for (int v = 0; v < g.vertex_count; ++v)
      if (cls[v] == -1) throw std::invalid_argument("graph: partition must cover all vertices");
    for (auto [u, v] : g.edges)
      if (cls[u] == cls[v]) throw std::invalid_argument("graph: partition classes must be independent");
  }
}

GraphInstance parse_graph(const std::string& text) {
  std::istringstream in(text);
  GraphInstance g;
  int edge_count = 0, class_count = 0;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw std::runtime_error("graph line " + std::to_string(lineno) + ": " + msg);
  };
  auto next_line = [&]() -> std::optional<std::string> {
    while (std::getline(in, line)) {
      ++lineno;
      size_t h = line.find('#');
      if (h != std::string::npos) line = line.substr(0, h);
      std::istringstream probe(line);
      std::string tok;
      if (probe >> tok) return line;
    }
    return std::nullopt;
  };
  auto header = next_line();
  if (!header) throw std::runtime_error("graph: empty input");
  {
    std::istringstream hs(*header);
    if (!(hs >> g.vertex_count >> edge_count)) fail("expected `V E [K]`");
    hs >> class_count;
  }
  for (int i = 0; i < edge_count; ++i) {
    auto l = next_line();
    if (!l) fail("missing edge line");
    std::istringstream ls(*l);
    int u, v;
    if (!(ls >> u >> v)) fail("expected `u v`");
    g.edges.push_back({u - 1, v - 1});
  }
  for (int i = 0; i < class_count; ++i) {
    auto l = next_line();
    if (!l) fail("missing partition line");
    std::istringstream ls(*l);
    std::string first;
    ls >> first;
    std::vector<int> cls;
    try {
      cls.push_back(std::stoi(first) - 1);
    } catch (const std::exception&) {
      // leading `class` label; members follow
    }
    int v;
    while (ls >> v) cls.push_back(v - 1);
    g.partition.push_back(cls);
  }
  validate(g);
  return g;
}

std::string serialize_graph(const GraphInstance& g) {
  std::ostringstream out;
  out << g.vertex_count << " " << g.edges.size();
  if (!g.partition.empty()) out << " " << g.partition.size();
  out << "\n";
  for (auto [u, v] : g.edges) out << u + 1 << " " << v + 1 << "\n";
  for (const auto& cls : g.partition) {
    out << "class";
    for (int v : cls) out << " " << v + 1;
    out << "\n";
  }
  return out.str();
}

Election gen_random(int m, int n, std::uint64_t seed, std::optional<int> fixed_approvals,
                    int designated) {
  if (m < 1 || n < 1) throw std::invalid_argument("gen_random: need m >= 1 and n >= 1");
  if (fixed_approvals && (*fixed_approvals < 0 || *fixed_approvals > m))
    throw std::invalid_argument("gen_random: fixed approval count out of range");
  Rng rng(seed);
  Election e;
  e.num_candidates = m;
  e.designated = designated;
  for (int i = 0; i < n; ++i) {
    Voter v;
    v.preference.resize(m);
    std::iota(v.preference.begin(), v.preference.end(), 0);
    rng.shuffle(v.preference);
    v.approval_count = fixed_approvals ? *fixed_approvals : rng.uniform_int(0, m);
    e.voters.push_back(std::move(v));
  }
  validate(e);
  return e;
}

std::pair<Election, Axis> gen_single_peaked(int m, int n, std::uint64_t seed, int designated) {
  if (m < 1 || n < 1) throw std::invalid_argument("gen_single_peaked: need m >= 1 and n >= 1");
  Rng rng(seed);
  Election e;
  e.num_candidates = m;
  e.designated = designated;
  for (int i = 0; i < n; ++i) {
    Voter v;
    int lo = rng.uniform_int(0, m - 1);
    int hi = lo;
    v.preference.push_back(lo);
    while (static_cast<int>(v.preference.size()) < m) {
      bool left = lo > 0 && (hi == m - 1 || rng.coin());
      if (left)
        v.preference.push_back(--lo);
      else
        v.preference.push_back(++hi);
    }
    v.approval_count = rng.uniform_int(0, m);
    e.voters.push_back(std::move(v));
  }
  validate(e);
  Axis axis;
  axis.order.resize(m);
  std::iota(axis.order.begin(), axis.order.end(), 0);
  return {std::move(e), std::move(axis)};
}

ShiftCostProfile unit_shift_costs(const Election& e) {
  ShiftCostProfile p;
  for (int v = 0; v < e.n(); ++v) {
    std::vector<Cost> row(e.m() + 1);
    for (int t = 0; t <= e.m(); ++t) row[t] = t;
    p.rows.push_back(std::move(row));
  }
  return p;
}

ShiftCostProfile random_shift_costs(const Election& e, std::uint64_t seed, int max_step,
                                    int inf_percent) {
  Rng rng(seed);
  ShiftCostProfile p;
  for (int v = 0; v < e.n(); ++v) {
    std::vector<Cost> row(e.m() + 1);
    row[0] = 0;
    bool dead = false;
    for (int t = 1; t <= e.m(); ++t) {
      if (dead || rng.uniform_int(1, 100) <= inf_percent) {
        dead = true;
        row[t] = Cost::infinite();
      } else {
        row[t] = row[t - 1] + Cost(rng.uniform_int(0, max_step));
      }
    }
    p.rows.push_back(std::move(row));
  }
  return p;
}

SupportCostProfile unit_support_costs(const Election& e) {
  SupportCostProfile p;
  for (int v = 0; v < e.n(); ++v) {
    std::vector<Cost> row(e.m() + 1);
    for (int c = 0; c <= e.m(); ++c) row[c] = std::abs(c - e.voters[v].approval_count);
    p.values.push_back(std::move(row));
  }
  return p;
}

SupportCostProfile one_sided_support_costs(const Election& e, bool positive) {
  SupportCostProfile p = unit_support_costs(e);
  for (int v = 0; v < e.n(); ++v) {
    int l = e.voters[v].approval_count;
    if (positive)
      for (int c = 0; c < l; ++c) p.values[v][c] = Cost::infinite();
    else
      for (int c = l + 1; c <= e.m(); ++c) p.values[v][c] = Cost::infinite();
  }
  return p;
}

SupportCostProfile random_support_costs(const Election& e, std::uint64_t seed, int max_step,
                                        int inf_percent) {
  Rng rng(seed);
  SupportCostProfile p;
  for (int v = 0; v < e.n(); ++v) {
    int l = e.voters[v].approval_count;
    std::vector<Cost> row(e.m() + 1);
    row[l] = 0;
    bool dead = false;
    for (int c = l + 1; c <= e.m(); ++c) {
      if (dead || rng.uniform_int(1, 100) <= inf_percent) {
        dead = true;
        row[c] = Cost::infinite();
      } else {
        row[c] = row[c - 1] + Cost(rng.uniform_int(0, max_step));
      }
    }
    dead = false;
    for (int c = l - 1; c >= 0; --c) {
      if (dead || rng.uniform_int(1, 100) <= inf_percent) {
        dead = true;
        row[c] = Cost::infinite();
      } else {
        row[c] = row[c + 1] + Cost(rng.uniform_int(0, max_step));
      }
    }
    p.values.push_back(std::move(row));
  }
  return p;
}

SupportCostProfile random_one_sided_support_costs(const Election& e, bool positive,
                                                  std::uint64_t seed, int max_step,
                                                  int inf_percent) {
  SupportCostProfile p = random_support_costs(e, seed, max_step, inf_percent);
  for (int v = 0; v < e.n(); ++v) {
    int l = e.voters[v].approval_count;
    if (positive)
      for (int c = 0; c < l; ++c) p.values[v][c] = Cost::infinite();
    else
      for (int c = l + 1; c <= e.m(); ++c) p.values[v][c] = Cost::infinite();
  }
  return p;
}

namespace {

std::vector<std::vector<int>> closed_neighborhoods(const GraphInstance& g) {
  std::vector<std::vector<int>> nb(g.vertex_count);
  for (int v = 0; v < g.vertex_count; ++v) nb[v].push_back(v);
  for (auto [u, v] : g.edges) {
    nb[u].push_back(v);
    nb[v].push_back(u);
  }
  for (auto& s : nb) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return nb;
}

// Fill the unapproved tail with every remaining candidate in ascending index
// order (support bribery with one-sided costs never looks at it).
void fill_tail_ascending(std::vector<int>& pref, int m) {
  std::vector<char> used(m, 0);
  for (int c : pref) used[c] = 1;
  for (int c = 0; c < m; ++c)
    if (!used[c]) pref.push_back(c);
}

}  // namespace

SupportInstance reduce_dominating_set(const GraphInstance& g, int k, bool positive, RuleId rule) {
  validate(g);
  if (!rule.is_fallback())
    throw std::invalid_argument("reduce_dominating_set: rule must be a Fallback variant");
  const int nv = g.vertex_count;
  std::vector<std::vector<int>> nb = closed_neighborhoods(g);

  Election e;
  SupportInstance inst;

  if (!positive) {
    if (nv < k + 2)
      throw std::invalid_argument("reduce_dominating_set: negative variant needs |V| >= k+2");
    const int a = nv, b = nv + 1, p = nv + 2;
    const int dummy_pool = 6 * nv * (nv + 3);
    const int m = nv + 3 + dummy_pool;
    int next_dummy = 0;
    auto dummy = [&]() { return nv + 3 + (next_dummy++ % dummy_pool); };

    e.num_candidates = m;
    e.designated = p;
    auto add_voter = [&](std::vector<int> approved) {
      Voter v;
      v.approval_count = static_cast<int>(approved.size());
      v.preference = std::move(approved);
      fill_tail_ascending(v.preference, m);
      e.voters.push_back(std::move(v));
    };
    std::vector<int> bribable;
    for (int i = 0; i < nv; ++i) {  // voter x_i
      std::vector<int> approved{a};
      for (int u : nb[i]) approved.push_back(u);
      for (int d = static_cast<int>(nb[i].size()); d < nv; ++d) approved.push_back(dummy());
      approved.push_back(p);
      approved.push_back(b);
      bribable.push_back(static_cast<int>(e.voters.size()));
      add_voter(std::move(approved));
    }
    for (int i = 0; i < nv; ++i) {  // voter xbar_i
      std::vector<int> approved{a};
      for (int u = 0; u < nv; ++u)
        if (!std::binary_search(nb[i].begin(), nb[i].end(), u)) approved.push_back(u);
      for (int d = 0; d < static_cast<int>(nb[i].size()); ++d) approved.push_back(dummy());
      approved.push_back(p);
      approved.push_back(b);
      add_voter(std::move(approved));
    }
    for (int z = 0; z < 2 * nv + 1; ++z) {
      std::vector<int> approved;
      for (int u = 0; u < nv; ++u) approved.push_back(u);
      approved.push_back(dummy());
      approved.push_back(dummy());
      approved.push_back(b);
      add_voter(std::move(approved));
    }
    for (int z = 0; z < nv + k; ++z) {
      std::vector<int> approved{a};
      for (int d = 0; d < nv; ++d) approved.push_back(dummy());
      approved.push_back(p);
      approved.push_back(b);
      add_voter(std::move(approved));
    }
    {
      std::vector<int> approved;
      for (int d = 0; d < nv + 1; ++d) approved.push_back(dummy());
      approved.push_back(p);
      approved.push_back(b);
      add_voter(std::move(approved));
    }
    for (int z = 0; z < nv - k - 2; ++z) {
      std::vector<int> approved;
      for (int d = 0; d < nv + 2; ++d) approved.push_back(dummy());
      approved.push_back(b);
      add_voter(std::move(approved));
    }

    SupportCostProfile costs;
    for (int v = 0; v < e.n(); ++v) {
      std::vector<Cost> row(m + 1, Cost::infinite());
      row[e.voters[v].approval_count] = 0;
      costs.values.push_back(std::move(row));
    }
    for (int v : bribable)
      for (int c = 0; c < e.voters[v].approval_count; ++c) costs.values[v][c] = 0;
    inst.costs = std::move(costs);
  } else {
    if (k < 2) throw std::invalid_argument("reduce_dominating_set: positive variant needs k >= 2");
    if (nv < k)
      throw std::invalid_argument("reduce_dominating_set: positive variant needs |V| >= k");
    const int a = nv, b = nv + 1, p = nv + 2;
    const int m = nv + 3;
    e.num_candidates = m;
    e.designated = p;
    std::vector<int> bribable;
    for (int i = 0; i < nv; ++i) {  // voter x_i, approves nobody
      Voter v;
      for (int u = 0; u < nv; ++u)
        if (!std::binary_search(nb[i].begin(), nb[i].end(), u)) v.preference.push_back(u);
      v.preference.push_back(b);
      v.preference.push_back(p);
      v.preference.push_back(a);
      for (int u : nb[i]) v.preference.push_back(u);
      v.approval_count = 0;
      bribable.push_back(static_cast<int>(e.voters.size()));
      e.voters.push_back(std::move(v));
    }
    for (int z = 0; z < k; ++z) {
      Voter v;
      v.preference.push_back(a);
      fill_tail_ascending(v.preference, m);
      v.approval_count = 1;
      e.voters.push_back(std::move(v));
    }
    {
      Voter v;
      for (int u = 0; u < nv; ++u) v.preference.push_back(u);
      fill_tail_ascending(v.preference, m);
      v.approval_count = nv;
      e.voters.push_back(std::move(v));
    }
    for (int z = 0; z < nv + 1 - k; ++z) {
      Voter v;
      v.preference = {a, b, p};
      for (int u = 0; u < nv; ++u) v.preference.push_back(u);
      v.approval_count = m;
      e.voters.push_back(std::move(v));
    }

    SupportCostProfile costs;
    for (int v = 0; v < e.n(); ++v) {
      std::vector<Cost> row(m + 1, Cost::infinite());
      row[e.voters[v].approval_count] = 0;
      costs.values.push_back(std::move(row));
    }
    for (int v : bribable)
      for (int c = 0; c <= m; ++c) costs.values[v][c] = 0;
    inst.costs = std::move(costs);
  }

  validate(e);
  validate(e, inst.costs);
  inst.election = std::move(e);
  inst.rule = rule;
  inst.budget = Cost(0);
  return inst;
}

std::pair<SupportInstance, Cost> reduce_multicolored_clique(const GraphInstance& g, int k) {
  validate(g);
  if (k < 2) throw std::invalid_argument("reduce_multicolored_clique: k must be >= 2");
  if (static_cast<int>(g.partition.size()) != k)
    throw std::invalid_argument("reduce_multicolored_clique: partition must have k classes");
  const int nv = g.vertex_count;
  std::vector<int> cls(nv, -1);
  for (int i = 0; i < k; ++i)
    for (int v : g.partition[i]) cls[v] = i;
  if (cls[0] != 0 || cls[nv - 1] != k - 1)
    throw std::invalid_argument(
        "reduce_multicolored_clique: first vertex must be in class 1 and last in class k");

  const int budget = 2 * k * k * k - k;

  // Axis layout; candidate ids equal axis positions (identity axis).
  // q, 2B dummies, per-vertex slot blocks (k-1 slots, 2 dummies between
  // consecutive slots and between blocks), 2B dummies, p.
  std::vector<std::vector<int>> slot(nv);  // slot[v][j] for j = 0..k-2
  int next_id = 0;
  const int q = next_id++;
  next_id += 2 * budget;
  for (int v = 0; v < nv; ++v) {
    slot[v].resize(k - 1);
    for (int j = 0; j < k - 1; ++j) {
      if (v > 0 || j > 0) next_id += 2;  // interior / inter-block dummies
      slot[v][j] = next_id++;
    }
  }
  next_id += 2 * budget;
  const int p = next_id++;
  const int m = next_id;

  // Slot labels: block of vertex v in class i holds c^j_v for j in
  // {1..k} \ {i+1}, ascending; label j sits at index (j-1 adjusted).
  auto slot_of_label = [&](int v, int label) {  // label in 1..k, != cls[v]+1
    int idx = label - 1 - (label - 1 > cls[v] ? 1 : 0);
    return slot[v][idx];
  };
  const int first_slot = slot[0][0];
  const int last_slot = slot[nv - 1][k - 2];

  Election e;
  e.num_candidates = m;
  e.designated = p;

  // Completes a vote whose approved part is the interval [lo, hi] listed in
  // the given order; the tail walks outward, nearer side first, ties toward q.
  auto finish_vote = [&](std::vector<int> pref, int lo, int hi, int peak, int approvals) {
    while (lo > 0 || hi < m - 1) {
      bool left;
      if (lo == 0)
        left = false;
      else if (hi == m - 1)
        left = true;
      else
        left = peak - (lo - 1) <= (hi + 1) - peak;
      if (left)
        pref.push_back(--lo);
      else
        pref.push_back(++hi);
    }
    Voter v;
    v.preference = std::move(pref);
    v.approval_count = approvals;
    e.voters.push_back(std::move(v));
  };

  const int tail_gap = 2 * k * k - 5 * k + 6;  // approved part ends this far before p

  std::vector<int> vertex_voter(nv), edge_voter(g.edges.size());

  for (int v = 0; v < nv; ++v) {  // voter w_v
    int block_lo = slot[v][0], block_hi = slot[v][k - 2];
    int peak = block_hi + 1;
    int end = p - tail_gap;
    std::vector<int> pref;
    for (int c = peak; c <= end; ++c) pref.push_back(c);
    int approvals = static_cast<int>(pref.size());
    for (int c = block_hi; c >= block_lo; --c) pref.push_back(c);
    for (int c = end + 1; c <= p; ++c) pref.push_back(c);
    for (int c = block_lo - 1; c >= 0; --c) pref.push_back(c);
    Voter voter;
    voter.preference = std::move(pref);
    voter.approval_count = approvals;
    vertex_voter[v] = e.n();
    e.voters.push_back(std::move(voter));
  }

  for (size_t ei = 0; ei < g.edges.size(); ++ei) {  // voter w_{a,b}
    auto [x, y] = g.edges[ei];
    int a = std::min(x, y), b = std::max(x, y);
    int ca = slot_of_label(a, cls[b] + 1);  // c^j_a, j = class of b
    int cb = slot_of_label(b, cls[a] + 1);  // c^i_b, i = class of a
    std::vector<int> pref;
    for (int c = ca + 1; c <= cb - 1; ++c) pref.push_back(c);
    pref.push_back(ca);
    pref.push_back(cb);
    pref.push_back(ca - 1);
    pref.push_back(cb + 1);
    int approvals = static_cast<int>(pref.size());
    edge_voter[ei] = e.n();
    finish_vote(std::move(pref), ca - 1, cb + 1, ca + 1, approvals);
  }

  // Equalize C_V scores, then pad so dummies stay strictly below, with votes
  // reaching B deep into the outer dummy banks. A pair of votes for member c
  // gives +2 to c and +1 to every other member; track member scores
  // incrementally rather than rescoring the growing election.
  std::vector<int> members;
  for (int v = 0; v < nv; ++v)
    for (int j = 0; j < k - 1; ++j) members.push_back(slot[v][j]);

  std::vector<int> ms;
  {
    std::vector<int> s = approval_scores(e);
    for (int c : members) ms.push_back(s[c]);
  }
  auto add_pair = [&](size_t idx) {
    int c = members[idx];
    {
      std::vector<int> pref;
      for (int x2 = c; x2 >= first_slot - budget; --x2) pref.push_back(x2);
      finish_vote(std::move(pref), first_slot - budget, c, c,
                  c - (first_slot - budget) + 1);
    }
    {
      std::vector<int> pref;
      for (int x2 = c; x2 <= last_slot + budget; ++x2) pref.push_back(x2);
      finish_vote(std::move(pref), c, last_slot + budget, c,
                  last_slot + budget - c + 1);
    }
    for (size_t i = 0; i < ms.size(); ++i) ++ms[i];
    ++ms[idx];
  };

  while (true) {
    int mx = *std::max_element(ms.begin(), ms.end());
    size_t arg = ms.size();
    for (size_t i = 0; i < ms.size(); ++i)
      if (ms[i] < mx) {
        arg = i;
        break;
      }
    if (arg == ms.size()) break;
    add_pair(arg);
  }
  const int extra_pairs = nv + static_cast<int>(g.edges.size()) + budget + 1;
  for (size_t i = 0; i < members.size(); ++i)
    for (int z = 0; z < extra_pairs; ++z) add_pair(i);

  const int big_l = ms[0];
  for (int z = 0; z < big_l - k; ++z) {  // p-only voters
    std::vector<int> pref{p};
    finish_vote(std::move(pref), p, p, p, 1);
  }
  // q ends with score L. One of its voters approves q alone so that the
  // dummies next to q stay strictly below L; dropping q still costs B+1
  // through any of the other q voters, and a single one-point drop of q
  // never changes what the briber must do about the C_V scores.
  for (int z = 0; z < big_l - 1; ++z) {
    std::vector<int> pref;
    for (int c = q; c <= q + budget; ++c) pref.push_back(c);
    finish_vote(std::move(pref), q, q + budget, q, budget + 1);
  }
  {
    std::vector<int> pref{q};
    finish_vote(std::move(pref), q, q, q, 1);
  }

  validate(e);
  SupportInstance inst;
  inst.costs = unit_support_costs(e);
  inst.election = std::move(e);
  inst.rule = RuleId::spav();
  inst.budget = Cost(budget);
  return {std::move(inst), Cost(budget)};
}

}  // namespace campaign
