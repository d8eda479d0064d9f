#include "campaign/single_peaked.hpp"

#include <algorithm>
#include <stdexcept>

namespace campaign {

bool axis_is_valid(const Election& e, const Axis& axis) {
  const int m = e.m();
  if (static_cast<int>(axis.order.size()) != m) return false;
  std::vector<int> pos(m, -1);
  for (int i = 0; i < m; ++i) {
    int c = axis.order[i];
    if (c < 0 || c >= m || pos[c] != -1) return false;
    pos[c] = i;
  }
  for (const Voter& v : e.voters) {
    int lo = pos[v.preference[0]];
    int hi = lo;
    for (int j = 1; j < m; ++j) {
      int p = pos[v.preference[j]];
      lo = std::min(lo, p);
      hi = std::max(hi, p);
      if (hi - lo != j) return false;
    }
  }
  return true;
}

namespace {

struct AxisSearch {
  const Election& e;
  int m, n;
  std::vector<std::vector<int>> rank_of;  // [voter][candidate] -> 1-based rank
  std::vector<int> left_block, right_block;  // placement order, outside-in
  std::vector<char> placed;
  long long nodes = 0;
  static constexpr long long kNodeBudget = 4'000'000;

  explicit AxisSearch(const Election& el) : e(el), m(el.m()), n(el.n()) {
    rank_of.assign(n, std::vector<int>(m));
    for (int v = 0; v < n; ++v)
      for (int j = 0; j < m; ++j) rank_of[v][e.voters[v].preference[j]] = j + 1;
    placed.assign(m, 0);
  }

  // Candidates ranked last among the unplaced ones by at least one voter.
  std::vector<int> last_of_remaining() const {
    std::vector<char> mark(m, 0);
    std::vector<int> out;
    for (int v = 0; v < n; ++v) {
      const std::vector<int>& pref = e.voters[v].preference;
      for (int j = m - 1; j >= 0; --j) {
        if (!placed[pref[j]]) {
          if (!mark[pref[j]]) {
            mark[pref[j]] = 1;
            out.push_back(pref[j]);
          }
          break;
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Necessary condition for placing c as the new innermost element of a
  // block: for every voter, the block members she ranks below c must sit
  // strictly outside every member she ranks above c.
  bool block_consistent(const std::vector<int>& block, int c) const {
    for (int v = 0; v < n; ++v) {
      int q = rank_of[v][c];
      int best_above = m + 1;  // smallest rank seen so far (an "above c" witness)
      for (int b : block) {
        int r = rank_of[v][b];
        if (r > q && best_above < q) return false;  // below-c member inside an above-c one
        best_above = std::min(best_above, r);
      }
    }
    return true;
  }

  bool dfs() {
    if (++nodes > kNodeBudget)
      throw std::runtime_error("single_peaked_axis: search budget exceeded");
    int placed_count = static_cast<int>(left_block.size() + right_block.size());
    if (placed_count == m) return axis_is_valid(e, axis());
    std::vector<int> last = last_of_remaining();
    if (static_cast<int>(last.size()) > 2) return false;
    bool first_step = placed_count == 0;
    for (int c : last) {
      for (int side = 0; side < (first_step ? 1 : 2); ++side) {
        std::vector<int>& block = side == 0 ? left_block : right_block;
        if (!block_consistent(left_block, c) || !block_consistent(right_block, c)) break;
        block.push_back(c);
        placed[c] = 1;
        if (dfs()) return true;
        placed[c] = 0;
        block.pop_back();
      }
    }
    return false;
  }

  Axis axis() const {
    Axis a;
    a.order = left_block;
    a.order.insert(a.order.end(), right_block.rbegin(), right_block.rend());
    return a;
  }
};

}  // namespace

std::optional<Axis> single_peaked_axis(const Election& e) {
  if (e.m() <= 2) {
    Axis a;
    for (int c = 0; c < e.m(); ++c) a.order.push_back(c);
    return a;
  }
  AxisSearch search(e);
  if (!search.dfs()) return std::nullopt;
  Axis a = search.axis();
  if (!axis_is_valid(e, a))
    throw std::logic_error("single_peaked_axis: constructed axis failed verification");
  return a;
}

}  // namespace campaign
