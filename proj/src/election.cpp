#include "campaign/election.hpp"

#include <algorithm>
#include <stdexcept>

namespace campaign {

void validate(const Election& e) {
  if (e.num_candidates < 1) throw std::invalid_argument("election: need at least one candidate");
  if (e.voters.empty()) throw std::invalid_argument("election: need at least one voter");
  if (e.designated < 0 || e.designated >= e.num_candidates)
    throw std::invalid_argument("election: designated candidate out of range");
  std::vector<char> seen(e.num_candidates);
  for (const Voter& v : e.voters) {
    if (static_cast<int>(v.preference.size()) != e.num_candidates)
      throw std::invalid_argument("election: preference length != candidate count");
    std::fill(seen.begin(), seen.end(), 0);
    for (int c : v.preference) {
      if (c < 0 || c >= e.num_candidates || seen[c])
        throw std::invalid_argument("election: preference is not a permutation");
      seen[c] = 1;
    }
    if (v.approval_count < 0 || v.approval_count > e.num_candidates)
      throw std::invalid_argument("election: approval count out of range");
  }
}

std::string rule_name(const RuleId& rule) {
  switch (rule.kind) {
    case RuleKind::k_approval: return "kapproval " + std::to_string(rule.k);
    case RuleKind::bucklin: return "bucklin";
    case RuleKind::bucklin_simplified: return "bucklin-simplified";
    case RuleKind::spav: return "spav";
    case RuleKind::fallback: return "fallback";
    case RuleKind::fallback_simplified: return "fallback-simplified";
  }
  return "?";
}

std::optional<RuleId> rule_from_name(const std::string& name) {
  if (name == "bucklin") return RuleId::bucklin();
  if (name == "bucklin-simplified") return RuleId::bucklin_simplified();
  if (name == "spav") return RuleId::spav();
  if (name == "fallback") return RuleId::fallback();
  if (name == "fallback-simplified") return RuleId::fallback_simplified();
  if (name.rfind("kapproval ", 0) == 0) {
    try {
      int k = std::stoi(name.substr(10));
      if (k >= 1) return RuleId::k_approval(k);
    } catch (const std::exception&) {
    }
  }
  return std::nullopt;
}

bool WinnerReport::contains(int c) const {
  return std::binary_search(winners.begin(), winners.end(), c);
}

int rank(const Election& e, int candidate, int voter) {
  if (voter < 0 || voter >= e.n()) throw std::out_of_range("rank: voter index");
  const std::vector<int>& pref = e.voters[voter].preference;
  if (candidate < 0 || candidate >= e.m()) throw std::out_of_range("rank: candidate index");
  for (int j = 0; j < e.m(); ++j)
    if (pref[j] == candidate) return j + 1;
  throw std::logic_error("rank: candidate missing from preference");
}

std::vector<int> k_approval_scores(const Election& e, int k) {
  if (k < 1 || k > e.m()) throw std::out_of_range("k_approval_scores: round out of range");
  std::vector<int> s(e.m(), 0);
  for (const Voter& v : e.voters)
    for (int j = 0; j < k; ++j) ++s[v.preference[j]];
  return s;
}

std::vector<int> approval_scores(const Election& e) {
  std::vector<int> s(e.m(), 0);
  for (const Voter& v : e.voters)
    for (int j = 0; j < v.approval_count; ++j) ++s[v.preference[j]];
  return s;
}

std::vector<int> truncated_round_scores(const Election& e, int k) {
  std::vector<int> s(e.m(), 0);
  for (const Voter& v : e.voters) {
    int top = std::min(k, v.approval_count);
    for (int j = 0; j < top; ++j) ++s[v.preference[j]];
  }
  return s;
}

namespace {

std::vector<int> argmax_set(const std::vector<int>& scores) {
  int best = *std::max_element(scores.begin(), scores.end());
  std::vector<int> out;
  for (int c = 0; c < static_cast<int>(scores.size()); ++c)
    if (scores[c] == best) out.push_back(c);
  return out;
}

WinnerReport bucklin_style(const Election& e, bool truncated, bool simplified) {
  const int maj = e.majority();
  for (int k = 1; k <= e.m(); ++k) {
    std::vector<int> s = truncated ? truncated_round_scores(e, k) : k_approval_scores(e, k);
    if (*std::max_element(s.begin(), s.end()) >= maj) {
      WinnerReport r;
      r.winning_round = k;
      if (simplified) {
        for (int c = 0; c < e.m(); ++c)
          if (s[c] >= maj) r.winners.push_back(c);
      } else {
        r.winners = argmax_set(s);
      }
      r.scores = std::move(s);
      return r;
    }
  }
  if (!truncated) throw std::logic_error("bucklin: no majority round in a full profile");
  // Fallback default: no candidate is ranked by more than half of the
  // voters, so approval scores decide.
  WinnerReport r;
  r.scores = approval_scores(e);
  r.winners = argmax_set(r.scores);
  return r;
}

}  // namespace

WinnerReport winners(const Election& e, const RuleId& rule) {
  if (e.n() < 1 || e.m() < 1) throw std::invalid_argument("winners: empty election");
  switch (rule.kind) {
    case RuleKind::k_approval: {
      WinnerReport r;
      r.scores = k_approval_scores(e, rule.k);
      r.winners = argmax_set(r.scores);
      return r;
    }
    case RuleKind::spav: {
      WinnerReport r;
      r.scores = approval_scores(e);
      r.winners = argmax_set(r.scores);
      return r;
    }
    case RuleKind::bucklin:
      return bucklin_style(e, false, false);
    case RuleKind::bucklin_simplified:
      return bucklin_style(e, false, true);
    case RuleKind::fallback:
      return bucklin_style(e, true, false);
    case RuleKind::fallback_simplified:
      return bucklin_style(e, true, true);
  }
  throw std::logic_error("winners: unknown rule");
}

Election apply_shift(const Election& e, const ShiftAction& action) {
  if (static_cast<int>(action.shifts.size()) != e.n())
    throw std::invalid_argument("apply_shift: action length != voter count");
  Election out = e;
  for (int i = 0; i < e.n(); ++i) {
    int t = action.shifts[i];
    if (t < 0) throw std::invalid_argument("apply_shift: negative shift");
    if (t == 0) continue;
    std::vector<int>& pref = out.voters[i].preference;
    int pos = static_cast<int>(std::find(pref.begin(), pref.end(), e.designated) - pref.begin());
    int target = std::max(0, pos - t);
    std::rotate(pref.begin() + target, pref.begin() + pos, pref.begin() + pos + 1);
  }
  return out;
}

Election apply_push(const Election& e, const PushAction& action) {
  if (static_cast<int>(action.deltas.size()) != e.n())
    throw std::invalid_argument("apply_push: action length != voter count");
  Election out = e;
  for (int i = 0; i < e.n(); ++i) {
    int l = e.voters[i].approval_count + action.deltas[i];
    out.voters[i].approval_count = std::clamp(l, 0, e.m());
  }
  return out;
}

}  // namespace campaign
