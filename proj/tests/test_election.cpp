#include <doctest.h>

#include "campaign/election.hpp"
#include "campaign/instances.hpp"
#include "campaign/rng.hpp"
#include "testutil.hpp"

using namespace campaign;
using testutil::make_election;

TEST_CASE("rank reads the preference permutation directly") {
  Election e = make_election(3, 0, {{{0, 1, 2}, 3}});
  CHECK(rank(e, 0, 0) == 1);
  CHECK(rank(e, 2, 0) == 3);
  Election f = make_election(3, 2, {{{1, 2, 0}, 1}});
  CHECK(rank(f, 2, 0) == 2);
  CHECK_THROWS_AS(rank(e, 3, 0), std::out_of_range);
  CHECK_THROWS_AS(rank(e, 0, 5), std::out_of_range);
}

TEST_CASE("k-approval scores count top-k membership only") {
  Election e = make_election(3, 0, {{{0, 1, 2}, 0}});
  CHECK(k_approval_scores(e, 1) == std::vector<int>{1, 0, 0});

  Election f = make_election(3, 0, {{{0, 1, 2}, 1}, {{1, 0, 2}, 2}, {{2, 0, 1}, 0}});
  CHECK(k_approval_scores(f, 2) == std::vector<int>{3, 2, 1});
  CHECK(k_approval_scores(f, 3) == std::vector<int>{3, 3, 3});
  CHECK_THROWS_AS(k_approval_scores(f, 0), std::out_of_range);
  CHECK_THROWS_AS(k_approval_scores(f, 4), std::out_of_range);
}

TEST_CASE("spav uses approval counts") {
  Election e = make_election(3, 0, {{{0, 1, 2}, 1}});
  WinnerReport r = winners(e, RuleId::spav());
  CHECK(r.winners == std::vector<int>{0});
  CHECK_FALSE(r.winning_round.has_value());
}

TEST_CASE("bucklin classic vs simplified on the three-voter example") {
  Election e = make_election(3, 0,
                             {{{0, 1, 2}, 3}, {{1, 0, 2}, 3}, {{2, 0, 1}, 3}});
  WinnerReport simple = winners(e, RuleId::bucklin_simplified());
  CHECK(simple.winning_round == 2);
  CHECK(simple.winners == std::vector<int>{0, 1});
  WinnerReport classic = winners(e, RuleId::bucklin());
  CHECK(classic.winning_round == 2);
  CHECK(classic.winners == std::vector<int>{0});
}

TEST_CASE("fallback defaults to approval scores when no round has a majority") {
  Election e = make_election(3, 0,
                             {{{0, 1, 2}, 1}, {{1, 0, 2}, 1}, {{2, 0, 1}, 1}});
  WinnerReport r = winners(e, RuleId::fallback());
  CHECK_FALSE(r.winning_round.has_value());
  CHECK(r.winners == std::vector<int>{0, 1, 2});
}

TEST_CASE("apply_shift moves the designated candidate up, clamped at the top") {
  Election e = make_election(3, 2, {{{0, 1, 2}, 1}});
  Election s0 = apply_shift(e, ShiftAction{{0}});
  CHECK(s0.voters[0].preference == std::vector<int>{0, 1, 2});
  Election s2 = apply_shift(e, ShiftAction{{2}});
  CHECK(s2.voters[0].preference == std::vector<int>{2, 0, 1});

  Election f = make_election(3, 2, {{{0, 2, 1}, 1}});
  Election s5 = apply_shift(f, ShiftAction{{5}});
  CHECK(s5.voters[0].preference == std::vector<int>{2, 0, 1});
  CHECK(s5.voters[0].approval_count == 1);
  CHECK_THROWS_AS(apply_shift(e, ShiftAction{{0, 0}}), std::invalid_argument);
}

TEST_CASE("apply_push clamps approval counts to [0, m]") {
  Election e = make_election(3, 0, {{{0, 1, 2}, 2}});
  CHECK(apply_push(e, PushAction{{0}}).voters[0].approval_count == 2);
  CHECK(apply_push(e, PushAction{{-1}}).voters[0].approval_count == 1);
  CHECK(apply_push(e, PushAction{{-5}}).voters[0].approval_count == 0);
  CHECK(apply_push(e, PushAction{{9}}).voters[0].approval_count == 3);
  CHECK_THROWS_AS(apply_push(e, PushAction{{0, 0}}), std::invalid_argument);
}

TEST_CASE("winner sets match an independent recomputation on random elections") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    Rng rng(seed * 77 + 5);
    int m = rng.uniform_int(1, 5);
    int n = rng.uniform_int(1, 7);
    Election e = gen_random(m, n, seed, std::nullopt);
    std::vector<RuleId> rules = {RuleId::bucklin(),  RuleId::bucklin_simplified(),
                                 RuleId::spav(),     RuleId::fallback(),
                                 RuleId::fallback_simplified(),
                                 RuleId::k_approval(rng.uniform_int(1, m))};
    for (const RuleId& rule : rules) {
      CAPTURE(seed);
      CAPTURE(rule_name(rule));
      CHECK(winners(e, rule).winners == testutil::winners_reference(e, rule));
    }
  }
}

TEST_CASE("classic Bucklin winners are simplified Bucklin winners") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Election e = gen_random(1 + seed % 5, 1 + seed % 7, seed ^ 0xbeef, std::nullopt);
    WinnerReport classic = winners(e, RuleId::bucklin());
    WinnerReport simple = winners(e, RuleId::bucklin_simplified());
    for (int w : classic.winners) CHECK(simple.contains(w));
  }
}

TEST_CASE("full approval makes fallback coincide with bucklin") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    int m = 1 + seed % 5;
    Election e = gen_random(m, 1 + seed % 6, seed + 1234, m);
    CHECK(winners(e, RuleId::fallback()).winners == winners(e, RuleId::bucklin()).winners);
    CHECK(winners(e, RuleId::fallback_simplified()).winners ==
          winners(e, RuleId::bucklin_simplified()).winners);
  }
}

TEST_CASE("k-approval ignores approval counts") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    int m = 2 + seed % 4;
    Election e = gen_random(m, 1 + seed % 6, seed + 99, std::nullopt);
    Election f = e;
    for (Voter& v : f.voters) v.approval_count = 0;
    for (int k = 1; k <= m; ++k)
      CHECK(k_approval_scores(e, k) == k_approval_scores(f, k));
  }
}

TEST_CASE("shift changes ranks as promised") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Rng rng(seed + 31);
    int m = 2 + seed % 4;
    Election e = gen_random(m, 1 + seed % 5, seed, std::nullopt);
    ShiftAction act{std::vector<int>(e.n(), 0)};
    for (int i = 0; i < e.n(); ++i) act.shifts[i] = rng.uniform_int(0, m);
    Election shifted = apply_shift(e, act);
    for (int i = 0; i < e.n(); ++i) {
      int before = rank(e, e.designated, i);
      int after = rank(shifted, e.designated, i);
      CHECK(after == std::max(1, before - act.shifts[i]));
      for (int c = 0; c < m; ++c) {
        if (c == e.designated) continue;
        CHECK(std::abs(rank(e, c, i) - rank(shifted, c, i)) <= 1);
      }
    }
  }
}
