#include <doctest.h>

#include "campaign/instances.hpp"
#include "campaign/single_peaked.hpp"
#include "testutil.hpp"

using namespace campaign;
using testutil::make_election;

TEST_CASE("two candidates are always single-peaked") {
  Election e = make_election(2, 0, {{{0, 1}, 1}, {{1, 0}, 2}});
  auto axis = single_peaked_axis(e);
  REQUIRE(axis.has_value());
  CHECK(axis_is_valid(e, *axis));
}

TEST_CASE("opposed orders admit the shared axis") {
  Election e = make_election(3, 0, {{{0, 1, 2}, 1}, {{2, 1, 0}, 1}});
  auto axis = single_peaked_axis(e);
  REQUIRE(axis.has_value());
  CHECK(axis_is_valid(e, *axis));
  // only a b c and its reverse work here
  CHECK(axis->order[1] == 1);
}

TEST_CASE("a condorcet cycle of votes is not single-peaked") {
  Election e = make_election(3, 0, {{{0, 1, 2}, 1}, {{1, 2, 0}, 1}, {{2, 0, 1}, 1}});
  CHECK_FALSE(single_peaked_axis(e).has_value());
  CHECK_FALSE(testutil::single_peaked_oracle(e));
}

TEST_CASE("detection agrees with the factorial oracle on random elections") {
  int found = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    int m = 1 + seed % 6;
    int n = 1 + (seed / 2) % 5;
    Election e = gen_random(m, n, seed * 13 + 7, std::nullopt);
    auto axis = single_peaked_axis(e);
    CAPTURE(seed);
    CHECK(axis.has_value() == testutil::single_peaked_oracle(e));
    if (axis) {
      ++found;
      CHECK(axis_is_valid(e, *axis));
    }
  }
  CHECK(found > 0);
}

TEST_CASE("generated single-peaked elections are recognized") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto [e, axis] = gen_single_peaked(1 + seed % 7, 1 + seed % 6, seed);
    CHECK(axis_is_valid(e, axis));
    auto detected = single_peaked_axis(e);
    REQUIRE(detected.has_value());
    CHECK(axis_is_valid(e, *detected));
  }
}

TEST_CASE("verifier rejects a bad axis") {
  Election e = make_election(3, 0, {{{0, 1, 2}, 1}});
  CHECK(axis_is_valid(e, Axis{{0, 1, 2}}));
  CHECK_FALSE(axis_is_valid(e, Axis{{0, 2, 1}}));
  CHECK_FALSE(axis_is_valid(e, Axis{{0, 1}}));
  CHECK_FALSE(axis_is_valid(e, Axis{{0, 0, 2}}));
}
