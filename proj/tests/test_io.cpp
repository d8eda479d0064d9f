#include <doctest.h>

#include "campaign/io.hpp"
#include "campaign/instances.hpp"

using namespace campaign;

namespace {

const char* kMinimal = "election 1 1\nrule spav\ndesignated 0\nvote: 0 | 1\n";

}  // namespace

TEST_CASE("minimal instance parses") {
  InstanceFile f = parse_instance(kMinimal);
  CHECK(f.election.m() == 1);
  CHECK(f.election.n() == 1);
  CHECK(f.rule.kind == RuleKind::spav);
  CHECK(serialize_instance(f) == kMinimal);
}

TEST_CASE("named candidates round-trip") {
  std::string text =
      "election 3 2\n"
      "rule fallback\n"
      "designated p\n"
      "candidates: a b p\n"
      "vote: a p b | 2\n"
      "vote: b a p | 1\n"
      "supportcost: 2 1 0 inf\n"
      "supportcost: 2 0 1 3\n"
      "budget: 4\n";
  InstanceFile f = parse_instance(text);
  CHECK(f.election.designated == 2);
  CHECK(f.names == std::vector<std::string>{"a", "b", "p"});
  REQUIRE(f.support_costs.has_value());
  CHECK(f.support_costs->values[0][3].is_infinite());
  CHECK(f.budget == Cost(4));
  CHECK(serialize_instance(f) == text);
}

TEST_CASE("comments and blank lines are ignored, errors carry line numbers") {
  std::string text =
      "# a comment\n"
      "election 2 1\n"
      "\n"
      "rule bucklin\n"
      "designated 1\n"
      "vote: 1 0 | 1\n";
  CHECK_NOTHROW(parse_instance(text));

  auto check_fails_with = [](const std::string& body, const std::string& needle) {
    try {
      parse_instance(body);
      FAIL_CHECK("expected a parse error for: " << needle);
    } catch (const std::runtime_error& ex) {
      std::string msg = ex.what();
      CAPTURE(msg);
      CHECK(msg.find("line ") == 0);
      CHECK(msg.find(needle) != std::string::npos);
    }
  };
  check_fails_with("election 2 1\nrule nosuch\ndesignated 0\nvote: 0 1 | 0\n", "unknown rule");
  check_fails_with("election 2 1\nrule spav\ndesignated 0\nvote: 0 0 | 0\n", "permutation");
  check_fails_with("election 2 1\nrule spav\ndesignated 0\nvote: 0 1 | 7\n", "approval count");
  check_fails_with("election 2 1\nrule spav\ndesignated 0\nvote: 0 1 | 0\nshiftcost: 1 1 1\n",
                   "must be 0");
  check_fails_with("election 2 1\nrule spav\ndesignated 0\nvote: 0 1 | 1\nsupportcost: 0 1 1\n",
                   "must be 0");
  check_fails_with(
      "election 2 1\nrule spav\ndesignated 0\nvote: 0 1 | 0\nshiftcost: 0 5 1\n",
      "non-decreasing");
  check_fails_with("election 2 1\nrule spav\ndesignated 9\nvote: 0 1 | 0\n", "unknown candidate");
}

TEST_CASE("serialize-parse identity on generated instances") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    InstanceFile f;
    f.election = gen_random(3 + seed % 3, 2 + seed % 4, seed, std::nullopt);
    f.rule = seed % 2 ? RuleId::fallback_simplified() : RuleId::bucklin();
    f.shift_costs = random_shift_costs(f.election, seed + 1, 5, 15);
    f.support_costs = random_support_costs(f.election, seed + 2, 5, 15);
    if (seed % 3 == 0) f.budget = Cost(seed);
    std::string text = serialize_instance(f);
    InstanceFile g = parse_instance(text);
    CHECK(serialize_instance(g) == text);
  }
}
