#pragma once

#include <optional>
#include <string>
#include <vector>

#include "campaign/bribery.hpp"
#include "campaign/election.hpp"

namespace campaign {

/// Parsed instance file: the election and rule, optional cost profiles and
/// budget, plus the candidate-name alias table (empty = bare indices).
struct InstanceFile {
  Election election;
  RuleId rule = RuleId::bucklin();
  std::optional<ShiftCostProfile> shift_costs;
  std::optional<SupportCostProfile> support_costs;
  std::optional<Cost> budget;
  std::vector<std::string> names;
};

/// Line-oriented format, `#` starts a comment:
///
///   election M N
///   rule <bucklin|bucklin-simplified|spav|fallback|fallback-simplified|kapproval K>
///   designated <candidate>
///   candidates: name0 name1 ...            (optional alias table)
///   vote: c1 c2 ... cM | ELL               (N lines)
///   shiftcost: v0 v1 ... vM                (N lines, optional)
///   supportcost: v0 v1 ... vM              (N lines, optional; values for
///                                           deltas -ell .. M-ell)
///   budget: B                              (optional)
///
/// Costs use `inf` for infinity. Candidates are written as names when the
/// alias table is present, else as 0-based indices.
/// Throws std::runtime_error with a `line N:` prefix on malformed input.
InstanceFile parse_instance(const std::string& text);

/// Canonical serialization; parse(serialize(x)) == x byte-for-byte.
std::string serialize_instance(const InstanceFile& file);

}  // namespace campaign
