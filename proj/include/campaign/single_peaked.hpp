#pragma once

#include <optional>
#include <vector>

#include "campaign/election.hpp"

namespace campaign {

/// Societal axis: a permutation of candidate indices.
struct Axis {
  std::vector<int> order;
};

/// Prefix-interval verifier: true iff every prefix of every vote is a
/// contiguous interval of the axis.
bool axis_is_valid(const Election& e, const Axis& axis);

/// Finds a societal axis witnessing single-peakedness, or nullopt.
///
/// Builds the axis from the outside in: a candidate ranked last among the
/// remaining ones by some voter must occupy one of the two free ends, so the
/// set of such candidates (at most two, otherwise the profile is not
/// single-peaked) drives the placement. Side choices that survive a
/// consistency check are explored by backtracking and the completed axis is
/// verified before being returned.
std::optional<Axis> single_peaked_axis(const Election& e);

}  // namespace campaign
