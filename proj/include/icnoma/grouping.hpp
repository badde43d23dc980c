#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace icnoma {

/// Power-domain group. Ordered by SIC capability: a group can decode any
/// layer addressed to itself or to a group that compares lower.
enum class Group { Far = 0, Intermediate = 1, Near = 2 };

std::string_view to_string(Group g);
Group parse_group(std::string_view text);

/// Returns true if users of `receiver` can strip and decode a layer aimed at `target`.
constexpr bool can_decode(Group receiver, Group target) {
    return static_cast<int>(receiver) >= static_cast<int>(target);
}

/// Linear power gains, one per user (0-based).
struct ChannelState {
    std::vector<double> gains;
};

/// 0-based user indices per group, each sorted ascending.
struct GroupAssignment {
    std::vector<std::size_t> far;
    std::vector<std::size_t> intermediate;
    std::vector<std::size_t> near;

    [[nodiscard]] const std::vector<std::size_t>& members(Group g) const;
    [[nodiscard]] Group group_of(std::size_t user) const;
    [[nodiscard]] std::size_t user_count() const noexcept { return far.size() + intermediate.size() + near.size(); }

    friend bool operator==(const GroupAssignment&, const GroupAssignment&) = default;
};

/// Builds an assignment from one group tag per user. Throws ValidationError
/// if a group ends up empty.
GroupAssignment assignment_from_tags(const std::vector<Group>& tags);

/// Nearest-representative grouping against the max, median and min gains.
///
/// The comparisons are strict and checked in the order near, intermediate,
/// far, so a user tied between two representatives falls through to the
/// next branch. Even N uses the mean of the two middle gains as median.
/// Throws ValidationError for N < 3, nonpositive gains, or an empty group.
GroupAssignment assign_groups(const ChannelState& channel);

struct GroupMinGains {
    double near;
    double intermediate;
    double far;
};

/// Worst gain in each group; throws ValidationError unless near > intermediate > far.
GroupMinGains group_min_gains(const ChannelState& channel, const GroupAssignment& groups);

}  // namespace icnoma
