#include "icnoma/grouping.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "icnoma/error.hpp"

namespace icnoma {

std::string_view to_string(Group g) {
    switch (g) {
        case Group::Far:
            return "far";
        case Group::Intermediate:
            return "intermediate";
        case Group::Near:
            return "near";
    }
    return "?";
}

Group parse_group(std::string_view text) {
    if (text == "far") return Group::Far;
    if (text == "intermediate" || text == "mid") return Group::Intermediate;
    if (text == "near") return Group::Near;
    throw ValidationError("unknown group \"" + std::string(text) + "\" (expected near, intermediate or far)");
}

const std::vector<std::size_t>& GroupAssignment::members(Group g) const {
    switch (g) {
        case Group::Far:
            return far;
        case Group::Intermediate:
            return intermediate;
        case Group::Near:
            return near;
    }
    return far;
}

Group GroupAssignment::group_of(std::size_t user) const {
    for (auto g : {Group::Far, Group::Intermediate, Group::Near}) {
        const auto& m = members(g);
        if (std::find(m.begin(), m.end(), user) != m.end()) return g;
    }
    throw ValidationError("user " + std::to_string(user + 1) + " is not in any group");
}

namespace {

void require_nonempty(const GroupAssignment& ga) {
    for (auto g : {Group::Near, Group::Intermediate, Group::Far}) {
        if (ga.members(g).empty()) {
            throw ValidationError("the " + std::string(to_string(g)) +
                                  " group is empty; use the two-group or plain index coding flow instead");
        }
    }
}

}  // namespace

GroupAssignment assignment_from_tags(const std::vector<Group>& tags) {
    GroupAssignment ga;
    for (std::size_t i = 0; i < tags.size(); ++i) {
        switch (tags[i]) {
            case Group::Far:
                ga.far.push_back(i);
                break;
            case Group::Intermediate:
                ga.intermediate.push_back(i);
                break;
            case Group::Near:
                ga.near.push_back(i);
                break;
        }
    }
    require_nonempty(ga);
    return ga;
}

GroupAssignment assign_groups(const ChannelState& channel) {
    const auto& g = channel.gains;
    if (g.size() < 3) throw ValidationError("grouping needs at least 3 users, got " + std::to_string(g.size()));
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!(g[i] > 0.0) || !std::isfinite(g[i])) {
            throw ValidationError("user " + std::to_string(i + 1) + ": channel gain must be positive");
        }
    }

    std::vector<double> sorted = g;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    const double g_max = sorted.back();
    const double g_min = sorted.front();
    const double g_med = (n % 2 == 1) ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);

    GroupAssignment ga;
    for (std::size_t i = 0; i < n; ++i) {
        const double to_max = std::abs(g_max - g[i]);
        const double to_med = std::abs(g_med - g[i]);
        const double to_min = std::abs(g_min - g[i]);
        if (to_max < std::min(to_med, to_min)) {
            ga.near.push_back(i);
        } else if (to_med < std::min(to_max, to_min)) {
            ga.intermediate.push_back(i);
        } else {
            ga.far.push_back(i);
        }
    }
    require_nonempty(ga);
    return ga;
}

GroupMinGains group_min_gains(const ChannelState& channel, const GroupAssignment& groups) {
    auto worst = [&](Group grp) {
        const auto& members = groups.members(grp);
        if (members.empty()) throw ValidationError("the " + std::string(to_string(grp)) + " group is empty");
        double m = std::numeric_limits<double>::infinity();
        for (auto i : members) m = std::min(m, channel.gains.at(i));
        return m;
    };
    const GroupMinGains out{worst(Group::Near), worst(Group::Intermediate), worst(Group::Far)};
    if (!(out.near > out.intermediate && out.intermediate > out.far && out.far > 0.0)) {
        throw ValidationError("group minimum gains must satisfy near > intermediate > far > 0");
    }
    return out;
}

}  // namespace icnoma
