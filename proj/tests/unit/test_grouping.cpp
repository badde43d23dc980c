#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "icnoma/error.hpp"
#include "icnoma/grouping.hpp"

using icnoma::ChannelState;
using icnoma::Group;
using icnoma::GroupAssignment;

namespace {

// Group by nearest representative written out from the pseudocode with its
// strict comparisons, independent of the library loop.
std::vector<Group> oracle_tags(const std::vector<double>& g) {
    std::vector<double> s = g;
    std::sort(s.begin(), s.end());
    const double mx = s.back();
    const double mn = s.front();
    const std::size_t n = s.size();
    const double med = n % 2 ? s[n / 2] : (s[n / 2 - 1] + s[n / 2]) / 2;
    std::vector<Group> tags;
    for (double x : g) {
        const double a = std::fabs(mx - x);
        const double b = std::fabs(med - x);
        const double c = std::fabs(mn - x);
        if (a < b && a < c) {
            tags.push_back(Group::Near);
        } else if (b < a && b < c) {
            tags.push_back(Group::Intermediate);
        } else {
            tags.push_back(Group::Far);
        }
    }
    return tags;
}

}  // namespace

TEST(AssignGroups, SevenUserExample) {
    const auto ga = icnoma::assign_groups({{10, 9.8, 9.9, 4.0, 4.1, 0.5, 0.4}});
    EXPECT_EQ(ga.near, (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ(ga.intermediate, (std::vector<std::size_t>{3, 4}));
    EXPECT_EQ(ga.far, (std::vector<std::size_t>{5, 6}));
}

TEST(AssignGroups, ThreeSingletons) {
    const auto ga = icnoma::assign_groups({{3, 2, 1}});
    EXPECT_EQ(ga.near, (std::vector<std::size_t>{0}));
    EXPECT_EQ(ga.intermediate, (std::vector<std::size_t>{1}));
    EXPECT_EQ(ga.far, (std::vector<std::size_t>{2}));
}

TEST(AssignGroups, EqualGainsLeaveGroupsEmpty) {
    EXPECT_THROW(icnoma::assign_groups({{5, 5, 5}}), icnoma::ValidationError);
}

TEST(AssignGroups, RejectsBadInput) {
    EXPECT_THROW(icnoma::assign_groups({{3, 2}}), icnoma::ValidationError);
    EXPECT_THROW(icnoma::assign_groups({{3, 0, 1}}), icnoma::ValidationError);
    EXPECT_THROW(icnoma::assign_groups({{3, -2, 1}}), icnoma::ValidationError);
}

TEST(AssignGroups, TieBetweenMaxAndMedianFallsToFar) {
    // Median 4 (mean of 2 and 6), max 6: gain 5 is 1 from both.
    const auto ga = icnoma::assign_groups({{6, 5, 3, 1}});
    EXPECT_EQ(ga.group_of(1), Group::Far);
}

TEST(AssignGroups, EvenCountUsesMeanOfMiddles) {
    // Middles 2 and 8, median 5; gain 4 is nearest to it.
    const auto ga = icnoma::assign_groups({{10, 8, 4, 2, 0.5, 9.5}});
    EXPECT_EQ(ga.group_of(2), Group::Intermediate);
}

TEST(GroupMinGains, Examples) {
    const ChannelState ch{{10, 9.8, 9.9, 4.0, 4.1, 0.5, 0.4}};
    const auto g = icnoma::group_min_gains(ch, icnoma::assign_groups(ch));
    EXPECT_DOUBLE_EQ(g.near, 9.8);
    EXPECT_DOUBLE_EQ(g.intermediate, 4.0);
    EXPECT_DOUBLE_EQ(g.far, 0.4);

    const ChannelState three{{3, 2, 1}};
    const auto t = icnoma::group_min_gains(three, icnoma::assign_groups(three));
    EXPECT_DOUBLE_EQ(t.near, 3);
    EXPECT_DOUBLE_EQ(t.intermediate, 2);
    EXPECT_DOUBLE_EQ(t.far, 1);
}

TEST(GroupMinGains, RejectsTiedMinima) {
    const ChannelState ch{{2.0, 5.0, 2.0, 1.0}};
    const auto ga = icnoma::assignment_from_tags({Group::Near, Group::Near, Group::Intermediate, Group::Far});
    EXPECT_THROW(icnoma::group_min_gains(ch, ga), icnoma::ValidationError);
}

TEST(AssignGroups, MatchesPseudocodeOracle) {
    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> gain(0.05, 20.0);
    int compared = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        std::vector<double> g(3 + rng() % 10);
        for (auto& x : g) x = gain(rng);
        const auto tags = oracle_tags(g);
        const bool all_present = std::count(tags.begin(), tags.end(), Group::Near) > 0 &&
                                 std::count(tags.begin(), tags.end(), Group::Intermediate) > 0 &&
                                 std::count(tags.begin(), tags.end(), Group::Far) > 0;
        if (!all_present) {
            EXPECT_THROW(icnoma::assign_groups({g}), icnoma::ValidationError);
            continue;
        }
        const auto ga = icnoma::assign_groups({g});
        ++compared;
        ASSERT_EQ(ga.user_count(), g.size());
        for (std::size_t i = 0; i < g.size(); ++i) ASSERT_EQ(ga.group_of(i), tags[i]);
    }
    EXPECT_GT(compared, 1000);
}

TEST(AssignGroups, PermutationEquivariant) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> gain(0.05, 20.0);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<double> g(3 + rng() % 8);
        for (auto& x : g) x = gain(rng);
        std::vector<std::size_t> perm(g.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<double> pg(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) pg[i] = g[perm[i]];
        GroupAssignment a;
        GroupAssignment b;
        try {
            a = icnoma::assign_groups({g});
        } catch (const icnoma::ValidationError&) {
            EXPECT_THROW(icnoma::assign_groups({pg}), icnoma::ValidationError);
            continue;
        }
        b = icnoma::assign_groups({pg});
        for (std::size_t i = 0; i < g.size(); ++i) ASSERT_EQ(b.group_of(i), a.group_of(perm[i]));
    }
}

TEST(AssignGroups, SeparatedClustersMapToGroups) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 500; ++trial) {
        // Centers 1, 5, 9 are 4 apart; spread below 1 keeps each cluster tight.
        const double spread = 0.9 * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        std::uniform_real_distribution<double> jitter(-spread / 2, spread / 2);
        const std::size_t k = 1 + rng() % 4;
        std::vector<double> g;
        std::vector<Group> expect;
        for (std::size_t i = 0; i < k; ++i) {
            g.push_back(9 + jitter(rng));
            expect.push_back(Group::Near);
            g.push_back(5 + jitter(rng));
            expect.push_back(Group::Intermediate);
            g.push_back(1 + jitter(rng));
            expect.push_back(Group::Far);
        }
        const auto ga = icnoma::assign_groups({g});
        for (std::size_t i = 0; i < g.size(); ++i) ASSERT_EQ(ga.group_of(i), expect[i]);
    }
}

TEST(Group, DecodeOrder) {
    EXPECT_TRUE(icnoma::can_decode(Group::Near, Group::Far));
    EXPECT_TRUE(icnoma::can_decode(Group::Intermediate, Group::Far));
    EXPECT_FALSE(icnoma::can_decode(Group::Far, Group::Intermediate));
    EXPECT_FALSE(icnoma::can_decode(Group::Intermediate, Group::Near));
    EXPECT_EQ(icnoma::parse_group("mid"), Group::Intermediate);
    EXPECT_THROW(icnoma::parse_group("middle"), icnoma::ValidationError);
}
