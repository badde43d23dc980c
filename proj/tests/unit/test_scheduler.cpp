#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "icnoma/error.hpp"
#include "icnoma/pipeline.hpp"
#include "icnoma/properties.hpp"
#include "icnoma/scenario.hpp"
#include "icnoma/scheduler.hpp"
#include "test_helpers.hpp"

using icnoma::CaseId;
using icnoma::CodeLengths;
using icnoma::Group;
using icnoma::TransmissionCounts;
using icnoma::TransmissionKind;

namespace {

struct TableRow {
    CaseId id;
    std::function<bool(long, long, long)> when;                   // (f, m, n)
    std::function<TransmissionCounts(long, long, long)> counts;   // (noma3, noma2, ic)
};

TransmissionCounts tc(long a, long b, long c) {
    return {static_cast<std::size_t>(a), static_cast<std::size_t>(b), static_cast<std::size_t>(c)};
}

// Case table, one row per case, copied out predicate by predicate.
const std::vector<TableRow>& table() {
    static const std::vector<TableRow> rows{
        {CaseId::I, [](long f, long m, long n) { return f == m && m == n; },
         [](long f, long, long) { return tc(f, 0, 0); }},
        {CaseId::II, [](long f, long m, long n) { return f > m && m > n; },
         [](long f, long m, long n) { return tc(n, m - n, f - m); }},
        {CaseId::III, [](long f, long m, long n) { return n > f && f > m; },
         [](long f, long m, long n) { return tc(m, f - m, n - f); }},
        {CaseId::IV, [](long f, long m, long n) { return m > n && n > f; },
         [](long f, long m, long n) { return tc(f, n - f, m - n); }},
        {CaseId::V, [](long f, long m, long n) { return f > m && m == n; },
         [](long f, long m, long n) { return tc(n, 0, f - m); }},
        {CaseId::VI, [](long f, long m, long n) { return f > n && n > m; },
         [](long f, long m, long n) { return tc(m, n - m, f - n); }},
        {CaseId::VII, [](long f, long m, long n) { return f == n && n > m; },
         [](long, long m, long n) { return tc(m, n - m, 0); }},
        {CaseId::VIII, [](long f, long m, long n) { return f == m && m > n; },
         [](long, long m, long n) { return tc(n, m - n, 0); }},
        {CaseId::IX, [](long f, long m, long n) { return n > f && f == m; },
         [](long f, long m, long n) { return tc(m, 0, n - f); }},
        {CaseId::X, [](long f, long m, long n) { return n == m && m > f; },
         [](long f, long m, long) { return tc(f, m - f, 0); }},
        {CaseId::XI, [](long f, long m, long n) { return m > f && f == n; },
         [](long f, long m, long n) { return tc(n, 0, m - f); }},
        {CaseId::XII, [](long f, long m, long n) { return n > m && m > f; },
         [](long f, long m, long n) { return tc(f, m - f, n - m); }},
        {CaseId::XIII, [](long f, long m, long n) { return m > f && f > n; },
         [](long f, long m, long n) { return tc(n, f - n, m - f); }},
    };
    return rows;
}

std::vector<Group> targets(const icnoma::Transmission& t) {
    std::vector<Group> out;
    for (const auto& l : t.layers) out.push_back(l.target);
    return out;
}

const icnoma::PowerProfile kProfile{};

}  // namespace

TEST(ClassifyCase, TableExamples) {
    auto c = icnoma::classify_case({3, 2, 1});
    EXPECT_EQ(c.id, CaseId::II);
    EXPECT_EQ(c.counts, (TransmissionCounts{1, 1, 1}));
    c = icnoma::classify_case({2, 2, 2});
    EXPECT_EQ(c.id, CaseId::I);
    EXPECT_EQ(c.counts, (TransmissionCounts{2, 0, 0}));
    c = icnoma::classify_case({1, 3, 2});
    EXPECT_EQ(c.id, CaseId::IV);
    EXPECT_EQ(c.counts, (TransmissionCounts{1, 1, 1}));
}

TEST(ClassifyCase, ExhaustiveAgainstTable) {
    for (long f = 1; f <= 6; ++f) {
        for (long m = 1; m <= 6; ++m) {
            for (long n = 1; n <= 6; ++n) {
                int matches = 0;
                const TableRow* hit = nullptr;
                for (const auto& row : table()) {
                    if (row.when(f, m, n)) {
                        ++matches;
                        hit = &row;
                    }
                }
                ASSERT_EQ(matches, 1) << f << "," << m << "," << n;
                const auto got = icnoma::classify_case(
                    {static_cast<std::size_t>(f), static_cast<std::size_t>(m), static_cast<std::size_t>(n)});
                EXPECT_EQ(got.id, hit->id) << f << "," << m << "," << n;
                EXPECT_EQ(got.counts, hit->counts(f, m, n)) << f << "," << m << "," << n;
                EXPECT_EQ(got.counts.total(), static_cast<std::size_t>(std::max({f, m, n})));
            }
        }
    }
}

TEST(ClassifyCase, ZeroLengthIsDegenerate) {
    auto c = icnoma::classify_case({2, 2, 0});
    EXPECT_EQ(c.id, CaseId::Degenerate);
    EXPECT_EQ(c.counts, (TransmissionCounts{0, 2, 0}));
    c = icnoma::classify_case({1, 0, 0});
    EXPECT_EQ(c.counts, (TransmissionCounts{0, 0, 1}));
    c = icnoma::classify_case({0, 0, 0});
    EXPECT_EQ(c.counts.total(), 0u);
    EXPECT_EQ(icnoma::to_string(CaseId::Degenerate), "DEGENERATE");
    EXPECT_EQ(icnoma::to_string(CaseId::XIII), "XIII");
}

TEST(BuildPlan, CountsAndLayeringOverGrid) {
    for (std::size_t f = 0; f <= 4; ++f) {
        for (std::size_t m = 0; m <= 4; ++m) {
            for (std::size_t n = 0; n <= 4; ++n) {
                const auto plan = icnoma::build_plan(testhelp::unit_codes(f, m, n), kProfile);
                const auto cls = icnoma::classify_case({f, m, n});
                EXPECT_EQ(plan.case_id, cls.id);
                EXPECT_EQ(plan.counts, cls.counts);
                ASSERT_EQ(plan.transmissions.size(), std::max({f, m, n}));
                TransmissionCounts seen;
                for (const auto& t : plan.transmissions) {
                    for (std::size_t i = 1; i < t.layers.size(); ++i) {
                        ASSERT_LT(t.layers[i - 1].coefficient, t.layers[i].coefficient);
                        // more power always goes to the farther group
                        ASSERT_GT(static_cast<int>(t.layers[i - 1].target), static_cast<int>(t.layers[i].target));
                    }
                    switch (t.kind) {
                        case TransmissionKind::Noma3:
                            ++seen.noma3;
                            ASSERT_EQ(targets(t), (std::vector<Group>{Group::Near, Group::Intermediate, Group::Far}));
                            EXPECT_EQ(t.layers[2].coefficient, kProfile.gamma);
                            break;
                        case TransmissionKind::Noma2:
                            ++seen.noma2;
                            ASSERT_EQ(t.layers.size(), 2u);
                            EXPECT_EQ(t.layers[0].coefficient, kProfile.alpha1);
                            break;
                        case TransmissionKind::Ic:
                            ++seen.ic;
                            ASSERT_EQ(t.layers.size(), 1u);
                            EXPECT_EQ(t.layers[0].coefficient, 1.0);
                            break;
                    }
                }
                EXPECT_EQ(seen, cls.counts) << f << "," << m << "," << n;
            }
        }
    }
}

TEST(BuildPlan, PairsRowsByPosition) {
    const auto codes = testhelp::unit_codes(3, 2, 1);
    const auto plan = icnoma::build_plan(codes, kProfile);
    ASSERT_EQ(plan.transmissions.size(), 3u);
    const auto& first = plan.transmissions[0];
    EXPECT_EQ(first.layers[0].codeword, codes.near.matrix().row(0));
    EXPECT_EQ(first.layers[1].codeword, codes.intermediate.matrix().row(0));
    EXPECT_EQ(first.layers[2].codeword, codes.far.matrix().row(0));
    const auto& second = plan.transmissions[1];
    EXPECT_EQ(second.kind, TransmissionKind::Noma2);
    EXPECT_EQ(targets(second), (std::vector<Group>{Group::Intermediate, Group::Far}));
    EXPECT_EQ(second.layers[0].codeword, codes.intermediate.matrix().row(1));
    EXPECT_EQ(second.layers[1].codeword, codes.far.matrix().row(1));
    const auto& third = plan.transmissions[2];
    EXPECT_EQ(third.kind, TransmissionKind::Ic);
    EXPECT_EQ(third.layers[0].target, Group::Far);
    EXPECT_EQ(third.layers[0].codeword, codes.far.matrix().row(2));
}

TEST(BuildPlan, ExampleThree) {
    const auto s = icnoma::ingest(testhelp::scenario_path("example3.json"));
    const auto p = s.problem();
    const auto g = s.groups();
    const auto codes = icnoma::design_codes(p, g, {icnoma::SolverKind::Exact, 10});
    const auto plan = icnoma::build_plan(codes, kProfile);
    EXPECT_EQ(plan.case_id, CaseId::XI);
    ASSERT_EQ(plan.transmissions.size(), 2u);
    EXPECT_EQ(plan.transmissions[0].kind, TransmissionKind::Noma3);
    EXPECT_EQ(plan.transmissions[1].kind, TransmissionKind::Ic);
    EXPECT_EQ(plan.transmissions[1].layers[0].target, Group::Intermediate);
    EXPECT_TRUE(icnoma::verify_delivery(p, g, plan));
}

TEST(BuildPlan, ExampleFour) {
    const auto s = icnoma::ingest(testhelp::scenario_path("example4.json"));
    const auto p = s.problem();
    const auto g = s.groups();
    const auto plan = icnoma::build_plan(icnoma::design_codes(p, g, {icnoma::SolverKind::Exact, 10}), kProfile);
    ASSERT_EQ(plan.transmissions.size(), 2u);
    for (const auto& t : plan.transmissions) {
        EXPECT_EQ(t.kind, TransmissionKind::Noma2);
        EXPECT_EQ(targets(t), (std::vector<Group>{Group::Intermediate, Group::Far}));
    }
    EXPECT_TRUE(icnoma::verify_delivery(p, g, plan));
}

TEST(BuildPlan, SingleFarRowIsOneIc) {
    const auto plan = icnoma::build_plan(testhelp::unit_codes(1, 0, 0), kProfile);
    ASSERT_EQ(plan.transmissions.size(), 1u);
    EXPECT_EQ(plan.transmissions[0].kind, TransmissionKind::Ic);
    EXPECT_EQ(plan.transmissions[0].layers[0].target, Group::Far);
}

TEST(VerifyDelivery, UselessNearRowFails) {
    const auto s = icnoma::ingest(testhelp::scenario_path("example3.json"));
    const auto p = s.problem();
    const auto g = s.groups();
    auto codes = icnoma::design_codes(p, g, {icnoma::SolverKind::Exact, 10});
    // every near user caches x3
    codes.near = icnoma::IndexCode(icnoma::BitMatrix::from_strings({"0010000"}));
    EXPECT_FALSE(icnoma::verify_delivery(p, g, icnoma::build_plan(codes, kProfile)));
}

TEST(VerifyDelivery, FarUserCannotUseNearLayer) {
    const auto p = testhelp::make_problem(3, {{{2, 3}, {}}, {{1, 3}, {}}, {{}, {1}}});
    const auto g = icnoma::assignment_from_tags({Group::Near, Group::Intermediate, Group::Far});
    const icnoma::IndexCode empty(3);
    const icnoma::IndexCode x1(icnoma::BitMatrix::from_strings({"100"}));
    EXPECT_FALSE(icnoma::verify_delivery(p, g, icnoma::build_plan({empty, empty, x1}, kProfile)));
    EXPECT_FALSE(icnoma::verify_delivery(p, g, icnoma::build_plan({empty, x1, empty}, kProfile)));
    EXPECT_TRUE(icnoma::verify_delivery(p, g, icnoma::build_plan({x1, empty, empty}, kProfile)));
}

TEST(VerifyDelivery, NearUserUsesFarLayer) {
    // Near user wants x1 and only the far code carries it.
    const auto p = testhelp::make_problem(2, {{{}, {1}}, {{1, 2}, {}}, {{2}, {1}}});
    const auto g = icnoma::assignment_from_tags({Group::Near, Group::Intermediate, Group::Far});
    const icnoma::IndexCode empty(2);
    const icnoma::IndexCode x1(icnoma::BitMatrix::from_strings({"10"}));
    EXPECT_TRUE(icnoma::verify_delivery(p, g, icnoma::build_plan({x1, empty, empty}, kProfile)));
}

TEST(VerifyDelivery, StagedCodesAlwaysDeliver) {
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 300; ++trial) {
        const auto s = icnoma::generate(icnoma::random_instance_spec(rng, 7));
        const auto p = s.problem();
        const auto g = s.groups();
        for (auto kind : {icnoma::SolverKind::Exact, icnoma::SolverKind::Greedy}) {
            const auto plan = icnoma::build_plan(icnoma::design_codes(p, g, {kind, 10}), kProfile);
            ASSERT_TRUE(icnoma::verify_delivery(p, g, plan)) << "trial " << trial;
        }
    }
}

TEST(PowerProfile, Validation) {
    EXPECT_NO_THROW(icnoma::PowerProfile{}.validate());
    icnoma::PowerProfile bad;
    bad.alpha = 0.3;
    bad.beta = 0.1;
    EXPECT_THROW(bad.validate(), icnoma::ValidationError);
    bad = {};
    bad.alpha1 = 0.5;
    EXPECT_THROW(bad.validate(), icnoma::ValidationError);
    bad = {};
    bad.gamma = 0.7;
    EXPECT_THROW(bad.validate(), icnoma::ValidationError);
    bad = {};
    bad.power = 0;
    EXPECT_THROW(bad.validate(), icnoma::ValidationError);
}
