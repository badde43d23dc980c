#pragma once

#include <cstddef>
#include <string_view>

#include "icnoma/grouping.hpp"
#include "icnoma/index_coding.hpp"

namespace icnoma {

enum class SolverKind { Exact, Greedy };

std::string_view to_string(SolverKind kind);
SolverKind parse_solver(std::string_view text);

struct SolverConfig {
    SolverKind kind = SolverKind::Exact;
    std::size_t exact_message_bound = 10;
};

/// Solves a (sub)problem with the configured solver. `preferences` only
/// steer the exact solver's choice among minimum-length codes.
IndexCode solve(const IndexCodingProblem& problem, const SolverConfig& solver,
                const std::vector<IndexCodingProblem>& preferences = {});

/// The three staged codes: far, then intermediate with the far code as coded
/// side information, then near with both.
struct ThreeGroupCode {
    IndexCode far;
    IndexCode intermediate;
    IndexCode near;

    [[nodiscard]] std::size_t max_length() const noexcept;
    [[nodiscard]] const IndexCode& of(Group g) const;
};

IndexCode design_far_code(const IndexCodingProblem& problem, const GroupAssignment& groups,
                          const SolverConfig& solver);
IndexCode design_mid_code(const IndexCodingProblem& problem, const GroupAssignment& groups, const IndexCode& far,
                          const SolverConfig& solver);
IndexCode design_near_code(const IndexCodingProblem& problem, const GroupAssignment& groups, const IndexCode& far,
                           const IndexCode& mid, const SolverConfig& solver);

/// Subproblem each stage solves (already reduced by the earlier stages' rows).
IndexCodingProblem far_subproblem(const IndexCodingProblem& problem, const GroupAssignment& groups);
IndexCodingProblem mid_subproblem(const IndexCodingProblem& problem, const GroupAssignment& groups,
                                  const IndexCode& far);
IndexCodingProblem near_subproblem(const IndexCodingProblem& problem, const GroupAssignment& groups,
                                   const IndexCode& far, const IndexCode& mid);

ThreeGroupCode design_codes(const IndexCodingProblem& problem, const GroupAssignment& groups,
                            const SolverConfig& solver);

struct PipelineResult {
    GroupAssignment groups;
    ThreeGroupCode codes;
};

/// assign_groups followed by the three code-design stages.
PipelineResult run_pipeline(const IndexCodingProblem& problem, const ChannelState& channel,
                            const SolverConfig& solver);

/// Two-group baseline: one far code for far and intermediate users together,
/// then a near code with that far code as coded side information.
struct TwoGroupCode {
    IndexCode far;
    IndexCode near;

    [[nodiscard]] std::size_t max_length() const noexcept;
};

TwoGroupCode design_two_group_baseline(const IndexCodingProblem& problem, const GroupAssignment& groups,
                                       const SolverConfig& solver);

}  // namespace icnoma
