#include "icnoma/pipeline.hpp"

#include <algorithm>

#include "icnoma/error.hpp"

namespace icnoma {

std::string_view to_string(SolverKind kind) { return kind == SolverKind::Exact ? "exact" : "greedy"; }

SolverKind parse_solver(std::string_view text) {
    if (text == "exact") return SolverKind::Exact;
    if (text == "greedy") return SolverKind::Greedy;
    throw ValidationError("unknown solver \"" + std::string(text) + "\" (expected exact or greedy)");
}

IndexCode solve(const IndexCodingProblem& problem, const SolverConfig& solver,
                const std::vector<IndexCodingProblem>& preferences) {
    if (solver.kind == SolverKind::Greedy) return solve_greedy(problem);
    ExactSolverOptions options;
    options.message_bound = solver.exact_message_bound;
    options.preferences = preferences;
    // Sending every wanted message is always valid, so a code of length <= n exists.
    return *solve_exact(problem, options);
}

std::size_t ThreeGroupCode::max_length() const noexcept {
    return std::max({far.length(), intermediate.length(), near.length()});
}

const IndexCode& ThreeGroupCode::of(Group g) const {
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

IndexCodingProblem far_subproblem(const IndexCodingProblem& problem, const GroupAssignment& groups) {
    return problem.restricted_to(groups.far);
}

IndexCodingProblem mid_subproblem(const IndexCodingProblem& problem, const GroupAssignment& groups,
                                  const IndexCode& far) {
    return reduce_by_coded_rows(problem.restricted_to(groups.intermediate), far.matrix());
}

IndexCodingProblem near_subproblem(const IndexCodingProblem& problem, const GroupAssignment& groups,
                                   const IndexCode& far, const IndexCode& mid) {
    return reduce_by_coded_rows(problem.restricted_to(groups.near), stack(far.matrix(), mid.matrix()));
}

IndexCode design_far_code(const IndexCodingProblem& problem, const GroupAssignment& groups,
                          const SolverConfig& solver) {
    if (groups.far.empty()) throw ValidationError("far group is empty");
    // Among equally short far codes, prefer the one that serves later groups most.
    return solve(far_subproblem(problem, groups), solver,
                 {problem.restricted_to(groups.intermediate), problem.restricted_to(groups.near)});
}

IndexCode design_mid_code(const IndexCodingProblem& problem, const GroupAssignment& groups, const IndexCode& far,
                          const SolverConfig& solver) {
    return solve(mid_subproblem(problem, groups, far), solver,
                 {reduce_by_coded_rows(problem.restricted_to(groups.near), far.matrix())});
}

IndexCode design_near_code(const IndexCodingProblem& problem, const GroupAssignment& groups, const IndexCode& far,
                           const IndexCode& mid, const SolverConfig& solver) {
    return solve(near_subproblem(problem, groups, far, mid), solver);
}

ThreeGroupCode design_codes(const IndexCodingProblem& problem, const GroupAssignment& groups,
                            const SolverConfig& solver) {
    auto far = design_far_code(problem, groups, solver);
    auto mid = design_mid_code(problem, groups, far, solver);
    auto near = design_near_code(problem, groups, far, mid, solver);
    return ThreeGroupCode{std::move(far), std::move(mid), std::move(near)};
}

PipelineResult run_pipeline(const IndexCodingProblem& problem, const ChannelState& channel,
                            const SolverConfig& solver) {
    if (channel.gains.size() != problem.user_count()) {
        throw ValidationError("expected one channel gain per user");
    }
    auto groups = assign_groups(channel);
    auto codes = design_codes(problem, groups, solver);
    return PipelineResult{std::move(groups), std::move(codes)};
}

std::size_t TwoGroupCode::max_length() const noexcept { return std::max(far.length(), near.length()); }

TwoGroupCode design_two_group_baseline(const IndexCodingProblem& problem, const GroupAssignment& groups,
                                       const SolverConfig& solver) {
    std::vector<std::size_t> far_users = groups.far;
    far_users.insert(far_users.end(), groups.intermediate.begin(), groups.intermediate.end());
    std::sort(far_users.begin(), far_users.end());

    auto far = solve(problem.restricted_to(far_users), solver, {problem.restricted_to(groups.near)});
    auto near = solve(reduce_by_coded_rows(problem.restricted_to(groups.near), far.matrix()), solver);
    return TwoGroupCode{std::move(far), std::move(near)};
}

}  // namespace icnoma
