#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "icnoma/analysis.hpp"
#include "icnoma/scenario.hpp"

namespace icnoma {

/// Random instance shape used by the property suites: 3..max_n messages,
/// 1..3 users per group, densities drawn per instance.
RandomInstanceSpec random_instance_spec(std::mt19937_64& rng, std::size_t max_n);

/// Random valid parameters: g_n > g_m > g_f with ratios of at least 1.05,
/// alpha < beta < gamma, alpha1 in (0.01, 0.49), P in [0.5, 100].
RateParams random_rate_params(std::mt19937_64& rng);

struct PropertyOutcome {
    std::string name;
    std::size_t trials = 0;       ///< instances drawn
    std::size_t checked = 0;      ///< instances the property applied to
    std::size_t violations = 0;
    std::string first_failure;    ///< empty if none

    [[nodiscard]] bool passed() const noexcept { return violations == 0; }
};

struct PropertyCheckOptions {
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
    std::size_t max_n = 8;
    SolverKind solver = SolverKind::Exact;
};

/// Staged lengths against plain IC and the two-group design, delivery over random instances, case
/// table totality, zeta positivity and per-case saving positivity.
std::vector<PropertyOutcome> run_property_checks(const PropertyCheckOptions& options);

}  // namespace icnoma
