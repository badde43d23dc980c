#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "icnoma/grouping.hpp"
#include "icnoma/index_coding.hpp"
#include "icnoma/pipeline.hpp"
#include "icnoma/scheduler.hpp"

namespace icnoma {

/// One vehicle as reported to the base station. Indices are 0-based here and
/// 1-based in the JSON file.
struct ScenarioUser {
    MessageSet demands;
    MessageSet cache;
    std::vector<BitVector> coded_cache;
    double gain = 0.0;
    std::optional<Group> group;  ///< overrides assign_groups when set for every user

    friend bool operator==(const ScenarioUser&, const ScenarioUser&) = default;
};

struct Scenario {
    std::size_t n = 0;
    std::vector<ScenarioUser> users;
    PowerProfile profile;
    SolverKind solver = SolverKind::Exact;

    /// W_i = D_i \ K_i for every user.
    [[nodiscard]] IndexCodingProblem problem() const;
    [[nodiscard]] ChannelState channel() const;
    /// Explicit groups when every user has one, assign_groups otherwise.
    /// A partial set of explicit groups is a ValidationError.
    [[nodiscard]] GroupAssignment groups() const;
};

bool operator==(const Scenario& a, const Scenario& b);

/// Validates and converts; errors name the offending field, e.g. "users[2].gain".
Scenario scenario_from_json(const nlohmann::json& doc);
nlohmann::json scenario_to_json(const Scenario& scenario);

Scenario ingest(const std::filesystem::path& path);
void emit(const Scenario& scenario, const std::filesystem::path& path);

/// Parameters for random scenarios. Groups are assigned per gain cluster.
struct RandomInstanceSpec {
    std::size_t n = 6;
    std::size_t near_users = 2;
    std::size_t intermediate_users = 2;
    std::size_t far_users = 2;
    double cache_density = 0.4;
    double demand_density = 0.3;
    double near_center = 10.0;
    double intermediate_center = 4.0;
    double far_center = 1.0;
    double spread = 0.2;  ///< gains uniform in center +- spread
    bool require_wants = true;
    std::uint64_t seed = 1;

    void validate() const;
};

Scenario generate(const RandomInstanceSpec& spec);

}  // namespace icnoma
