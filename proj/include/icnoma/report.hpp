#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "icnoma/analysis.hpp"
#include "icnoma/pipeline.hpp"
#include "icnoma/scenario.hpp"
#include "icnoma/scheduler.hpp"

namespace icnoma {

struct RunOptions {
    std::optional<SolverKind> solver;     ///< replaces the scenario's solver when set
    std::size_t exact_message_bound = 10;
    std::optional<PowerProfile> profile;  ///< replaces the scenario's profile when set
};

/// Everything `run` computes for one scenario.
struct RunReport {
    GroupAssignment groups;
    ThreeGroupCode codes;
    IndexCode baseline;  ///< plain index code for all users
    TransmissionPlan plan;
    bool delivered = false;
    PowerProfile profile;
    std::optional<GroupMinGains> min_gains;  ///< unset when the group minima are not strictly ordered
    std::optional<RateReport> rates;         ///< unset for an empty plan or unordered minima
    std::optional<PowerReport> power;
};

RunReport run(const Scenario& scenario, const RunOptions& options = {});

nlohmann::json report_to_json(const RunReport& report);

/// case_id,l_f,l_m,l_n,l_ic,l_icnoma,R_avg,P_avg,P_saving
void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const RunReport& report);

struct SweepRow {
    double power;
    CaseId case_id;
    CodeLengths lengths;
    std::size_t l_ic;
    std::size_t l_icnoma;
    double r_avg;
    double r_ic;
    double p_avg;
    double p_saving;
};

/// Re-evaluates rates and powers of one designed plan at every grid power
/// (P and P_IC both set to the grid value). Codes do not depend on power.
std::vector<SweepRow> sweep(const Scenario& scenario, const std::vector<double>& powers,
                            const RunOptions& options = {});

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace icnoma
