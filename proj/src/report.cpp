#include "icnoma/report.hpp"

#include <iomanip>

#include "icnoma/error.hpp"

namespace icnoma {

using nlohmann::json;

namespace {

SolverConfig solver_for(const Scenario& scenario, const RunOptions& options) {
    return {options.solver.value_or(scenario.solver), options.exact_message_bound};
}

std::optional<GroupMinGains> ordered_min_gains(const Scenario& scenario, const GroupAssignment& groups) {
    try {
        return group_min_gains(scenario.channel(), groups);
    } catch (const ValidationError&) {
        return std::nullopt;
    }
}

json users_json(const std::vector<std::size_t>& users) {
    json out = json::array();
    for (auto u : users) out.push_back(u + 1);
    return out;
}

json code_json(const IndexCode& code) {
    json out = json::array();
    for (const auto& row : code.matrix().rows()) out.push_back(row.to_expression());
    return out;
}

json gains_json(const GroupMinGains& g) { return {{"near", g.near}, {"intermediate", g.intermediate}, {"far", g.far}}; }

json erp_json(const EqualRatePower& e) { return {{"power", e.power}, {"zeta", e.zeta}}; }

}  // namespace

RunReport run(const Scenario& scenario, const RunOptions& options) {
    const auto problem = scenario.problem();
    const auto solver = solver_for(scenario, options);
    const PowerProfile profile = options.profile.value_or(scenario.profile);
    profile.validate();

    auto groups = scenario.groups();
    auto codes = design_codes(problem, groups, solver);
    auto baseline = solve(problem, solver);
    auto plan = build_plan(codes, profile);
    const bool delivered = verify_delivery(problem, groups, plan);

    RunReport report{std::move(groups), std::move(codes), std::move(baseline), std::move(plan), delivered, profile,
                     std::nullopt, std::nullopt, std::nullopt};
    report.min_gains = ordered_min_gains(scenario, report.groups);
    if (report.min_gains && !report.plan.transmissions.empty()) {
        report.rates = rate_report(report.plan, RateParams::from(*report.min_gains, profile));
        report.power = power_report(report.plan, *report.min_gains, profile.power, profile, report.baseline.length());
    }
    return report;
}

json report_to_json(const RunReport& r) {
    json out;
    out["groups"] = {{"near", users_json(r.groups.near)},
                     {"intermediate", users_json(r.groups.intermediate)},
                     {"far", users_json(r.groups.far)}};
    out["codes"] = {{"far", code_json(r.codes.far)},
                    {"intermediate", code_json(r.codes.intermediate)},
                    {"near", code_json(r.codes.near)},
                    {"baseline", code_json(r.baseline)}};
    out["lengths"] = {{"l_f", r.plan.lengths.far},
                      {"l_m", r.plan.lengths.intermediate},
                      {"l_n", r.plan.lengths.near},
                      {"l_ic", r.baseline.length()},
                      {"l_icnoma", r.plan.transmissions.size()}};
    out["case"] = std::string(to_string(r.plan.case_id));
    out["counts"] = {{"noma3", r.plan.counts.noma3}, {"noma2", r.plan.counts.noma2}, {"ic", r.plan.counts.ic}};

    json plan = json::array();
    for (const auto& t : r.plan.transmissions) {
        json layers = json::array();
        for (const auto& l : t.layers) {
            layers.push_back({{"codeword", l.codeword.to_expression()},
                              {"coefficient", l.coefficient},
                              {"target", std::string(to_string(l.target))}});
        }
        plan.push_back({{"kind", std::string(to_string(t.kind))}, {"layers", std::move(layers)}});
    }
    out["plan"] = std::move(plan);
    out["delivered"] = r.delivered;
    out["profile"] = {{"power", r.profile.power},
                      {"alpha", r.profile.alpha},
                      {"beta", r.profile.beta},
                      {"gamma", r.profile.gamma},
                      {"alpha1", r.profile.alpha1}};
    if (r.min_gains) out["min_gains"] = gains_json(*r.min_gains);

    if (r.rates) {
        json per = json::array();
        for (const auto& t : r.rates->per_transmission) {
            per.push_back({{"kind", std::string(to_string(t.kind))}, {"layer_rates", t.layer_rates}, {"sum", t.sum}});
        }
        out["rates"] = {{"per_transmission", std::move(per)},
                        {"R_avg", r.rates->r_avg},
                        {"R_IC", r.rates->r_ic_baseline}};
    }
    if (r.power) {
        const auto& p = *r.power;
        out["power"] = {{"P_IC", p.p_ic},
                        {"noma3", erp_json(p.noma3)},
                        {"noma2",
                         {{"m,f", erp_json(p.mf)}, {"n,f", erp_json(p.nf)}, {"n,m", erp_json(p.nm)}}},
                        {"ic", {{"near", erp_json(p.near_ic)}, {"intermediate", erp_json(p.intermediate_ic)}}},
                        {"per_transmission", p.per_transmission},
                        {"total", p.total},
                        {"P_avg", p.p_avg},
                        {"P_saving", p.p_saving}};
    }
    return out;
}

void write_csv_header(std::ostream& out) { out << "case_id,l_f,l_m,l_n,l_ic,l_icnoma,R_avg,P_avg,P_saving\n"; }

namespace {

void write_number(std::ostream& out, const std::optional<double>& v) {
    if (v) out << std::setprecision(12) << *v;
}

}  // namespace

void write_csv_row(std::ostream& out, const RunReport& r) {
    out << to_string(r.plan.case_id) << ',' << r.plan.lengths.far << ',' << r.plan.lengths.intermediate << ','
        << r.plan.lengths.near << ',' << r.baseline.length() << ',' << r.plan.transmissions.size() << ',';
    write_number(out, r.rates ? std::optional(r.rates->r_avg) : std::nullopt);
    out << ',';
    write_number(out, r.power ? std::optional(r.power->p_avg) : std::nullopt);
    out << ',';
    write_number(out, r.power ? std::optional(r.power->p_saving) : std::nullopt);
    out << '\n';
}

std::vector<SweepRow> sweep(const Scenario& scenario, const std::vector<double>& powers, const RunOptions& options) {
    if (powers.empty()) throw ValidationError("sweep grid is empty");
    const auto base = run(scenario, options);
    if (base.plan.transmissions.empty()) throw ValidationError("sweep needs a nonempty plan");
    if (!base.min_gains) throw ValidationError("sweep needs group minimum gains with near > intermediate > far");

    std::vector<SweepRow> rows;
    for (double p : powers) {
        PowerProfile profile = base.profile;
        profile.power = p;
        profile.validate();
        const auto rates = rate_report(base.plan, RateParams::from(*base.min_gains, profile));
        const auto power = power_report(base.plan, *base.min_gains, p, profile, base.baseline.length());
        rows.push_back({p, base.plan.case_id, base.plan.lengths, base.baseline.length(),
                        base.plan.transmissions.size(), rates.r_avg, rates.r_ic_baseline, power.p_avg,
                        power.p_saving});
    }
    return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "P,case_id,l_f,l_m,l_n,l_ic,l_icnoma,R_avg,R_IC,P_avg,P_saving\n";
    out << std::setprecision(12);
    for (const auto& r : rows) {
        out << r.power << ',' << to_string(r.case_id) << ',' << r.lengths.far << ',' << r.lengths.intermediate << ','
            << r.lengths.near << ',' << r.l_ic << ',' << r.l_icnoma << ',' << r.r_avg << ',' << r.r_ic << ','
            << r.p_avg << ',' << r.p_saving << '\n';
    }
}

}  // namespace icnoma
