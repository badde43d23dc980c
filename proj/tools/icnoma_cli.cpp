// icnoma: design and evaluate three-group index-coded NOMA transmissions.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "icnoma/error.hpp"
#include "icnoma/pipeline.hpp"
#include "icnoma/properties.hpp"
#include "icnoma/report.hpp"
#include "icnoma/scenario.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitCapability = 3;
constexpr int kExitProperty = 4;

struct CommonFlags {
    std::string profile;
    double power = 0.0;
    std::string solver;
    std::string out;
    std::size_t bound = 10;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool with_profile) {
    if (with_profile) {
        cmd->add_option("--profile", f.profile, "alpha,beta,gamma,alpha1");
        cmd->add_option("--power", f.power, "power per transmission P (also P_IC)");
    }
    cmd->add_option("--solver", f.solver, "exact or greedy")->check(CLI::IsMember({"exact", "greedy"}));
    cmd->add_option("--exact-bound", f.bound, "largest message count the exact solver accepts");
    cmd->add_option("--out", f.out, "write output here instead of stdout");
}

icnoma::RunOptions run_options(const icnoma::Scenario& s, const CommonFlags& f) {
    icnoma::RunOptions opt;
    if (!f.solver.empty()) opt.solver = icnoma::parse_solver(f.solver);
    opt.exact_message_bound = f.bound;
    icnoma::PowerProfile p = s.profile;
    bool changed = false;
    if (!f.profile.empty()) {
        std::vector<double> v;
        std::stringstream ss(f.profile);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                v.push_back(std::stod(item));
            } catch (const std::exception&) {
                throw icnoma::ValidationError("--profile: \"" + item + "\" is not a number");
            }
        }
        if (v.size() != 4) throw icnoma::ValidationError("--profile expects alpha,beta,gamma,alpha1");
        p.alpha = v[0];
        p.beta = v[1];
        p.gamma = v[2];
        p.alpha1 = v[3];
        changed = true;
    }
    if (f.power != 0.0) {
        p.power = f.power;
        changed = true;
    }
    if (changed) {
        p.validate();
        opt.profile = p;
    }
    return opt;
}

icnoma::SolverConfig solver_config(const icnoma::Scenario& s, const CommonFlags& f) {
    return {f.solver.empty() ? s.solver : icnoma::parse_solver(f.solver), f.bound};
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw icnoma::ValidationError(path + ": cannot write");
    out << text;
}

std::vector<double> power_grid(double from, double to, std::size_t steps) {
    if (steps == 0) throw icnoma::ValidationError("--steps must be positive");
    if (!(from > 0.0) || !(to >= from)) throw icnoma::ValidationError("power grid needs 0 < from <= to");
    std::vector<double> grid;
    for (std::size_t k = 0; k < steps; ++k) {
        grid.push_back(steps == 1 ? from : from + (to - from) * static_cast<double>(k) / static_cast<double>(steps - 1));
    }
    return grid;
}

nlohmann::json code_json(const icnoma::IndexCode& code) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : code.matrix().rows()) rows.push_back(r.to_expression());
    return {{"length", code.length()}, {"rows", rows}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Three-group index-coded NOMA: code design, scheduling, rate and power analysis"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string scenario_path;

    auto* solve_cmd = app.add_subcommand("solve", "plain index code for all users of a scenario");
    solve_cmd->add_option("scenario", scenario_path, "scenario JSON")->required();
    add_common(solve_cmd, flags, false);

    bool csv = false;
    auto* run_cmd = app.add_subcommand("run", "grouping, staged codes, plan, rates and powers");
    run_cmd->add_option("scenario", scenario_path, "scenario JSON")->required();
    run_cmd->add_flag("--csv", csv, "emit one CSV row instead of the JSON report");
    add_common(run_cmd, flags, true);

    double from = 1.0;
    double to = 100.0;
    std::size_t steps = 100;
    auto* sweep_cmd = app.add_subcommand("sweep", "R_avg, P_avg and P_saving over a power grid (CSV)");
    sweep_cmd->add_option("scenario", scenario_path, "scenario JSON")->required();
    sweep_cmd->add_option("--from", from, "first power");
    sweep_cmd->add_option("--to", to, "last power");
    sweep_cmd->add_option("--steps", steps, "grid points");
    add_common(sweep_cmd, flags, true);

    icnoma::RandomInstanceSpec spec;
    auto* gen_cmd = app.add_subcommand("generate", "random scenario");
    gen_cmd->add_option("--seed", spec.seed);
    gen_cmd->add_option("--messages", spec.n, "message count n");
    gen_cmd->add_option("--near", spec.near_users);
    gen_cmd->add_option("--intermediate", spec.intermediate_users);
    gen_cmd->add_option("--far", spec.far_users);
    gen_cmd->add_option("--cache-density", spec.cache_density);
    gen_cmd->add_option("--demand-density", spec.demand_density);
    gen_cmd->add_option("--spread", spec.spread);
    gen_cmd->add_option("--out", flags.out);

    icnoma::PropertyCheckOptions prop;
    std::string prop_solver = "exact";
    auto* prop_cmd = app.add_subcommand("property-check", "random-instance property suites");
    prop_cmd->add_option("--trials", prop.trials);
    prop_cmd->add_option("--seed", prop.seed);
    prop_cmd->add_option("--max-messages", prop.max_n);
    prop_cmd->add_option("--solver", prop_solver)->check(CLI::IsMember({"exact", "greedy"}));

    auto* base_cmd = app.add_subcommand("baseline", "plain IC, 2-group and 3-group transmission counts");
    base_cmd->add_option("scenario", scenario_path, "scenario JSON")->required();
    add_common(base_cmd, flags, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    try {
        if (*solve_cmd) {
            const auto s = icnoma::ingest(scenario_path);
            const auto code = icnoma::solve(s.problem(), solver_config(s, flags));
            write_output(flags.out, code_json(code).dump(2) + "\n");
        } else if (*run_cmd) {
            const auto s = icnoma::ingest(scenario_path);
            const auto report = icnoma::run(s, run_options(s, flags));
            std::ostringstream out;
            if (csv) {
                icnoma::write_csv_header(out);
                icnoma::write_csv_row(out, report);
            } else {
                out << icnoma::report_to_json(report).dump(2) << '\n';
            }
            write_output(flags.out, out.str());
            if (!report.delivered) {
                std::cerr << "delivery check failed: some user cannot decode its wants\n";
                return kExitProperty;
            }
        } else if (*sweep_cmd) {
            const auto s = icnoma::ingest(scenario_path);
            const auto rows = icnoma::sweep(s, power_grid(from, to, steps), run_options(s, flags));
            std::ostringstream out;
            icnoma::write_sweep_csv(out, rows);
            write_output(flags.out, out.str());
        } else if (*gen_cmd) {
            const auto s = icnoma::generate(spec);
            write_output(flags.out, icnoma::scenario_to_json(s).dump(2) + "\n");
        } else if (*prop_cmd) {
            prop.solver = icnoma::parse_solver(prop_solver);
            bool ok = true;
            for (const auto& r : icnoma::run_property_checks(prop)) {
                std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << "  (" << r.checked << " checked of "
                          << r.trials << ", " << r.violations << " violations)";
                if (!r.passed()) std::cout << "  first: " << r.first_failure;
                std::cout << '\n';
                ok = ok && r.passed();
            }
            return ok ? 0 : kExitProperty;
        } else if (*base_cmd) {
            const auto s = icnoma::ingest(scenario_path);
            const auto cfg = solver_config(s, flags);
            const auto problem = s.problem();
            const auto groups = s.groups();
            const auto plain = icnoma::solve(problem, cfg);
            const auto two = icnoma::design_two_group_baseline(problem, groups, cfg);
            const auto three = icnoma::design_codes(problem, groups, cfg);
            nlohmann::json out{{"plain_ic", code_json(plain)},
                               {"two_group",
                                {{"far", code_json(two.far)},
                                 {"near", code_json(two.near)},
                                 {"transmissions", two.max_length()}}},
                               {"three_group",
                                {{"far", code_json(three.far)},
                                 {"intermediate", code_json(three.intermediate)},
                                 {"near", code_json(three.near)},
                                 {"transmissions", three.max_length()}}}};
            write_output(flags.out, out.dump(2) + "\n");
        }
    } catch (const icnoma::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const icnoma::CapabilityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCapability;
    }
    return 0;
}
