#include "icnoma/properties.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "icnoma/pipeline.hpp"

namespace icnoma {

RandomInstanceSpec random_instance_spec(std::mt19937_64& rng, std::size_t max_n) {
    std::uniform_int_distribution<std::size_t> n_dist(3, std::max<std::size_t>(3, max_n));
    std::uniform_int_distribution<std::size_t> size_dist(1, 3);
    std::uniform_real_distribution<double> cache(0.1, 0.6);
    std::uniform_real_distribution<double> demand(0.15, 0.5);

    RandomInstanceSpec spec;
    spec.n = n_dist(rng);
    spec.near_users = size_dist(rng);
    spec.intermediate_users = size_dist(rng);
    spec.far_users = size_dist(rng);
    spec.cache_density = cache(rng);
    spec.demand_density = demand(rng);
    spec.seed = rng();
    return spec;
}

RateParams random_rate_params(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    RateParams rp{};
    rp.g_f = 0.1 + 4.9 * unit(rng);
    rp.g_m = rp.g_f * (1.05 + 9.0 * unit(rng));
    rp.g_n = rp.g_m * (1.05 + 9.0 * unit(rng));
    rp.power = 0.5 + 99.5 * unit(rng);
    for (;;) {
        std::array<double, 3> w{0.02 + unit(rng), 0.02 + unit(rng), 0.02 + unit(rng)};
        std::sort(w.begin(), w.end());
        const double total = w[0] + w[1] + w[2];
        rp.alpha = w[0] / total;
        rp.beta = w[1] / total;
        rp.gamma = 1.0 - rp.alpha - rp.beta;
        if (rp.alpha < rp.beta && rp.beta < rp.gamma) break;
    }
    rp.alpha1 = 0.01 + 0.48 * unit(rng);
    return rp;
}

namespace {

std::string lengths_text(const ThreeGroupCode& c) {
    std::ostringstream s;
    s << "(l_f, l_m, l_n) = (" << c.far.length() << ", " << c.intermediate.length() << ", " << c.near.length()
      << ")";
    return s.str();
}

PropertyOutcome named(std::string name) {
    PropertyOutcome out;
    out.name = std::move(name);
    return out;
}

void record(PropertyOutcome& out, bool ok, const std::string& detail) {
    ++out.checked;
    if (ok) return;
    if (out.violations++ == 0) out.first_failure = detail;
}

}  // namespace

std::vector<PropertyOutcome> run_property_checks(const PropertyCheckOptions& options) {
    std::mt19937_64 rng(options.seed);
    const SolverConfig solver{options.solver, std::max<std::size_t>(10, options.max_n)};

    auto t1 = named("staged-vs-plain: max(l_f, l_m, l_n) <= l_IC");
    auto t2 = named("staged-vs-two-group: l_m <= max(l_f, l_n) implies l_IC-NOMA <= l*");
    auto delivery = named("delivery: every user decodes its wants");
    for (std::size_t k = 0; k < options.trials; ++k) {
        const auto spec = random_instance_spec(rng, options.max_n);
        const auto scenario = generate(spec);
        const auto problem = scenario.problem();
        const auto groups = scenario.groups();
        const auto codes = design_codes(problem, groups, solver);
        const auto l_ic = solve(problem, solver).length();
        const std::string where = "seed " + std::to_string(spec.seed) + ", " + lengths_text(codes);
        t1.trials = t2.trials = delivery.trials = k + 1;

        record(t1, codes.max_length() <= l_ic, where + ", l_IC = " + std::to_string(l_ic));
        if (codes.intermediate.length() <= std::max(codes.far.length(), codes.near.length())) {
            const auto two = design_two_group_baseline(problem, groups, solver);
            record(t2, codes.max_length() <= two.max_length(),
                   where + ", l* = " + std::to_string(two.max_length()));
        }
        const auto plan = build_plan(codes, scenario.profile);
        record(delivery, verify_delivery(problem, groups, plan), where);
    }

    auto cases = named("case table: every positive triple has one case, counts sum to the max");
    for (std::size_t f = 1; f <= 6; ++f) {
        for (std::size_t m = 1; m <= 6; ++m) {
            for (std::size_t n = 1; n <= 6; ++n) {
                const CodeLengths l{f, m, n};
                const auto c = classify_case(l);
                ++cases.trials;
                record(cases, c.id != CaseId::Degenerate && c.counts.total() == l.max(),
                       "(" + std::to_string(f) + ", " + std::to_string(m) + ", " + std::to_string(n) + ")");
            }
        }
    }

    auto zetas = named("zeta: every equal-rate saving is positive");
    auto savings = named("savings: P_saving > 0 in every case");
    std::uniform_int_distribution<std::size_t> len(1, 8);
    for (std::size_t k = 0; k < options.trials; ++k) {
        const auto rp = random_rate_params(rng);
        const GroupMinGains g{rp.g_n, rp.g_m, rp.g_f};
        const PowerProfile profile{rp.power, rp.alpha, rp.beta, rp.gamma, rp.alpha1};
        const auto z = compute_zetas(rp.power, g, profile);
        ++zetas.trials;
        record(zetas, z.noma3 > 0 && z.mf > 0 && z.nf > 0 && z.nm > 0 && z.near > 0 && z.intermediate > 0,
               "draw " + std::to_string(k));

        CodeLengths l{len(rng), len(rng), len(rng)};
        const auto id = classify_case(l).id;
        const std::size_t l_ic = l.max() + len(rng) - 1;
        ++savings.trials;
        record(savings, power_savings(id, l, l_ic, rp.power, z) > 0.0,
               "case " + std::string(to_string(id)) + ", draw " + std::to_string(k));
    }

    return {t1, t2, delivery, cases, zetas, savings};
}

}  // namespace icnoma
