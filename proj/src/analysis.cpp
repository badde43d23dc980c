#include "icnoma/analysis.hpp"

#include <cmath>
#include <string>

#include "icnoma/error.hpp"

namespace icnoma {

RateParams RateParams::from(const GroupMinGains& gains, const PowerProfile& profile) {
    return {gains.near,    gains.intermediate, gains.far,     profile.power,
            profile.alpha, profile.beta,       profile.gamma, profile.alpha1};
}

void RateParams::validate() const {
    if (!(g_n > g_m && g_m > g_f && g_f > 0.0)) throw ValidationError("gains must satisfy g_n > g_m > g_f > 0");
    PowerProfile{power, alpha, beta, gamma, alpha1}.validate();
}

std::string_view to_string(NomaPair pair) {
    switch (pair) {
        case NomaPair::MF:
            return "m,f";
        case NomaPair::NF:
            return "n,f";
        case NomaPair::NM:
            return "n,m";
    }
    return "?";
}

NomaPair parse_pair(std::string_view text) {
    if (text == "m,f" || text == "mf") return NomaPair::MF;
    if (text == "n,f" || text == "nf") return NomaPair::NF;
    if (text == "n,m" || text == "nm") return NomaPair::NM;
    throw ValidationError("unknown NOMA pair \"" + std::string(text) + "\" (expected m,f n,f or n,m)");
}

double rate_ic_baseline(double g_f, double power) {
    if (!(g_f > 0.0) || !(power > 0.0)) throw ValidationError("gain and power must be positive");
    return std::log2(1.0 + g_f * power);
}

namespace {

double sinr_rate(double signal, double interference) { return std::log2(1.0 + signal / (1.0 + interference)); }

Noma3Rates noma3_at(double p, double g_n, double g_m, double g_f, double alpha, double beta, double gamma) {
    Noma3Rates r{};
    r.far = sinr_rate(gamma * p * g_f, (alpha + beta) * p * g_f);
    r.intermediate = sinr_rate(beta * p * g_m, alpha * p * g_m);
    r.near = std::log2(1.0 + alpha * p * g_n);
    r.sum = r.far + r.intermediate + r.near;
    return r;
}

Noma2Rates noma2_at(double p, double g_high, double g_low, double alpha1) {
    Noma2Rates r{};
    r.high_gain = std::log2(1.0 + alpha1 * p * g_high);
    r.low_gain = sinr_rate((1.0 - alpha1) * p * g_low, alpha1 * p * g_low);
    r.sum = r.high_gain + r.low_gain;
    return r;
}

struct PairGains {
    double high;
    double low;
};

PairGains pair_gains(NomaPair pair, double g_n, double g_m, double g_f) {
    switch (pair) {
        case NomaPair::MF:
            return {g_m, g_f};
        case NomaPair::NF:
            return {g_n, g_f};
        case NomaPair::NM:
            return {g_n, g_m};
    }
    throw ValidationError("invalid NOMA pair");
}

double gain_of(Group g, double g_n, double g_m, double g_f) {
    switch (g) {
        case Group::Near:
            return g_n;
        case Group::Intermediate:
            return g_m;
        case Group::Far:
            return g_f;
    }
    throw ValidationError("invalid group");
}

NomaPair pair_of(const Transmission& t) {
    const Group weak = t.layers.at(0).target;
    const Group strong = t.layers.at(1).target;
    if (weak == Group::Intermediate && strong == Group::Far) return NomaPair::MF;
    if (weak == Group::Near && strong == Group::Far) return NomaPair::NF;
    if (weak == Group::Near && strong == Group::Intermediate) return NomaPair::NM;
    throw ValidationError("2-layer transmission with targets " + std::string(to_string(weak)) + "/" +
                          std::string(to_string(strong)) + " is not a known pair");
}

void check_gains(const GroupMinGains& g) {
    if (!(g.near > g.intermediate && g.intermediate > g.far && g.far > 0.0)) {
        throw ValidationError("gains must satisfy g_n > g_m > g_f > 0");
    }
}

// Smallest power in (0, hi] whose rate reaches `target`; rate must be increasing.
template <class RateFn>
double bisect_power(RateFn rate, double target, double hi) {
    if (!(hi > 0.0)) throw ValidationError("P_IC must be positive");
    if (rate(hi) < target) throw ValidationError("equal-rate power is not bracketed by (0, P_IC]");
    double lo = 0.0;
    for (int iter = 0; iter < 2000; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (rate(mid) < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return hi;
}

}  // namespace

Noma3Rates rates_noma3(const RateParams& rp) {
    rp.validate();
    return noma3_at(rp.power, rp.g_n, rp.g_m, rp.g_f, rp.alpha, rp.beta, rp.gamma);
}

Noma2Rates rates_noma2(NomaPair pair, const RateParams& rp) {
    rp.validate();
    const auto g = pair_gains(pair, rp.g_n, rp.g_m, rp.g_f);
    return noma2_at(rp.power, g.high, g.low, rp.alpha1);
}

double rate_ic_in_scheme(Group group, const RateParams& rp) {
    rp.validate();
    return std::log2(1.0 + gain_of(group, rp.g_n, rp.g_m, rp.g_f) * rp.power);
}

RateReport rate_report(const TransmissionPlan& plan, const RateParams& rp) {
    rp.validate();
    if (plan.transmissions.empty()) throw ValidationError("rate report needs a nonempty plan");

    RateReport report{};
    report.r_ic_baseline = rate_ic_baseline(rp.g_f, rp.power);
    double total = 0.0;
    for (const auto& t : plan.transmissions) {
        TransmissionRate tr{t.kind, {}, 0.0};
        switch (t.kind) {
            case TransmissionKind::Noma3: {
                const auto r = rates_noma3(rp);
                // layers are near, intermediate, far
                tr.layer_rates = {r.near, r.intermediate, r.far};
                break;
            }
            case TransmissionKind::Noma2: {
                const auto r = rates_noma2(pair_of(t), rp);
                tr.layer_rates = {r.high_gain, r.low_gain};
                break;
            }
            case TransmissionKind::Ic:
                tr.layer_rates = {rate_ic_in_scheme(t.layers.at(0).target, rp)};
                break;
        }
        for (double r : tr.layer_rates) tr.sum += r;
        total += tr.sum;
        report.per_transmission.push_back(std::move(tr));
    }
    report.r_avg = total / static_cast<double>(plan.transmissions.size());
    return report;
}

EqualRatePower equal_rate_power_noma3(double p_ic, const GroupMinGains& gains, double alpha, double beta,
                                      double gamma) {
    check_gains(gains);
    const double target = rate_ic_baseline(gains.far, p_ic);
    const double p = bisect_power(
        [&](double x) { return noma3_at(x, gains.near, gains.intermediate, gains.far, alpha, beta, gamma).sum; },
        target, p_ic);
    return {p, p_ic - p};
}

EqualRatePower equal_rate_power_noma2(NomaPair pair, double p_ic, const GroupMinGains& gains, double alpha1) {
    check_gains(gains);
    if (!(alpha1 > 0.0 && alpha1 < 0.5)) throw ValidationError("alpha1 must lie in (0, 0.5)");
    const auto g = pair_gains(pair, gains.near, gains.intermediate, gains.far);
    const double target = rate_ic_baseline(gains.far, p_ic);
    const double p = bisect_power([&](double x) { return noma2_at(x, g.high, g.low, alpha1).sum; }, target, p_ic);
    return {p, p_ic - p};
}

EqualRatePower equal_rate_power_ic(Group group, double p_ic, const GroupMinGains& gains) {
    check_gains(gains);
    if (!(p_ic > 0.0)) throw ValidationError("P_IC must be positive");
    const double p = p_ic * gains.far / gain_of(group, gains.near, gains.intermediate, gains.far);
    return {p, p_ic - p};
}

ZetaSet compute_zetas(double p_ic, const GroupMinGains& gains, const PowerProfile& profile) {
    profile.validate();
    ZetaSet z;
    z.noma3 = equal_rate_power_noma3(p_ic, gains, profile.alpha, profile.beta, profile.gamma).zeta;
    z.mf = equal_rate_power_noma2(NomaPair::MF, p_ic, gains, profile.alpha1).zeta;
    z.nf = equal_rate_power_noma2(NomaPair::NF, p_ic, gains, profile.alpha1).zeta;
    z.nm = equal_rate_power_noma2(NomaPair::NM, p_ic, gains, profile.alpha1).zeta;
    z.near = equal_rate_power_ic(Group::Near, p_ic, gains).zeta;
    z.intermediate = equal_rate_power_ic(Group::Intermediate, p_ic, gains).zeta;
    return z;
}

double power_savings(CaseId id, const CodeLengths& lengths, std::size_t l_ic, double p_ic, const ZetaSet& z) {
    if (id == CaseId::Degenerate) throw ValidationError("no savings formula for a degenerate case");
    if (l_ic < lengths.max()) throw ValidationError("l_IC is shorter than the longest group code");
    const double f = static_cast<double>(lengths.far);
    const double m = static_cast<double>(lengths.intermediate);
    const double n = static_cast<double>(lengths.near);
    // Unused baseline slots save their whole power.
    const double base = static_cast<double>(l_ic - lengths.max()) * p_ic;

    switch (id) {
        case CaseId::I:
            return base + z.noma3 * f;
        case CaseId::II:
            return base + z.noma3 * n + (m - n) * z.mf;
        case CaseId::III:
            return base + z.noma3 * m + (f - m) * z.nf + (n - f) * z.near;
        case CaseId::IV:
            return base + z.noma3 * f + (n - f) * z.nm + (m - n) * z.intermediate;
        case CaseId::V:
            return base + z.noma3 * n;
        case CaseId::VI:
        case CaseId::VII:
            return base + z.noma3 * m + (n - m) * z.nf;
        case CaseId::VIII:
            return base + z.noma3 * n + (m - n) * z.mf;
        case CaseId::IX:
            return base + z.noma3 * m + (n - f) * z.near;
        case CaseId::X:
            return base + z.noma3 * f + (m - f) * z.nm;
        case CaseId::XI:
            return base + z.noma3 * n + (m - f) * z.intermediate;
        case CaseId::XII:
            return base + z.noma3 * f + (m - f) * z.nm + (n - m) * z.near;
        case CaseId::XIII:
            return base + z.noma3 * n + (f - n) * z.mf + (m - f) * z.intermediate;
        case CaseId::Degenerate:
            break;
    }
    throw ValidationError("unknown case");
}

PowerReport power_report(const TransmissionPlan& plan, const GroupMinGains& gains, double p_ic,
                         const PowerProfile& profile, std::size_t l_ic) {
    profile.validate();
    if (plan.transmissions.empty()) throw ValidationError("power report needs a nonempty plan");

    PowerReport r{};
    r.p_ic = p_ic;
    r.noma3 = equal_rate_power_noma3(p_ic, gains, profile.alpha, profile.beta, profile.gamma);
    r.mf = equal_rate_power_noma2(NomaPair::MF, p_ic, gains, profile.alpha1);
    r.nf = equal_rate_power_noma2(NomaPair::NF, p_ic, gains, profile.alpha1);
    r.nm = equal_rate_power_noma2(NomaPair::NM, p_ic, gains, profile.alpha1);
    r.near_ic = equal_rate_power_ic(Group::Near, p_ic, gains);
    r.intermediate_ic = equal_rate_power_ic(Group::Intermediate, p_ic, gains);
    r.zetas = {r.noma3.zeta, r.mf.zeta, r.nf.zeta, r.nm.zeta, r.near_ic.zeta, r.intermediate_ic.zeta};

    for (const auto& t : plan.transmissions) {
        double p = p_ic;
        switch (t.kind) {
            case TransmissionKind::Noma3:
                p = r.noma3.power;
                break;
            case TransmissionKind::Noma2:
                switch (pair_of(t)) {
                    case NomaPair::MF:
                        p = r.mf.power;
                        break;
                    case NomaPair::NF:
                        p = r.nf.power;
                        break;
                    case NomaPair::NM:
                        p = r.nm.power;
                        break;
                }
                break;
            case TransmissionKind::Ic: {
                const Group target = t.layers.at(0).target;
                if (target == Group::Near) p = r.near_ic.power;
                if (target == Group::Intermediate) p = r.intermediate_ic.power;
                break;
            }
        }
        r.per_transmission.push_back(p);
        r.total += p;
    }
    r.p_avg = r.total / static_cast<double>(plan.transmissions.size());

    if (plan.case_id == CaseId::Degenerate || l_ic < plan.transmissions.size()) {
        r.p_saving = static_cast<double>(l_ic) * p_ic - r.total;
    } else {
        r.p_saving = power_savings(plan.case_id, plan.lengths, l_ic, p_ic, r.zetas);
    }
    return r;
}

}  // namespace icnoma
