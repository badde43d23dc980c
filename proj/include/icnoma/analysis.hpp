#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "icnoma/grouping.hpp"
#include "icnoma/scheduler.hpp"

namespace icnoma {

/// Worst-case gains of each group plus the power profile. Unit noise variance;
/// rates are in bits per channel use.
struct RateParams {
    double g_n;
    double g_m;
    double g_f;
    double power;
    double alpha;
    double beta;
    double gamma;
    double alpha1;

    static RateParams from(const GroupMinGains& gains, const PowerProfile& profile);

    /// g_n > g_m > g_f > 0 and the PowerProfile invariants.
    void validate() const;
};

/// Which two groups share a 2-layer transmission. The first group named gets
/// the weak (alpha1) layer.
enum class NomaPair { MF, NF, NM };

std::string_view to_string(NomaPair pair);
NomaPair parse_pair(std::string_view text);

struct Noma3Rates {
    double far;
    double intermediate;
    double near;
    double sum;
};

struct Noma2Rates {
    double high_gain;  ///< weak layer, decoded after SIC
    double low_gain;   ///< strong layer, weak layer treated as noise
    double sum;
};

/// log2(1 + g_f P). Throws ValidationError on nonpositive input.
double rate_ic_baseline(double g_f, double power);

Noma3Rates rates_noma3(const RateParams& rp);
Noma2Rates rates_noma2(NomaPair pair, const RateParams& rp);
/// Single-layer transmission aimed at `group`, rated at that group's worst gain.
double rate_ic_in_scheme(Group group, const RateParams& rp);

struct TransmissionRate {
    TransmissionKind kind;
    std::vector<double> layer_rates;  ///< same order as the plan's layers
    double sum;
};

struct RateReport {
    std::vector<TransmissionRate> per_transmission;
    double r_avg;
    double r_ic_baseline;
};

/// Throws ValidationError for an empty plan.
RateReport rate_report(const TransmissionPlan& plan, const RateParams& rp);

/// Power that gives the same rate as one baseline IC transmission at P_IC,
/// and the saving zeta = P_IC - power.
struct EqualRatePower {
    double power;
    double zeta;
};

/// Bisection on (0, P_IC] for the 3-layer sum rate.
EqualRatePower equal_rate_power_noma3(double p_ic, const GroupMinGains& gains, double alpha, double beta,
                                      double gamma);
/// Bisection on (0, P_IC] for the 2-layer sum rate of `pair`.
EqualRatePower equal_rate_power_noma2(NomaPair pair, double p_ic, const GroupMinGains& gains, double alpha1);
/// Closed form P_IC g_f / g_group. Far gives zeta = 0.
EqualRatePower equal_rate_power_ic(Group group, double p_ic, const GroupMinGains& gains);

struct ZetaSet {
    double noma3 = 0.0;
    double mf = 0.0;
    double nf = 0.0;
    double nm = 0.0;
    double near = 0.0;
    double intermediate = 0.0;
};

ZetaSet compute_zetas(double p_ic, const GroupMinGains& gains, const PowerProfile& profile);

/// Per-case saving against l_IC baseline transmissions at P_IC. Throws
/// ValidationError for Degenerate or when l_IC < max(lengths).
double power_savings(CaseId id, const CodeLengths& lengths, std::size_t l_ic, double p_ic, const ZetaSet& zetas);

struct PowerReport {
    double p_ic;
    EqualRatePower noma3;
    EqualRatePower mf;
    EqualRatePower nf;
    EqualRatePower nm;
    EqualRatePower near_ic;
    EqualRatePower intermediate_ic;
    ZetaSet zetas;
    std::vector<double> per_transmission;
    double total;
    double p_avg;
    double p_saving;
};

/// Equal-rate power of every transmission in the plan, their mean, and the
/// saving against l_IC baseline transmissions. Degenerate plans (a zero-length
/// code), and plans longer than l_IC (possible with the greedy solver), get the
/// saving l_IC P_IC - total. Throws ValidationError for an empty plan.
PowerReport power_report(const TransmissionPlan& plan, const GroupMinGains& gains, double p_ic,
                         const PowerProfile& profile, std::size_t l_ic);

}  // namespace icnoma
