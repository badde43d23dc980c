#include "icnoma/scheduler.hpp"

#include <algorithm>
#include <cmath>

#include "icnoma/error.hpp"

namespace icnoma {

void PowerProfile::validate() const {
    if (!(power > 0.0) || !std::isfinite(power)) throw ValidationError("power must be positive");
    if (!(alpha > 0.0 && alpha < beta && beta < gamma)) {
        throw ValidationError("power profile must satisfy 0 < alpha < beta < gamma");
    }
    if (std::abs(alpha + beta + gamma - 1.0) > 1e-9) throw ValidationError("alpha + beta + gamma must equal 1");
    if (!(alpha1 > 0.0 && alpha1 < 0.5)) throw ValidationError("alpha1 must lie in (0, 0.5)");
}

std::string_view to_string(TransmissionKind kind) {
    switch (kind) {
        case TransmissionKind::Noma3:
            return "NOMA3";
        case TransmissionKind::Noma2:
            return "NOMA2";
        case TransmissionKind::Ic:
            return "IC";
    }
    return "?";
}

std::string_view to_string(CaseId id) {
    static constexpr std::array<std::string_view, 14> names = {"I",    "II", "III", "IV",  "V",    "VI",   "VII",
                                                               "VIII", "IX", "X",   "XI",  "XII",  "XIII", "DEGENERATE"};
    return names[static_cast<std::size_t>(id) - 1];
}

std::size_t CodeLengths::max() const noexcept { return std::max({far, intermediate, near}); }

CaseClassification classify_case(const CodeLengths& lengths) {
    const std::size_t f = lengths.far;
    const std::size_t m = lengths.intermediate;
    const std::size_t n = lengths.near;

    if (f == 0 || m == 0 || n == 0) {
        // Same arithmetic as the schedule: min-length 3-layer rounds, then the
        // overlap of the two longer codes, then the remainder of the longest.
        const std::size_t k = std::min({f, m, n});
        const std::size_t hi = std::max({f, m, n});
        const std::size_t mid = f + m + n - k - hi;
        return {CaseId::Degenerate, {k, mid - k, hi - mid}};
    }
    if (f == m && m == n) return {CaseId::I, {f, 0, 0}};
    if (f > m && m > n) return {CaseId::II, {n, m - n, f - m}};
    if (n > f && f > m) return {CaseId::III, {m, f - m, n - f}};
    if (m > n && n > f) return {CaseId::IV, {f, n - f, m - n}};
    if (f > m && m == n) return {CaseId::V, {n, 0, f - m}};
    if (f > n && n > m) return {CaseId::VI, {m, n - m, f - n}};
    if (f == n && n > m) return {CaseId::VII, {m, n - m, 0}};
    if (f == m && m > n) return {CaseId::VIII, {n, m - n, 0}};
    if (n > f && f == m) return {CaseId::IX, {m, 0, n - f}};
    if (n == m && m > f) return {CaseId::X, {f, m - f, 0}};
    if (m > f && f == n) return {CaseId::XI, {n, 0, m - f}};
    if (n > m && m > f) return {CaseId::XII, {f, m - f, n - m}};
    // Only m > f > n remains.
    return {CaseId::XIII, {n, f - n, m - f}};
}

TransmissionPlan build_plan(const ThreeGroupCode& codes, const PowerProfile& profile) {
    profile.validate();
    const auto& far = codes.far.matrix();
    const auto& mid = codes.intermediate.matrix();
    const auto& near = codes.near.matrix();
    const std::size_t lf = far.row_count();
    const std::size_t lm = mid.row_count();
    const std::size_t ln = near.row_count();

    TransmissionPlan plan;
    plan.lengths = {lf, lm, ln};

    const std::size_t k3 = std::min({lf, lm, ln});
    for (std::size_t k = 0; k < k3; ++k) {
        plan.transmissions.push_back({TransmissionKind::Noma3,
                                      {{near.row(k), profile.alpha, Group::Near},
                                       {mid.row(k), profile.beta, Group::Intermediate},
                                       {far.row(k), profile.gamma, Group::Far}}});
    }

    auto noma2 = [&](const BitMatrix& weak, Group weak_group, const BitMatrix& strong, Group strong_group,
                     std::size_t from, std::size_t count) {
        for (std::size_t k = from; k < from + count; ++k) {
            plan.transmissions.push_back({TransmissionKind::Noma2,
                                          {{weak.row(k), profile.alpha1, weak_group},
                                           {strong.row(k), 1.0 - profile.alpha1, strong_group}}});
        }
    };

    std::size_t k2 = 0;
    if (std::min(lf, ln) > lm) {
        k2 = std::min(lf, ln) - lm;
        noma2(near, Group::Near, far, Group::Far, k3, k2);
    } else if (std::min(lm, ln) > lf) {
        k2 = std::min(lm, ln) - lf;
        noma2(near, Group::Near, mid, Group::Intermediate, k3, k2);
    } else if (std::min(lf, lm) > ln) {
        k2 = std::min(lf, lm) - ln;
        noma2(mid, Group::Intermediate, far, Group::Far, k3, k2);
    }

    auto single = [&](const BitMatrix& code, Group g, std::size_t from, std::size_t count) {
        for (std::size_t k = from; k < from + count; ++k) {
            plan.transmissions.push_back({TransmissionKind::Ic, {{code.row(k), 1.0, g}}});
        }
    };

    std::size_t k1 = 0;
    if (lf > std::max(lm, ln)) {
        k1 = lf - std::max(lm, ln);
        single(far, Group::Far, k3 + k2, k1);
    } else if (lm > std::max(lf, ln)) {
        k1 = lm - std::max(lf, ln);
        single(mid, Group::Intermediate, k3 + k2, k1);
    } else if (ln > std::max(lf, lm)) {
        k1 = ln - std::max(lf, lm);
        single(near, Group::Near, k3 + k2, k1);
    }

    plan.counts = {k3, k2, k1};
    plan.case_id = classify_case(plan.lengths).id;
    return plan;
}

bool verify_delivery(const IndexCodingProblem& problem, const GroupAssignment& groups,
                     const TransmissionPlan& plan) {
    const std::size_t n = problem.message_count();
    for (std::size_t i = 0; i < problem.user_count(); ++i) {
        const Group g = groups.group_of(i);
        EchelonBasis basis(problem.effective_generator(i));
        for (const auto& t : plan.transmissions) {
            for (const auto& layer : t.layers) {
                if (layer.codeword.size() != n) throw ValidationError("plan codeword width does not match problem");
                if (can_decode(g, layer.target)) basis.insert(layer.codeword);
            }
        }
        for (auto j : problem.users()[i].demand.want) {
            if (!basis.contains(BitVector::unit(n, j))) return false;
        }
    }
    return true;
}

}  // namespace icnoma
