#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "icnoma/gf2.hpp"
#include "icnoma/grouping.hpp"
#include "icnoma/index_coding.hpp"
#include "icnoma/pipeline.hpp"

namespace icnoma {

/// Transmit power and superposition coefficients.
struct PowerProfile {
    double power = 10.0;   ///< P, per transmission
    double alpha = 0.1;    ///< 3-layer, near layer
    double beta = 0.3;     ///< 3-layer, intermediate layer
    double gamma = 0.6;    ///< 3-layer, far layer
    double alpha1 = 0.2;   ///< 2-layer, weaker layer

    /// Throws ValidationError unless alpha < beta < gamma, alpha + beta + gamma = 1,
    /// 0 < alpha1 < 0.5 and P > 0.
    void validate() const;
};

enum class TransmissionKind { Noma3, Noma2, Ic };

std::string_view to_string(TransmissionKind kind);

struct Layer {
    BitVector codeword;
    double coefficient;
    Group target;
};

/// One channel use. Layers are ordered by increasing power.
struct Transmission {
    TransmissionKind kind;
    std::vector<Layer> layers;
};

/// The thirteen orderings of (l_f, l_m, l_n); Degenerate when any length is zero.
enum class CaseId { I = 1, II, III, IV, V, VI, VII, VIII, IX, X, XI, XII, XIII, Degenerate };

std::string_view to_string(CaseId id);
inline constexpr std::array<CaseId, 13> kAllCases = {CaseId::I,   CaseId::II,  CaseId::III, CaseId::IV, CaseId::V,
                                                     CaseId::VI,  CaseId::VII, CaseId::VIII, CaseId::IX, CaseId::X,
                                                     CaseId::XI,  CaseId::XII, CaseId::XIII};

struct CodeLengths {
    std::size_t far = 0;
    std::size_t intermediate = 0;
    std::size_t near = 0;

    [[nodiscard]] std::size_t max() const noexcept;
    friend bool operator==(const CodeLengths&, const CodeLengths&) = default;
};

struct TransmissionCounts {
    std::size_t noma3 = 0;
    std::size_t noma2 = 0;
    std::size_t ic = 0;

    [[nodiscard]] std::size_t total() const noexcept { return noma3 + noma2 + ic; }
    friend bool operator==(const TransmissionCounts&, const TransmissionCounts&) = default;
};

struct CaseClassification {
    CaseId id;
    TransmissionCounts counts;
};

/// Case and transmission counts from the case table. Zero lengths give
/// Degenerate with the counts the transmission schedule would produce.
CaseClassification classify_case(const CodeLengths& lengths);

struct TransmissionPlan {
    std::vector<Transmission> transmissions;
    CaseId case_id = CaseId::Degenerate;
    TransmissionCounts counts;
    CodeLengths lengths;
};

/// Layered schedule: min-length rounds of 3-layer superposition, then 2-layer
/// rounds pairing the two longer codes, then single-layer rows of the longest.
/// Rows are paired by position.
TransmissionPlan build_plan(const ThreeGroupCode& codes, const PowerProfile& profile);

/// Symbolic SIC check: each user decodes every layer aimed at its own group
/// or a farther one, then must linearly decode all of its wants.
bool verify_delivery(const IndexCodingProblem& problem, const GroupAssignment& groups, const TransmissionPlan& plan);

}  // namespace icnoma
