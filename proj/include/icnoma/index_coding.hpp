#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "icnoma/gf2.hpp"

namespace icnoma {

/// 0-based message index (x_{j+1} has index j).
using MessageIndex = std::size_t;
using MessageSet = std::set<MessageIndex>;

/// What a receiver already holds: plain messages plus coded combinations.
struct UserSideInfo {
    MessageSet plain_known;
    BitMatrix coded_rows;  ///< generator of coded side information; may have zero rows
};

struct UserDemand {
    MessageSet want;
};

struct User {
    UserSideInfo side;
    UserDemand demand;
};

/// An index coding problem with (optionally) coded side information.
class IndexCodingProblem {
public:
    IndexCodingProblem() = default;
    /// Throws ValidationError on out-of-range indices, wrong coded-row width,
    /// or a want that is also plainly known.
    IndexCodingProblem(std::size_t n, std::vector<User> users);

    [[nodiscard]] std::size_t message_count() const noexcept { return n_; }
    [[nodiscard]] const std::vector<User>& users() const noexcept { return users_; }
    [[nodiscard]] std::size_t user_count() const noexcept { return users_.size(); }
    [[nodiscard]] std::size_t demand_count() const noexcept;

    /// stack(unit rows of plain_known, coded_rows) for the given user.
    [[nodiscard]] BitMatrix effective_generator(std::size_t user) const;

    /// Problem restricted to the listed users, in the given order.
    [[nodiscard]] IndexCodingProblem restricted_to(const std::vector<std::size_t>& users) const;

private:
    std::size_t n_ = 0;
    std::vector<User> users_;
};

/// Linear index code: rows of the encoding matrix, linearly independent and nonzero.
class IndexCode {
public:
    explicit IndexCode(std::size_t n) : matrix_(n) {}
    /// Throws ValidationError if a row is zero or rows are dependent.
    explicit IndexCode(BitMatrix matrix);

    [[nodiscard]] const BitMatrix& matrix() const noexcept { return matrix_; }
    [[nodiscard]] std::size_t length() const noexcept { return matrix_.row_count(); }
    [[nodiscard]] std::size_t message_count() const noexcept { return matrix_.col_count(); }

private:
    BitMatrix matrix_;
};

/// True iff every user can linearly decode each wanted message from its side
/// information plus the code rows.
bool is_valid_code(const IndexCodingProblem& problem, const BitMatrix& code);
bool is_valid_code(const IndexCodingProblem& problem, const IndexCode& code);

struct ExactSolverOptions {
    /// Largest code length to try; unset means n.
    std::optional<std::size_t> max_length;
    /// Refuse problems with more messages than this.
    std::size_t message_bound = 10;
    /// Tie-break among minimum-length codes: maximize, in order, the number of
    /// demand pairs of these problems that become decodable.
    std::vector<IndexCodingProblem> preferences;
};

/// Hard limit on message_bound; the search tabulates all 2^n vectors.
inline constexpr std::size_t kExactSolverHardLimit = 20;

/// Minimum-length linear code by exhaustive search over row spaces.
///
/// Returns nullopt if no valid code of length <= max_length exists. Throws
/// CapabilityError if the problem has more than message_bound messages.
std::optional<IndexCode> solve_exact(const IndexCodingProblem& problem, const ExactSolverOptions& options = {});

/// Greedy code: repeatedly adds the row that newly satisfies the most
/// outstanding (user, want) pairs, ties to the lexicographically lowest row.
IndexCode solve_greedy(const IndexCodingProblem& problem);

/// Adds `extra` to every user's coded side information and drops wants that
/// become decodable from it.
IndexCodingProblem reduce_by_coded_rows(const IndexCodingProblem& problem, const BitMatrix& extra);

/// The equivalent single-demand problem: one receiver per (user, want) pair.
IndexCodingProblem split_receivers(const IndexCodingProblem& problem);

}  // namespace icnoma
