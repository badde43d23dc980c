#include "icnoma/index_coding.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "icnoma/error.hpp"

namespace icnoma {

IndexCodingProblem::IndexCodingProblem(std::size_t n, std::vector<User> users) : n_(n), users_(std::move(users)) {
    if (n_ == 0) throw ValidationError("index coding problem needs at least one message");
    for (std::size_t i = 0; i < users_.size(); ++i) {
        auto& u = users_[i];
        const std::string who = "user " + std::to_string(i + 1);
        for (auto j : u.side.plain_known) {
            if (j >= n_) throw ValidationError(who + ": known message index out of range");
        }
        for (auto j : u.demand.want) {
            if (j >= n_) throw ValidationError(who + ": wanted message index out of range");
            if (u.side.plain_known.contains(j)) {
                throw ValidationError(who + ": x" + std::to_string(j + 1) + " is both known and wanted");
            }
        }
        if (u.side.coded_rows.row_count() == 0 && u.side.coded_rows.col_count() == 0) {
            u.side.coded_rows = BitMatrix(n_);
        } else if (u.side.coded_rows.col_count() != n_) {
            throw ValidationError(who + ": coded side information has wrong width");
        }
    }
}

std::size_t IndexCodingProblem::demand_count() const noexcept {
    std::size_t total = 0;
    for (const auto& u : users_) total += u.demand.want.size();
    return total;
}

BitMatrix IndexCodingProblem::effective_generator(std::size_t user) const {
    const auto& side = users_.at(user).side;
    BitMatrix g(n_);
    for (auto j : side.plain_known) g.append_row(BitVector::unit(n_, j));
    return stack(g, side.coded_rows);
}

IndexCodingProblem IndexCodingProblem::restricted_to(const std::vector<std::size_t>& users) const {
    std::vector<User> picked;
    picked.reserve(users.size());
    for (auto i : users) picked.push_back(users_.at(i));
    return IndexCodingProblem(n_, std::move(picked));
}

IndexCode::IndexCode(BitMatrix matrix) : matrix_(std::move(matrix)) {
    for (const auto& r : matrix_.rows()) {
        if (r.is_zero()) throw ValidationError("index code rows must be nonzero");
    }
    if (rank(matrix_) != matrix_.row_count()) throw ValidationError("index code rows must be linearly independent");
}

bool is_valid_code(const IndexCodingProblem& problem, const BitMatrix& code) {
    if (code.col_count() != problem.message_count()) {
        throw ValidationError("code width " + std::to_string(code.col_count()) + " does not match " +
                              std::to_string(problem.message_count()) + " messages");
    }
    for (std::size_t i = 0; i < problem.user_count(); ++i) {
        const EchelonBasis basis(stack(problem.effective_generator(i), code));
        for (auto j : problem.users()[i].demand.want) {
            if (!basis.contains(BitVector::unit(problem.message_count(), j))) return false;
        }
    }
    return true;
}

bool is_valid_code(const IndexCodingProblem& problem, const IndexCode& code) {
    return is_valid_code(problem, code.matrix());
}

namespace {

using Word = std::uint32_t;

Word to_word(const BitVector& v) {
    Word w = 0;
    for (auto j : v.support()) w |= Word{1} << j;
    return w;
}

BitVector from_word(Word w, std::size_t n) {
    BitVector v(n);
    for (std::size_t j = 0; j < n; ++j) {
        if ((w >> j) & 1U) v.set(j);
    }
    return v;
}

/// For every vector v of GF(2)^n, the set of demand pairs (i, j) such that
/// x_j is decodable by user i from its side information plus v alone.
/// Decodability from a span S is the OR of the entries over S.
class DemandTable {
public:
    DemandTable(const IndexCodingProblem& p) : n_(p.message_count()) {
        std::size_t pairs = p.demand_count();
        words_ = std::max<std::size_t>(1, (pairs + 63) / 64);
        full_.assign(words_, 0);
        for (std::size_t k = 0; k < pairs; ++k) full_[k / 64] |= std::uint64_t{1} << (k % 64);
        pair_count_ = pairs;

        const std::size_t size = std::size_t{1} << n_;
        data_.assign(size * words_, 0);
        std::vector<Word> residue(size);
        std::size_t pair = 0;
        for (std::size_t i = 0; i < p.user_count(); ++i) {
            const EchelonBasis basis(p.effective_generator(i));
            std::vector<Word> unit_residue(n_);
            for (std::size_t j = 0; j < n_; ++j) unit_residue[j] = to_word(basis.reduce(BitVector::unit(n_, j)));
            residue[0] = 0;
            for (std::size_t v = 1; v < size; ++v) {
                residue[v] = residue[v & (v - 1)] ^ unit_residue[static_cast<std::size_t>(std::countr_zero(v))];
            }
            for (auto j : p.users()[i].demand.want) {
                const Word target = unit_residue[j];
                const std::uint64_t bit = std::uint64_t{1} << (pair % 64);
                const std::size_t word = pair / 64;
                for (std::size_t v = 0; v < size; ++v) {
                    if (residue[v] == target) data_[v * words_ + word] |= bit;
                }
                ++pair;
            }
        }
    }

    [[nodiscard]] std::size_t words() const noexcept { return words_; }
    [[nodiscard]] const std::uint64_t* entry(Word v) const noexcept { return &data_[std::size_t{v} * words_]; }
    [[nodiscard]] const std::vector<std::uint64_t>& full() const noexcept { return full_; }

    void accumulate(std::uint64_t* acc, Word v) const noexcept {
        const auto* e = entry(v);
        for (std::size_t w = 0; w < words_; ++w) acc[w] |= e[w];
    }

    [[nodiscard]] std::size_t count_over(const Word* span, std::size_t span_size) const {
        std::vector<std::uint64_t> acc(words_, 0);
        for (std::size_t s = 0; s < span_size; ++s) accumulate(acc.data(), span[s]);
        std::size_t c = 0;
        for (auto w : acc) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

private:
    std::size_t n_;
    std::size_t words_ = 1;
    std::size_t pair_count_ = 0;
    std::vector<std::uint64_t> data_;
    std::vector<std::uint64_t> full_;
};

/// Depth-first enumeration of all l-dimensional subspaces of GF(2)^n, each
/// visited once through its reduced echelon basis.
class SubspaceSearch {
public:
    SubspaceSearch(std::size_t n, std::size_t length, const DemandTable& validity,
                   const std::vector<DemandTable>& preferences)
        : n_(n),
          length_(length),
          validity_(validity),
          preferences_(preferences),
          span_(std::size_t{1} << length),
          acc_((length + 1) * validity.words()),
          basis_(length),
          free_(length) {}

    /// Returns the chosen basis, or nullopt if no valid subspace exists.
    std::optional<std::vector<Word>> run() {
        const std::size_t words = validity_.words();
        std::fill(acc_.begin(), acc_.end(), 0);
        validity_.accumulate(acc_.data(), 0);
        span_[0] = 0;
        found_.reset();

        std::vector<std::size_t> pivots(length_);
        for (std::size_t k = 0; k < length_; ++k) pivots[k] = k;
        while (true) {
            std::vector<bool> is_pivot(n_, false);
            for (auto p : pivots) is_pivot[p] = true;
            for (std::size_t k = 0; k < length_; ++k) {
                free_[k].clear();
                for (std::size_t q = pivots[k] + 1; q < n_; ++q) {
                    if (!is_pivot[q]) free_[k].push_back(q);
                }
            }
            pivots_ = pivots;
            if (descend(0, words) && preferences_.empty()) break;

            // Next pivot combination in lexicographic order.
            std::size_t k = length_;
            while (k > 0 && pivots[k - 1] == n_ - length_ + (k - 1)) --k;
            if (k == 0) break;
            ++pivots[k - 1];
            for (std::size_t m = k; m < length_; ++m) pivots[m] = pivots[m - 1] + 1;
        }
        return found_;
    }

private:
    /// Returns true when a valid subspace was found and the search may stop.
    bool descend(std::size_t depth, std::size_t words) {
        if (depth == length_) return leaf(words);
        const auto& free = free_[depth];
        const std::size_t choices = std::size_t{1} << free.size();
        const std::size_t half = std::size_t{1} << depth;
        const std::uint64_t* parent = &acc_[depth * words];
        std::uint64_t* child = &acc_[(depth + 1) * words];
        for (std::size_t c = 0; c < choices; ++c) {
            Word v = Word{1} << pivots_[depth];
            for (std::size_t b = 0; b < free.size(); ++b) {
                if ((c >> b) & 1U) v |= Word{1} << free[b];
            }
            basis_[depth] = v;
            std::copy(parent, parent + words, child);
            for (std::size_t s = 0; s < half; ++s) {
                span_[half + s] = span_[s] ^ v;
                validity_.accumulate(child, span_[half + s]);
            }
            if (descend(depth + 1, words) && preferences_.empty()) return true;
        }
        return false;
    }

    bool leaf(std::size_t words) {
        const std::uint64_t* acc = &acc_[length_ * words];
        const auto& full = validity_.full();
        for (std::size_t w = 0; w < words; ++w) {
            if ((acc[w] & full[w]) != full[w]) return false;
        }
        if (preferences_.empty()) {
            found_ = basis_;
            return true;
        }
        std::vector<std::size_t> score;
        score.reserve(preferences_.size());
        for (const auto& pref : preferences_) score.push_back(pref.count_over(span_.data(), span_.size()));
        if (!found_ || score > best_score_) {
            found_ = basis_;
            best_score_ = std::move(score);
        }
        return true;
    }

    std::size_t n_;
    std::size_t length_;
    const DemandTable& validity_;
    const std::vector<DemandTable>& preferences_;
    std::vector<Word> span_;
    std::vector<std::uint64_t> acc_;
    std::vector<Word> basis_;
    std::vector<std::vector<std::size_t>> free_;
    std::vector<std::size_t> pivots_;
    std::optional<std::vector<Word>> found_;
    std::vector<std::size_t> best_score_;
};

}  // namespace

std::optional<IndexCode> solve_exact(const IndexCodingProblem& problem, const ExactSolverOptions& options) {
    const std::size_t n = problem.message_count();
    const std::size_t bound = std::min(options.message_bound, kExactSolverHardLimit);
    if (n > bound) {
        throw CapabilityError("exact solver supports at most " + std::to_string(bound) + " messages, problem has " +
                              std::to_string(n));
    }
    for (const auto& pref : options.preferences) {
        if (pref.message_count() != n) throw ValidationError("preference problem has a different message count");
    }

    const DemandTable validity(problem);
    {
        std::vector<std::uint64_t> acc(validity.words(), 0);
        validity.accumulate(acc.data(), 0);
        if (acc == validity.full()) return IndexCode(n);
    }

    std::vector<DemandTable> preferences;
    preferences.reserve(options.preferences.size());
    for (const auto& pref : options.preferences) preferences.emplace_back(pref);

    const std::size_t max_length = std::min(options.max_length.value_or(n), n);
    for (std::size_t length = 1; length <= max_length; ++length) {
        SubspaceSearch search(n, length, validity, preferences);
        if (auto basis = search.run()) {
            BitMatrix m(n);
            for (auto w : *basis) m.append_row(from_word(w, n));
            return IndexCode(std::move(m));
        }
    }
    return std::nullopt;
}

namespace {

/// Candidate rows for the greedy search in lexicographic order of their bit strings.
std::vector<BitVector> greedy_candidates(std::size_t n) {
    std::vector<BitVector> out;
    if (n <= 16) {
        const std::size_t total = std::size_t{1} << n;
        out.reserve(total - 1);
        for (std::size_t k = 1; k < total; ++k) {
            BitVector v(n);
            // x1 is the most significant bit of k, so integer order is string order.
            for (std::size_t j = 0; j < n; ++j) {
                if ((k >> (n - 1 - j)) & 1U) v.set(j);
            }
            out.push_back(std::move(v));
        }
        return out;
    }
    for (std::size_t a = 0; a < n; ++a) {
        out.push_back(BitVector::unit(n, a));
        for (std::size_t b = a + 1; b < n; ++b) {
            BitVector v = BitVector::unit(n, a);
            v.set(b);
            out.push_back(std::move(v));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

IndexCode solve_greedy(const IndexCodingProblem& problem) {
    const std::size_t n = problem.message_count();
    std::vector<EchelonBasis> bases;
    bases.reserve(problem.user_count());
    for (std::size_t i = 0; i < problem.user_count(); ++i) bases.emplace_back(problem.effective_generator(i));

    struct Outstanding {
        std::size_t user;
        MessageIndex message;
        BitVector residue;
    };
    std::vector<Outstanding> outstanding;
    auto refresh = [&]() {
        outstanding.clear();
        for (std::size_t i = 0; i < problem.user_count(); ++i) {
            for (auto j : problem.users()[i].demand.want) {
                auto r = bases[i].reduce(BitVector::unit(n, j));
                if (!r.is_zero()) outstanding.push_back({i, j, std::move(r)});
            }
        }
    };
    refresh();

    BitMatrix code(n);
    if (outstanding.empty()) return IndexCode(std::move(code));
    const auto candidates = greedy_candidates(n);

    while (!outstanding.empty()) {
        const BitVector* best = nullptr;
        std::size_t best_gain = 0;
        std::vector<BitVector> reduced(problem.user_count());
        for (const auto& v : candidates) {
            for (std::size_t i = 0; i < problem.user_count(); ++i) reduced[i] = bases[i].reduce(v);
            std::size_t gain = 0;
            for (const auto& o : outstanding) {
                if (reduced[o.user] == o.residue) ++gain;
            }
            if (gain > best_gain) {
                best_gain = gain;
                best = &v;
            }
        }
        // A unit row for any outstanding want always has positive gain.
        code.append_row(*best);
        for (auto& b : bases) b.insert(*best);
        refresh();
    }
    return IndexCode(std::move(code));
}

IndexCodingProblem reduce_by_coded_rows(const IndexCodingProblem& problem, const BitMatrix& extra) {
    const std::size_t n = problem.message_count();
    if (extra.col_count() != n) {
        throw ValidationError("extra rows have width " + std::to_string(extra.col_count()) + ", expected " +
                              std::to_string(n));
    }
    std::vector<User> users = problem.users();
    for (std::size_t i = 0; i < users.size(); ++i) {
        auto& u = users[i];
        u.side.coded_rows = stack(u.side.coded_rows, extra);
        const EchelonBasis basis(problem.effective_generator(i));
        EchelonBasis augmented = basis;
        for (const auto& r : extra.rows()) augmented.insert(r);
        std::erase_if(u.demand.want, [&](MessageIndex j) { return augmented.contains(BitVector::unit(n, j)); });
    }
    return IndexCodingProblem(n, std::move(users));
}

IndexCodingProblem split_receivers(const IndexCodingProblem& problem) {
    std::vector<User> users;
    for (const auto& u : problem.users()) {
        for (auto j : u.demand.want) users.push_back(User{u.side, UserDemand{{j}}});
    }
    return IndexCodingProblem(problem.message_count(), std::move(users));
}

}  // namespace icnoma
