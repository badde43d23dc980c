#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace icnoma {

/// Fixed-length vector over GF(2), packed 64 bits per word.
///
/// Bit j stands for message x_{j+1}. The textual form lists bits in message
/// order, so "1100" is x1 + x2.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size);

    static BitVector from_string(std::string_view bits);
    static BitVector unit(std::size_t size, std::size_t index);

    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] bool get(std::size_t index) const;
    void set(std::size_t index, bool value = true);
    void flip(std::size_t index);

    [[nodiscard]] bool is_zero() const noexcept;
    [[nodiscard]] std::size_t popcount() const noexcept;
    /// Index of the first set bit, or size() if the vector is zero.
    [[nodiscard]] std::size_t lowest_set() const noexcept;
    [[nodiscard]] std::vector<std::size_t> support() const;

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector lhs, const BitVector& rhs) {
        lhs ^= rhs;
        return lhs;
    }

    friend bool operator==(const BitVector&, const BitVector&) = default;
    /// Lexicographic order on the textual form ("0001" < "1000").
    friend std::strong_ordering operator<=>(const BitVector& lhs, const BitVector& rhs);

    [[nodiscard]] std::string to_string() const;
    /// "x1+x4" style expression; "0" for the zero vector.
    [[nodiscard]] std::string to_expression() const;

    [[nodiscard]] std::span<const std::uint64_t> words() const noexcept { return words_; }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense matrix over GF(2) stored as a list of equal-length rows.
class BitMatrix {
public:
    BitMatrix() = default;
    /// Empty (0 x cols) matrix.
    explicit BitMatrix(std::size_t cols);
    BitMatrix(std::size_t cols, std::vector<BitVector> rows);

    static BitMatrix from_strings(std::initializer_list<std::string_view> rows);
    static BitMatrix from_strings(const std::vector<std::string>& rows);
    static BitMatrix identity(std::size_t n);

    [[nodiscard]] std::size_t row_count() const noexcept { return rows_.size(); }
    [[nodiscard]] std::size_t col_count() const noexcept { return cols_; }
    [[nodiscard]] bool empty() const noexcept { return rows_.empty(); }
    [[nodiscard]] const std::vector<BitVector>& rows() const noexcept { return rows_; }
    [[nodiscard]] const BitVector& row(std::size_t i) const { return rows_.at(i); }

    void append_row(BitVector row);

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

    [[nodiscard]] std::vector<std::string> to_strings() const;

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

/// Rows of `top` followed by rows of `bottom`. Column counts must agree.
BitMatrix stack(const BitMatrix& top, const BitMatrix& bottom);

std::size_t rank(const BitMatrix& m);

/// Reduced row echelon form with pivots at the leftmost (lowest-index)
/// column of each row. All-zero rows are dropped.
BitMatrix rref(const BitMatrix& m);

bool row_space_contains(const BitMatrix& m, const BitVector& v);

/// Incremental echelon basis for repeated membership queries.
///
/// Keeps rows fully reduced, so reduce() returns the canonical coset
/// representative of a vector modulo the span.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t cols) : cols_(cols) {}
    explicit EchelonBasis(const BitMatrix& m);

    /// Adds v to the span. Returns false if v was already in it.
    bool insert(BitVector v);
    [[nodiscard]] BitVector reduce(BitVector v) const;
    [[nodiscard]] bool contains(const BitVector& v) const { return reduce(v).is_zero(); }
    [[nodiscard]] std::size_t dimension() const noexcept { return rows_.size(); }
    [[nodiscard]] std::size_t col_count() const noexcept { return cols_; }
    /// Basis rows sorted by pivot column.
    [[nodiscard]] BitMatrix matrix() const;

private:
    std::size_t cols_;
    std::vector<BitVector> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace icnoma
