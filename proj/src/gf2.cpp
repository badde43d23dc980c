#include "icnoma/gf2.hpp"

#include <algorithm>
#include <bit>

#include "icnoma/error.hpp"

namespace icnoma {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

void require_same_cols(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw ValidationError(std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                              std::to_string(b) + ")");
    }
}

}  // namespace

BitVector::BitVector(std::size_t size) : size_(size), words_(word_count(size), 0) {}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i);
        } else if (bits[i] != '0') {
            throw ValidationError("bit string may contain only '0' and '1': \"" + std::string(bits) + "\"");
        }
    }
    return v;
}

BitVector BitVector::unit(std::size_t size, std::size_t index) {
    BitVector v(size);
    v.set(index);
    return v;
}

bool BitVector::get(std::size_t index) const {
    if (index >= size_) throw std::out_of_range("BitVector::get");
    return (words_[index / kWordBits] >> (index % kWordBits)) & 1U;
}

void BitVector::set(std::size_t index, bool value) {
    if (index >= size_) throw std::out_of_range("BitVector::set");
    const std::uint64_t mask = std::uint64_t{1} << (index % kWordBits);
    if (value) {
        words_[index / kWordBits] |= mask;
    } else {
        words_[index / kWordBits] &= ~mask;
    }
}

void BitVector::flip(std::size_t index) {
    if (index >= size_) throw std::out_of_range("BitVector::flip");
    words_[index / kWordBits] ^= std::uint64_t{1} << (index % kWordBits);
}

bool BitVector::is_zero() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BitVector::popcount() const noexcept {
    std::size_t count = 0;
    for (auto w : words_) count += static_cast<std::size_t>(std::popcount(w));
    return count;
}

std::size_t BitVector::lowest_set() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
    return size_;
}

std::vector<std::size_t> BitVector::support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size_; ++i) {
        if (get(i)) out.push_back(i);
    }
    return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    require_same_cols(size_, other.size_, "BitVector xor");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
}

std::strong_ordering operator<=>(const BitVector& lhs, const BitVector& rhs) {
    if (auto c = lhs.size_ <=> rhs.size_; c != 0) return c;
    for (std::size_t w = 0; w < lhs.words_.size(); ++w) {
        const std::uint64_t diff = lhs.words_[w] ^ rhs.words_[w];
        if (diff == 0) continue;
        // The first differing position in message order decides.
        const std::uint64_t bit = diff & (~diff + 1);
        return (lhs.words_[w] & bit) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

std::string BitVector::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

std::string BitVector::to_expression() const {
    std::string s;
    for (auto i : support()) {
        if (!s.empty()) s += '+';
        s += 'x' + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
}

BitMatrix::BitMatrix(std::size_t cols) : cols_(cols) {}

BitMatrix::BitMatrix(std::size_t cols, std::vector<BitVector> rows) : cols_(cols), rows_(std::move(rows)) {
    for (const auto& r : rows_) require_same_cols(cols_, r.size(), "BitMatrix row");
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
    std::vector<std::string> copy;
    for (auto r : rows) copy.emplace_back(r);
    return from_strings(copy);
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
    if (rows.empty()) throw ValidationError("BitMatrix::from_strings needs at least one row to fix the width");
    BitMatrix m(rows.front().size());
    for (const auto& r : rows) m.append_row(BitVector::from_string(r));
    return m;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.append_row(BitVector::unit(n, i));
    return m;
}

void BitMatrix::append_row(BitVector row) {
    require_same_cols(cols_, row.size(), "BitMatrix::append_row");
    rows_.push_back(std::move(row));
}

std::vector<std::string> BitMatrix::to_strings() const {
    std::vector<std::string> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(r.to_string());
    return out;
}

BitMatrix stack(const BitMatrix& top, const BitMatrix& bottom) {
    require_same_cols(top.col_count(), bottom.col_count(), "stack");
    BitMatrix out = top;
    for (const auto& r : bottom.rows()) out.append_row(r);
    return out;
}

EchelonBasis::EchelonBasis(const BitMatrix& m) : cols_(m.col_count()) {
    for (const auto& r : m.rows()) insert(r);
}

BitVector EchelonBasis::reduce(BitVector v) const {
    require_same_cols(cols_, v.size(), "EchelonBasis::reduce");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (v.get(pivots_[k])) v ^= rows_[k];
    }
    return v;
}

bool EchelonBasis::insert(BitVector v) {
    v = reduce(std::move(v));
    if (v.is_zero()) return false;
    const std::size_t pivot = v.lowest_set();
    for (auto& r : rows_) {
        if (r.get(pivot)) r ^= v;
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
}

BitMatrix EchelonBasis::matrix() const {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    BitMatrix out(cols_);
    for (auto i : order) out.append_row(rows_[i]);
    return out;
}

std::size_t rank(const BitMatrix& m) { return EchelonBasis(m).dimension(); }

BitMatrix rref(const BitMatrix& m) { return EchelonBasis(m).matrix(); }

bool row_space_contains(const BitMatrix& m, const BitVector& v) {
    require_same_cols(m.col_count(), v.size(), "row_space_contains");
    return EchelonBasis(m).contains(v);
}

}  // namespace icnoma
