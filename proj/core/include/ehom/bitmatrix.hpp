#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ehom {

/// Dense bit vector over GF(2), packed 64 bits per word.
/// Trailing bits of the last word are kept zero so equality is wordwise.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_(word_count(size), 0) {}

    static BitVector from_bits(const std::vector<int>& bits) {
        BitVector v(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (bits[i] & 1) v.set(i, true);
        return v;
    }

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const {
        check(i);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i, bool value) {
        check(i);
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void flip(std::size_t i) { set(i, !get(i)); }

    BitVector& operator^=(const BitVector& other) {
        if (other.size_ != size_) throw std::invalid_argument("BitVector xor: size mismatch");
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
        return *this;
    }

    friend BitVector operator^(BitVector a, const BitVector& b) {
        a ^= b;
        return a;
    }

    bool is_zero() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    std::size_t popcount() const;

    friend bool operator==(const BitVector&, const BitVector&) = default;
    friend auto operator<=>(const BitVector&, const BitVector&) = default;

private:
    static std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

    void check(std::size_t i) const {
        if (i >= size_) throw std::out_of_range("BitVector index out of range");
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;

    friend class BitMatrix;
};

/// Dense row-major bit matrix over GF(2).
class BitMatrix {
public:
    BitMatrix() = default;

    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {}

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(const std::vector<std::vector<int>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        check(r, c);
        return (data_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
    }

    void set(std::size_t r, std::size_t c, bool value) {
        check(r, c);
        const std::uint64_t mask = std::uint64_t{1} << (c & 63);
        if (value)
            data_[r * wpr_ + (c >> 6)] |= mask;
        else
            data_[r * wpr_ + (c >> 6)] &= ~mask;
    }

    /// row dst ^= row src, whole words at a time.
    void xor_row(std::size_t dst, std::size_t src) {
        check_row(dst);
        check_row(src);
        const std::size_t d = dst * wpr_, s = src * wpr_;
        for (std::size_t w = 0; w < wpr_; ++w) data_[d + w] ^= data_[s + w];
    }

    void swap_rows(std::size_t a, std::size_t b);

    BitVector row(std::size_t r) const;
    void set_row(std::size_t r, const BitVector& v);

    BitMatrix transpose() const;

    /// Matrix-vector product over GF(2); x.size() must equal cols().
    BitVector apply(const BitVector& x) const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    void check(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) throw std::out_of_range("BitMatrix index out of range");
    }
    void check_row(std::size_t r) const {
        if (r >= rows_) throw std::out_of_range("BitMatrix row out of range");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t wpr_ = 0;  // words per row
    std::vector<std::uint64_t> data_;
};

/// GF(2) rank by Gaussian elimination on a copy. Pivot columns are scanned
/// left to right, pivot rows top-down (first nonzero row), so results are
/// deterministic.
std::size_t rank(const BitMatrix& m);

/// cols − rank.
std::size_t kernel_dim(const BitMatrix& m);

/// Some x with m·x = b, or nullopt if the system is inconsistent.
/// Free variables are set to zero. Throws std::invalid_argument when
/// b.size() != m.rows().
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b);

}  // namespace ehom
