#include "ehom/bitmatrix.hpp"

#include <bit>

namespace ehom {

std::size_t BitVector::popcount() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    BitMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("BitMatrix::from_rows: ragged rows");
        for (std::size_t j = 0; j < c; ++j)
            if (rows[i][j] & 1) m.set(i, j, true);
    }
    return m;
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    check_row(a);
    check_row(b);
    if (a == b) return;
    for (std::size_t w = 0; w < wpr_; ++w) std::swap(data_[a * wpr_ + w], data_[b * wpr_ + w]);
}

BitVector BitMatrix::row(std::size_t r) const {
    check_row(r);
    BitVector v(cols_);
    for (std::size_t w = 0; w < wpr_; ++w) v.words_[w] = data_[r * wpr_ + w];
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v) {
    check_row(r);
    if (v.size() != cols_) throw std::invalid_argument("BitMatrix::set_row: size mismatch");
    for (std::size_t w = 0; w < wpr_; ++w) data_[r * wpr_ + w] = v.words_[w];
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t w = 0; w < wpr_; ++w) {
            std::uint64_t word = data_[r * wpr_ + w];
            while (word) {
                const int bit = std::countr_zero(word);
                t.set((w << 6) + static_cast<std::size_t>(bit), r, true);
                word &= word - 1;
            }
        }
    return t;
}

BitVector BitMatrix::apply(const BitVector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("BitMatrix::apply: size mismatch");
    BitVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < wpr_; ++w) acc ^= data_[r * wpr_ + w] & x.words_[w];
        out.set(r, std::popcount(acc) & 1);
    }
    return out;
}

namespace {

// Reduced row echelon form in place; returns pivot (row, col) pairs.
std::vector<std::pair<std::size_t, std::size_t>> reduce(BitMatrix& m) {
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < m.cols() && next_row < m.rows(); ++c) {
        std::size_t p = next_row;
        while (p < m.rows() && !m.get(p, c)) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, next_row);
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (r != next_row && m.get(r, c)) m.xor_row(r, next_row);
        pivots.emplace_back(next_row, c);
        ++next_row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const BitMatrix& m) {
    BitMatrix work = m;
    return reduce(work).size();
}

std::size_t kernel_dim(const BitMatrix& m) { return m.cols() - rank(m); }

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length must equal row count");
    // Eliminate the augmented matrix [m | b].
    BitMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.get(r, c)) aug.set(r, c, true);
        if (b.get(r)) aug.set(r, m.cols(), true);
    }
    const auto pivots = reduce(aug);
    // A pivot in the augmented column means the system is inconsistent.
    if (!pivots.empty() && pivots.back().second == m.cols()) return std::nullopt;
    BitVector x(m.cols());
    for (const auto& [r, c] : pivots)
        if (aug.get(r, m.cols())) x.set(c, true);
    return x;
}

}  // namespace ehom
