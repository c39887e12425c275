// Dense bit-packed matrices over GF(2).
#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace qlift {

/// Row-major bit-packed matrix over GF(2). Immutable by convention once
/// built: operations return fresh matrices. Trailing pad bits of each row
/// are kept zero so rows can be compared and hashed word-wise.
class BitMatrix {
public:
    BitMatrix() = default;

    BitMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0)
            throw std::invalid_argument("BitMatrix: negative dimensions");
        words_ = (cols + 63) / 64;
        bits_.assign(static_cast<size_t>(rows) * words_, 0);
    }

    static BitMatrix identity(int n) {
        BitMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    /// Build from explicit 0/1 entries, one inner list per row.
    static BitMatrix from_rows(const std::vector<std::vector<int>>& entries, int cols = -1) {
        int r = static_cast<int>(entries.size());
        int c = cols;
        if (c < 0) c = r > 0 ? static_cast<int>(entries[0].size()) : 0;
        BitMatrix m(r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(entries[i].size()) != c)
                throw std::invalid_argument("BitMatrix::from_rows: ragged rows");
            for (int j = 0; j < c; ++j)
                if (entries[i][j] & 1) m.set(i, j, true);
        }
        return m;
    }

    /// Build from per-row support lists.
    static BitMatrix from_supports(int rows, int cols, const std::vector<std::vector<int>>& supports) {
        BitMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j : supports[i]) m.set(i, j, true);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int words_per_row() const { return words_; }

    bool get(int r, int c) const {
        return (bits_[static_cast<size_t>(r) * words_ + (c >> 6)] >> (c & 63)) & 1u;
    }

    void set(int r, int c, bool v) {
        uint64_t& w = bits_[static_cast<size_t>(r) * words_ + (c >> 6)];
        uint64_t mask = uint64_t(1) << (c & 63);
        if (v) w |= mask; else w &= ~mask;
    }

    const uint64_t* row_ptr(int r) const { return bits_.data() + static_cast<size_t>(r) * words_; }
    uint64_t* row_ptr(int r) { return bits_.data() + static_cast<size_t>(r) * words_; }

    void xor_row_into(int src, int dst) {
        const uint64_t* s = row_ptr(src);
        uint64_t* d = row_ptr(dst);
        for (int w = 0; w < words_; ++w) d[w] ^= s[w];
    }

    void swap_rows(int a, int b) {
        if (a == b) return;
        uint64_t* pa = row_ptr(a);
        uint64_t* pb = row_ptr(b);
        for (int w = 0; w < words_; ++w) std::swap(pa[w], pb[w]);
    }

    bool row_is_zero(int r) const {
        const uint64_t* p = row_ptr(r);
        for (int w = 0; w < words_; ++w)
            if (p[w]) return false;
        return true;
    }

    int row_weight(int r) const {
        const uint64_t* p = row_ptr(r);
        int s = 0;
        for (int w = 0; w < words_; ++w) s += std::popcount(p[w]);
        return s;
    }

    int col_weight(int c) const {
        int s = 0;
        for (int r = 0; r < rows_; ++r) s += get(r, c);
        return s;
    }

    int max_row_weight() const {
        int m = 0;
        for (int r = 0; r < rows_; ++r) m = std::max(m, row_weight(r));
        return m;
    }

    int max_col_weight() const {
        int m = 0;
        for (int c = 0; c < cols_; ++c) m = std::max(m, col_weight(c));
        return m;
    }

    std::vector<int> row_weights() const {
        std::vector<int> w(rows_);
        for (int r = 0; r < rows_; ++r) w[r] = row_weight(r);
        return w;
    }

    std::vector<int> col_weights() const {
        std::vector<int> w(cols_);
        for (int c = 0; c < cols_; ++c) w[c] = col_weight(c);
        return w;
    }

    int nnz() const {
        int s = 0;
        for (int r = 0; r < rows_; ++r) s += row_weight(r);
        return s;
    }

    bool is_zero() const {
        for (uint64_t w : bits_)
            if (w) return false;
        return true;
    }

    std::vector<int> row_support(int r) const {
        std::vector<int> s;
        for (int c = 0; c < cols_; ++c)
            if (get(r, c)) s.push_back(c);
        return s;
    }

    BitMatrix transpose() const {
        BitMatrix t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                if (get(r, c)) t.set(c, r, true);
        return t;
    }

    BitMatrix permute_cols(const std::vector<int>& perm) const {
        if (static_cast<int>(perm.size()) != cols_)
            throw std::invalid_argument("permute_cols: bad permutation length");
        BitMatrix m(rows_, cols_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                if (get(r, c)) m.set(r, perm[c], true);
        return m;
    }

    BitMatrix vstack(const BitMatrix& other) const {
        if (other.cols_ != cols_)
            throw std::invalid_argument("vstack: column mismatch");
        BitMatrix m(rows_ + other.rows_, cols_);
        std::copy(bits_.begin(), bits_.end(), m.bits_.begin());
        std::copy(other.bits_.begin(), other.bits_.end(),
                  m.bits_.begin() + static_cast<size_t>(rows_) * words_);
        return m;
    }

    friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const BitMatrix& a, const BitMatrix& b) { return !(a == b); }

private:
    int rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<uint64_t> bits_;
};

/// A 0/1 vector packed into words; used for code words and witnesses.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(int n) : n_(n), bits_((n + 63) / 64, 0) {}

    static BitVec from_ints(const std::vector<int>& v) {
        BitVec b(static_cast<int>(v.size()));
        for (int i = 0; i < b.n_; ++i)
            if (v[i] & 1) b.set(i, true);
        return b;
    }

    static BitVec row_of(const BitMatrix& m, int r) {
        BitVec b(m.cols());
        const uint64_t* p = m.row_ptr(r);
        std::copy(p, p + m.words_per_row(), b.bits_.begin());
        return b;
    }

    int size() const { return n_; }
    bool get(int i) const { return (bits_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i, bool v) {
        uint64_t mask = uint64_t(1) << (i & 63);
        if (v) bits_[i >> 6] |= mask; else bits_[i >> 6] &= ~mask;
    }
    void xor_with(const BitVec& o) {
        for (size_t w = 0; w < bits_.size(); ++w) bits_[w] ^= o.bits_[w];
    }
    int weight() const {
        int s = 0;
        for (uint64_t w : bits_) s += std::popcount(w);
        return s;
    }
    bool is_zero() const {
        for (uint64_t w : bits_)
            if (w) return false;
        return true;
    }
    const std::vector<uint64_t>& words() const { return bits_; }
    std::vector<uint64_t>& words() { return bits_; }

    std::vector<int> support() const {
        std::vector<int> s;
        for (int i = 0; i < n_; ++i)
            if (get(i)) s.push_back(i);
        return s;
    }

    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }
    friend bool operator<(const BitVec& a, const BitVec& b) {
        // lexicographic on bit positions 0,1,2,...: the vector with a 0 at
        // the first differing position is the smaller one
        for (size_t w = 0; w < a.bits_.size() && w < b.bits_.size(); ++w) {
            if (a.bits_[w] == b.bits_[w]) continue;
            uint64_t diff = a.bits_[w] ^ b.bits_[w];
            uint64_t low = diff & ~(diff - 1);
            return (b.bits_[w] & low) != 0;
        }
        return false;
    }

private:
    int n_ = 0;
    std::vector<uint64_t> bits_;

    friend class BitMatrix;
};

struct RrefResult {
    BitMatrix m;             // canonical reduced row echelon form, zero rows dropped
    std::vector<int> pivots; // pivot column of each kept row, strictly increasing
};

/// Canonical RREF: leftmost pivots, rows reduced above and below, zero rows
/// removed. Deterministic for a given input.
inline RrefResult rref(const BitMatrix& in) {
    BitMatrix m = in;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.get(i, c)) { pivot = i; break; }
        if (pivot < 0) continue;
        m.swap_rows(r, pivot);
        for (int i = 0; i < m.rows(); ++i)
            if (i != r && m.get(i, c)) m.xor_row_into(r, i);
        pivots.push_back(c);
        ++r;
    }
    BitMatrix out(r, m.cols());
    for (int i = 0; i < r; ++i)
        for (int w = 0; w < m.words_per_row(); ++w)
            out.row_ptr(i)[w] = m.row_ptr(i)[w];
    return {out, pivots};
}

inline int rank(const BitMatrix& m) { return static_cast<int>(rref(m).pivots.size()); }

/// Basis of {v : m v = 0}, one row per free column, in free-column order.
/// Row count is always cols - rank.
inline BitMatrix kernel_basis(const BitMatrix& m) {
    RrefResult rr = rref(m);
    int n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (int c : rr.pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    BitMatrix basis(static_cast<int>(free_cols.size()), n);
    for (size_t i = 0; i < free_cols.size(); ++i) {
        int f = free_cols[i];
        basis.set(static_cast<int>(i), f, true);
        for (size_t p = 0; p < rr.pivots.size(); ++p)
            if (rr.m.get(static_cast<int>(p), f))
                basis.set(static_cast<int>(i), rr.pivots[p], true);
    }
    return basis;
}

inline BitMatrix mul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("mul: dimension mismatch " + std::to_string(a.cols()) +
                                    " vs " + std::to_string(b.rows()));
    BitMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        uint64_t* dst = out.row_ptr(i);
        for (int k = 0; k < a.cols(); ++k) {
            if (!a.get(i, k)) continue;
            const uint64_t* src = b.row_ptr(k);
            for (int w = 0; w < b.words_per_row(); ++w) dst[w] ^= src[w];
        }
    }
    return out;
}

inline BitVec mul(const BitMatrix& m, const BitVec& v) {
    if (m.cols() != v.size())
        throw std::invalid_argument("mul: vector length mismatch");
    BitVec out(m.rows());
    for (int r = 0; r < m.rows(); ++r) {
        const uint64_t* p = m.row_ptr(r);
        uint64_t acc = 0;
        for (size_t w = 0; w < v.words().size(); ++w) acc ^= p[w] & v.words()[w];
        out.set(r, std::popcount(acc) & 1);
    }
    return out;
}

inline bool rowspace_contains(const BitMatrix& m, const BitVec& v) {
    if (v.size() != m.cols())
        throw std::invalid_argument("rowspace_contains: length mismatch");
    BitMatrix stacked(m.rows() + 1, m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int w = 0; w < m.words_per_row(); ++w)
            stacked.row_ptr(r)[w] = m.row_ptr(r)[w];
    for (size_t w = 0; w < v.words().size(); ++w)
        stacked.row_ptr(m.rows())[w] = v.words()[w];
    return rank(stacked) == rank(m);
}

/// Cached RREF of a row space for repeated membership tests.
class RowSpace {
public:
    RowSpace() = default;
    explicit RowSpace(const BitMatrix& m) : rr_(rref(m)) {}

    int rank() const { return static_cast<int>(rr_.pivots.size()); }

    bool contains(const BitVec& v) const {
        BitVec r = v;
        reduce(r);
        return r.is_zero();
    }

    /// Reduce v modulo the row space (in place).
    void reduce(BitVec& v) const {
        for (size_t p = 0; p < rr_.pivots.size(); ++p) {
            int c = rr_.pivots[p];
            if (v.get(c)) {
                const uint64_t* row = rr_.m.row_ptr(static_cast<int>(p));
                for (size_t w = 0; w < v.words().size(); ++w) v.words()[w] ^= row[w];
            }
        }
    }

private:
    RrefResult rr_;
};

} // namespace qlift
