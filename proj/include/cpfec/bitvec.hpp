// Bit-packed binary words and GF(2) matrices. Row operations work on whole
// 64-bit words; Gaussian elimination and OSD re-encoding live on this layer.
#ifndef CPFEC_BITVEC_HPP
#define CPFEC_BITVEC_HPP

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "cpfec/rng.hpp"

namespace cpfec {

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    static BitVector random(int nbits, FrameRng& rng) {
        BitVector v(nbits);
        for (auto& w : v.w_) w = rng.next_u64();
        v.mask_tail();
        return v;
    }

    int size() const { return nbits_; }
    bool empty() const { return nbits_ == 0; }

    bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(int i, bool v) {
        uint64_t m = uint64_t(1) << (i & 63);
        if (v)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }
    void flip(int i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (uint64_t w : w_)
            if (w) return true;
        return false;
    }

    BitVector& operator^=(const BitVector& o) {
        if (o.nbits_ != nbits_) throw std::invalid_argument("BitVector xor: length mismatch");
        for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    bool operator==(const BitVector&) const = default;

    std::span<const uint64_t> words() const { return w_; }
    std::span<uint64_t> words() { return w_; }

    BitVector slice(int begin, int len) const {
        BitVector out(len);
        for (int i = 0; i < len; ++i) out.set(i, get(begin + i));
        return out;
    }

    static int hamming(const BitVector& a, const BitVector& b) {
        if (a.nbits_ != b.nbits_) throw std::invalid_argument("hamming: length mismatch");
        int c = 0;
        for (size_t i = 0; i < a.w_.size(); ++i) c += std::popcount(a.w_[i] ^ b.w_[i]);
        return c;
    }

private:
    void mask_tail() {
        int rem = nbits_ & 63;
        if (rem && !w_.empty()) w_.back() &= (uint64_t(1) << rem) - 1;
    }

    int nbits_ = 0;
    std::vector<uint64_t> w_;
};

class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(size_t(rows) * wpr_, 0) {}

    static BinaryMatrix from_rows(const std::vector<BitVector>& rows) {
        if (rows.empty()) return {};
        BinaryMatrix m(static_cast<int>(rows.size()), rows[0].size());
        for (int r = 0; r < m.rows_; ++r) {
            if (rows[r].size() != m.cols_) throw std::invalid_argument("from_rows: ragged rows");
            auto w = rows[r].words();
            for (int j = 0; j < m.wpr_; ++j) m.row(r)[j] = w[j];
        }
        return m;
    }

    static BinaryMatrix identity(int n) {
        BinaryMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int words_per_row() const { return wpr_; }

    bool get(int r, int c) const { return (row(r)[c >> 6] >> (c & 63)) & 1; }
    void set(int r, int c, bool v) {
        uint64_t m = uint64_t(1) << (c & 63);
        if (v)
            row(r)[c >> 6] |= m;
        else
            row(r)[c >> 6] &= ~m;
    }

    uint64_t* row(int r) { return data_.data() + size_t(r) * wpr_; }
    const uint64_t* row(int r) const { return data_.data() + size_t(r) * wpr_; }

    void xor_rows(int dst, int src) {
        uint64_t* d = row(dst);
        const uint64_t* s = row(src);
        for (int j = 0; j < wpr_; ++j) d[j] ^= s[j];
    }
    void swap_rows(int a, int b) {
        if (a == b) return;
        uint64_t* ra = row(a);
        uint64_t* rb = row(b);
        for (int j = 0; j < wpr_; ++j) std::swap(ra[j], rb[j]);
    }

    BitVector row_vec(int r) const {
        BitVector v(cols_);
        auto w = v.words();
        for (int j = 0; j < wpr_; ++j) w[j] = row(r)[j];
        return v;
    }

    // v (1 x rows) * M -> 1 x cols, i.e. XOR of the rows selected by v.
    BitVector mul_left(const BitVector& v) const {
        if (v.size() != rows_) throw std::invalid_argument("mul_left: length mismatch");
        BitVector out(cols_);
        auto w = out.words();
        for (int r = 0; r < rows_; ++r)
            if (v.get(r))
                for (int j = 0; j < wpr_; ++j) w[j] ^= row(r)[j];
        return out;
    }

    // Parity of <row r, v>.
    bool row_dot(int r, const BitVector& v) const {
        if (v.size() != cols_) throw std::invalid_argument("row_dot: length mismatch");
        auto w = v.words();
        uint64_t acc = 0;
        for (int j = 0; j < wpr_; ++j) acc ^= row(r)[j] & w[j];
        return std::popcount(acc) & 1;
    }

    int rank() const;

    bool operator==(const BinaryMatrix&) const = default;

private:
    int rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<uint64_t> data_;
};

struct Elimination {
    BinaryMatrix reduced;          // identity structure on the pivot columns
    std::vector<int> pivot_columns; // in priority order
};

// Row reduction choosing pivots in column_priority order. The input is copied;
// pivot_columns are the first rank(M) linearly independent columns in priority
// order, and row r of the result is the pivot row of pivot_columns[r].
Elimination gf2_eliminate(const BinaryMatrix& m, std::span<const int> column_priority);

} // namespace cpfec

#endif
