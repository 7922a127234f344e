// Extended BCH component codes in systematic form, plus the outer KP4 code
// modeled as a pre-FEC BER threshold.
#ifndef CPFEC_LINEAR_CODE_HPP
#define CPFEC_LINEAR_CODE_HPP

#include <string>

#include "cpfec/bitvec.hpp"
#include "cpfec/gf2m.hpp"

namespace cpfec {

struct ComponentCode {
    int n_c = 0;
    int k_c = 0;
    int d_min = 0;           // design distance of the BCH code + 1 (overall parity)
    int field_m = 0;
    int design_distance = 0; // of the underlying BCH code
    std::string name;        // e.g. "ebch-128-113"
    BinaryMatrix G;          // k_c x n_c, systematic [I | P]
    BinaryMatrix H;          // (n_c - k_c) x n_c, [P^T | I]

    // Systematic codeword: info bits appear verbatim in the first k_c positions.
    BitVector encode(const BitVector& info) const {
        if (info.size() != k_c) throw std::invalid_argument("encode: info length != k_c");
        return G.mul_left(info);
    }

    BitVector syndrome(const BitVector& word) const {
        if (word.size() != n_c) throw std::invalid_argument("syndrome: word length != n_c");
        BitVector s(H.rows());
        for (int r = 0; r < H.rows(); ++r) s.set(r, H.row_dot(r, word));
        return s;
    }
    bool is_codeword(const BitVector& word) const { return !syndrome(word).any(); }

    BitVector info_of(const BitVector& codeword) const { return codeword.slice(0, k_c); }
};

// BCH(2^m - 1, k_c) extended by one overall parity bit. Throws if no BCH code
// with that information length exists over GF(2^m).
ComponentCode build_ebch_field(int m, int k_c);

// The 128-bit family: GF(2^7) with primitive polynomial x^7 + x^3 + 1.
ComponentCode build_ebch(int k_c);

struct OuterCodeModel {
    double rate = 514.0 / 544.0;
    double threshold_ber = 2.2e-4;
    double target_post_ber = 1e-15;
};

// True iff the pre-outer BER reaches the KP4 threshold (inclusive), i.e. the
// outer code attains its 1e-15 post-FEC target.
inline bool outer_success(double pre_outer_ber) {
    if (pre_outer_ber < 0.0 || pre_outer_ber > 0.5)
        throw std::invalid_argument("outer_success: BER out of [0, 0.5]");
    return pre_outer_ber <= OuterCodeModel{}.threshold_ber;
}

} // namespace cpfec

#endif
