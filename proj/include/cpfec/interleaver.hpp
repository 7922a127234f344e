// Involutive bit interleavers. Every generated permutation pi satisfies
// pi(pi(i)) = i, so the interleaver is its own inverse.
#ifndef CPFEC_INTERLEAVER_HPP
#define CPFEC_INTERLEAVER_HPP

#include <cstdint>
#include <vector>

#include "cpfec/bitvec.hpp"
#include "cpfec/llr.hpp"

namespace cpfec {

using Permutation = std::vector<int>;

struct InterleaverSpec {
    enum class Kind { identity, digit_swap, random_involution };
    Kind kind = Kind::identity;
    int size = 1;        // S; power of two dividing n_c
    uint64_t seed = 0;   // random_involution only
    int rotation = 0;    // digit_swap only: conjugation by an index-bit rotation

    static InterleaverSpec identity_spec() { return {}; }
    static InterleaverSpec digit_swap_spec(int s, int rotation = 0) {
        return {Kind::digit_swap, s, 0, rotation};
    }
    static InterleaverSpec random_involution_spec(int s, uint64_t seed) {
        return {Kind::random_involution, s, seed, 0};
    }
};

// digit_swap(S): writing the index with log2(n_c) bits, swap the top log2(S)
// bits with the bottom log2(S) bits; S = 1 is the identity and S = n_c the
// full bit reversal. random_involution(S, seed): random perfect matching into
// swap pairs, each pair straddling two distinct length-(n_c/S) blocks.
Permutation build_interleaver(const InterleaverSpec& spec, int n_c);

inline bool is_involution(const Permutation& p) {
    for (size_t i = 0; i < p.size(); ++i)
        if (p[p[i]] != static_cast<int>(i)) return false;
    return true;
}

// out[i] = v[perm[i]]; for an involution this is also the inverse map.
inline LlrVector apply_perm(const Permutation& perm, const LlrVector& v) {
    LlrVector out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[perm[i]];
    return out;
}

inline BitVector apply_perm(const Permutation& perm, const BitVector& v) {
    BitVector out(v.size());
    for (int i = 0; i < v.size(); ++i)
        if (v.get(perm[i])) out.set(i, true);
    return out;
}

} // namespace cpfec

#endif
