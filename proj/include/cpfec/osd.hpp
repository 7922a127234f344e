// Ordered statistics decoding: reliability ordering, most-reliable-basis
// extraction, flipping-set candidate generation, and minimum correlation
// discrepancy selection. Pure functions of their inputs; parallel across
// frames with per-invocation scratch.
#ifndef CPFEC_OSD_HPP
#define CPFEC_OSD_HPP

#include <cstdint>
#include <span>

#include "cpfec/bitvec.hpp"
#include "cpfec/linear_code.hpp"
#include "cpfec/llr.hpp"

namespace cpfec {

struct FlippingSetSpec {
    bool include_order0 = true;
    bool include_order1 = true;
    bool include_pairs = false; // semi-order-2 set T2(m1, m2)
    int m1 = 0;
    int m2 = 0;
};

// A flip pattern over most-reliable-basis list indices (0 = most reliable).
// a < 0: no flip (T0); b < 0: single flip (T1); otherwise a pair (T2).
struct FlipPattern {
    int16_t a = -1;
    int16_t b = -1;
};

struct OsdResult {
    BitVector codeword;          // in the code space: H c^T = 0
    BitVector info;              // systematic information bits of the codeword
    double score = 0.0;          // correlation discrepancy sum_{disagree} |l|
    int64_t candidates_evaluated = 0;
};

// Positions sorted by |l| descending, ties broken by ascending index.
std::vector<int> rank_reliability(const LlrVector& l);

struct Mrb {
    BinaryMatrix gprime;         // k_c x n_c, identity structure on positions
    std::vector<int> positions;  // the k_c MRB positions in scan order
};

// Scans positions in descending reliability, skipping dependent columns.
Mrb most_reliable_basis(const ComponentCode& code, std::span<const int> order);

// T0 = {no flip}; T1 = all k_c single flips; T2(m1, m2) = pairs with both
// flips among the m1 least reliable MRB positions and at least one among the
// m2 least reliable. |T2| = C(m1,2) - C(m1-m2,2); patterns emitted T0, T1, T2
// each in lexicographic order.
std::vector<FlipPattern> build_flipping_set(const FlippingSetSpec& spec, int k_c);

int64_t flipping_set_size(const FlippingSetSpec& spec, int k_c);

OsdResult osd_decode(const ComponentCode& code, const LlrVector& l, const FlippingSetSpec& spec);
OsdResult osd_decode(const ComponentCode& code, const LlrVector& l,
                     std::span<const FlipPattern> patterns);

// Arbitrary-weight flip patterns over MRB list indices (each length k_c).
// Exhaustive ML falls out when the patterns enumerate all of {0,1}^k_c.
OsdResult osd_decode_patterns(const ComponentCode& code, const LlrVector& l,
                              std::span<const BitVector> mrb_flip_patterns);

} // namespace cpfec

#endif
