#include "cpfec/osd.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>

namespace cpfec {

std::vector<int> rank_reliability(const LlrVector& l) {
    std::vector<int> order(l.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        double fa = std::fabs(l[a]), fb = std::fabs(l[b]);
        if (fa != fb) return fa > fb;
        return a < b;
    });
    return order;
}

Mrb most_reliable_basis(const ComponentCode& code, std::span<const int> order) {
    Elimination elim = gf2_eliminate(code.G, order);
    if (static_cast<int>(elim.pivot_columns.size()) != code.k_c)
        throw std::runtime_error("most_reliable_basis: generator matrix rank deficient");
    return {std::move(elim.reduced), std::move(elim.pivot_columns)};
}

std::vector<FlipPattern> build_flipping_set(const FlippingSetSpec& spec, int k_c) {
    if (spec.include_pairs && (spec.m2 > spec.m1 || spec.m1 > k_c || spec.m2 < 0))
        throw std::invalid_argument("build_flipping_set: need 0 <= m2 <= m1 <= k_c");
    std::vector<FlipPattern> t;
    if (spec.include_order0) t.push_back({});
    if (spec.include_order1)
        for (int p = 0; p < k_c; ++p) t.push_back({static_cast<int16_t>(p), -1});
    if (spec.include_pairs) {
        // MRB list index k_c-1 is the least reliable; both flips must fall in
        // the last m1 indices and the larger one in the last m2.
        for (int i = k_c - spec.m1; i < k_c - 1; ++i)
            for (int j = std::max(i + 1, k_c - spec.m2); j < k_c; ++j)
                t.push_back({static_cast<int16_t>(i), static_cast<int16_t>(j)});
    }
    return t;
}

int64_t flipping_set_size(const FlippingSetSpec& spec, int k_c) {
    auto choose2 = [](int64_t x) { return x * (x - 1) / 2; };
    int64_t n = 0;
    if (spec.include_order0) n += 1;
    if (spec.include_order1) n += k_c;
    if (spec.include_pairs) n += choose2(spec.m1) - choose2(spec.m1 - spec.m2);
    return n;
}

OsdResult osd_decode(const ComponentCode& code, const LlrVector& l, const FlippingSetSpec& spec) {
    auto patterns = build_flipping_set(spec, code.k_c);
    return osd_decode(code, l, patterns);
}

OsdResult osd_decode_patterns(const ComponentCode& code, const LlrVector& l,
                              std::span<const BitVector> mrb_flip_patterns) {
    const int n = code.n_c;
    const int k = code.k_c;
    if (static_cast<int>(l.size()) != n) throw std::invalid_argument("osd_decode: LLR length != n_c");
    if (mrb_flip_patterns.empty()) throw std::invalid_argument("osd_decode: empty candidate set");

    const auto order = rank_reliability(l);
    const Mrb mrb = most_reliable_basis(code, order);

    BitVector hard(n);
    for (int i = 0; i < n; ++i)
        if (l[i] < 0.0) hard.set(i, true);
    BitVector base(n);
    for (int r = 0; r < k; ++r)
        if (hard.get(mrb.positions[r])) base ^= mrb.gprime.row_vec(r);

    double best_score = std::numeric_limits<double>::infinity();
    BitVector best_codeword;
    for (const BitVector& t : mrb_flip_patterns) {
        if (t.size() != k) throw std::invalid_argument("osd_decode: pattern length != k_c");
        BitVector cand = base;
        for (int r = 0; r < k; ++r)
            if (t.get(r)) cand ^= mrb.gprime.row_vec(r);
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            if (cand.get(i) != hard.get(i)) s += std::fabs(l[i]);
        if (s < best_score) {
            best_score = s;
            best_codeword = std::move(cand);
        }
    }

    OsdResult res;
    res.codeword = std::move(best_codeword);
    res.info = code.info_of(res.codeword);
    res.score = best_score;
    res.candidates_evaluated = static_cast<int64_t>(mrb_flip_patterns.size());
    return res;
}

OsdResult osd_decode(const ComponentCode& code, const LlrVector& l,
                     std::span<const FlipPattern> patterns) {
    const int n = code.n_c;
    const int k = code.k_c;
    if (static_cast<int>(l.size()) != n) throw std::invalid_argument("osd_decode: LLR length != n_c");
    if (patterns.empty()) throw std::invalid_argument("osd_decode: empty candidate set");

    const auto order = rank_reliability(l);
    const Mrb mrb = most_reliable_basis(code, order);
    const int words = mrb.gprime.words_per_row();

    std::vector<double> absl(n);
    BitVector hard(n);
    for (int i = 0; i < n; ++i) {
        absl[i] = std::fabs(l[i]);
        if (l[i] < 0.0) hard.set(i, true);
    }

    // Base candidate re-encodes the hard decisions on the MRB positions.
    BitVector base(n);
    for (int r = 0; r < k; ++r)
        if (hard.get(mrb.positions[r])) {
            auto bw = base.words();
            const uint64_t* gr = mrb.gprime.row(r);
            for (int j = 0; j < words; ++j) bw[j] ^= gr[j];
        }

    std::vector<uint64_t> m0(words);  // base disagreement with hard decisions
    for (int j = 0; j < words; ++j) m0[j] = base.words()[j] ^ hard.words()[j];

    std::vector<uint64_t> mask(words);
    double best_score = std::numeric_limits<double>::infinity();
    size_t best_idx = 0;

    for (size_t idx = 0; idx < patterns.size(); ++idx) {
        const FlipPattern t = patterns[idx];
        const uint64_t* ra = t.a >= 0 ? mrb.gprime.row(t.a) : nullptr;
        const uint64_t* rb = t.b >= 0 ? mrb.gprime.row(t.b) : nullptr;
        for (int j = 0; j < words; ++j) {
            uint64_t w = m0[j];
            if (ra) w ^= ra[j];
            if (rb) w ^= rb[j];
            mask[j] = w;
        }
        double s = 0.0;
        for (int j = 0; j < words && s < best_score; ++j) {
            uint64_t bits = mask[j];
            while (bits) {
                s += absl[(j << 6) + std::countr_zero(bits)];
                if (s >= best_score) break;
                bits &= bits - 1;
            }
        }
        if (s < best_score) { // ties keep the earliest-generated candidate
            best_score = s;
            best_idx = idx;
        }
    }

    OsdResult res;
    res.codeword = std::move(base);
    const FlipPattern best = patterns[best_idx];
    for (int16_t p : {best.a, best.b})
        if (p >= 0) {
            auto cw = res.codeword.words();
            const uint64_t* gr = mrb.gprime.row(p);
            for (int j = 0; j < words; ++j) cw[j] ^= gr[j];
        }
    res.info = code.info_of(res.codeword);
    res.score = best_score;
    res.candidates_evaluated = static_cast<int64_t>(patterns.size());
    return res;
}

} // namespace cpfec
