#include "cpfec/interleaver.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace cpfec {

namespace {

int log2_exact(int x) {
    if (x <= 0 || (x & (x - 1)) != 0) throw std::invalid_argument("interleaver: size must be a power of two");
    return std::countr_zero(static_cast<unsigned>(x));
}

int rotate_index_bits(int i, int nbits, int by) {
    by %= nbits;
    if (by < 0) by += nbits;
    unsigned u = static_cast<unsigned>(i);
    return static_cast<int>(((u << by) | (u >> (nbits - by))) & ((1u << nbits) - 1));
}

Permutation digit_swap(int n_c, int s, int rotation) {
    const int nb = log2_exact(n_c);
    const int sb = log2_exact(s);
    Permutation p(n_c);
    if (s == 1) {
        std::iota(p.begin(), p.end(), 0);
        return p;
    }
    if (s == n_c) { // full bit reversal
        for (int i = 0; i < n_c; ++i) {
            int r = 0;
            for (int b = 0; b < nb; ++b)
                if ((i >> b) & 1) r |= 1 << (nb - 1 - b);
            p[i] = r;
        }
    } else {
        if (2 * sb > nb)
            throw std::invalid_argument("digit_swap: 2*log2(S) exceeds log2(n_c)");
        const int low_mask = s - 1;
        const int high_shift = nb - sb;
        const int mid_mask = ((1 << nb) - 1) & ~low_mask & ~(low_mask << high_shift);
        for (int i = 0; i < n_c; ++i) {
            int lo = i & low_mask;
            int hi = (i >> high_shift) & low_mask;
            p[i] = (i & mid_mask) | (lo << high_shift) | hi;
        }
    }
    if (rotation != 0) {
        // Conjugation by an index-bit rotation keeps the involution property.
        Permutation q(n_c);
        for (int i = 0; i < n_c; ++i)
            q[i] = rotate_index_bits(p[rotate_index_bits(i, nb, rotation)], nb, -rotation);
        p = std::move(q);
    }
    return p;
}

Permutation random_involution(int n_c, int s, uint64_t seed) {
    log2_exact(n_c);
    const int sb = log2_exact(s);
    if (sb < 1) throw std::invalid_argument("random_involution: need S >= 2");
    if (n_c % s != 0) throw std::invalid_argument("random_involution: S must divide n_c");
    const int block = n_c / s;

    // Fisher-Yates a candidate order, then greedily draw cross-block swap
    // pairs; restart with a derived seed in the rare case the tail gets stuck.
    for (uint64_t attempt = 0;; ++attempt) {
        FrameRng rng(seed, attempt);
        std::vector<int> pool(n_c);
        std::iota(pool.begin(), pool.end(), 0);
        for (int i = n_c - 1; i > 0; --i) {
            int j = static_cast<int>(rng.next_u64() % static_cast<uint64_t>(i + 1));
            std::swap(pool[i], pool[j]);
        }
        Permutation p(n_c, -1);
        bool ok = true;
        for (int i = 0; i < n_c && ok; ++i) {
            int a = pool[i];
            if (p[a] != -1) continue;
            int partner = -1;
            for (int j = i + 1; j < n_c; ++j) {
                int b = pool[j];
                if (p[b] == -1 && b / block != a / block) {
                    partner = b;
                    break;
                }
            }
            if (partner < 0) {
                ok = false;
                break;
            }
            p[a] = partner;
            p[partner] = a;
        }
        if (ok) return p;
    }
}

} // namespace

Permutation build_interleaver(const InterleaverSpec& spec, int n_c) {
    if (n_c <= 0) throw std::invalid_argument("build_interleaver: n_c must be positive");
    if (spec.kind != InterleaverSpec::Kind::identity && n_c % spec.size != 0)
        throw std::invalid_argument("build_interleaver: S must divide n_c");
    switch (spec.kind) {
    case InterleaverSpec::Kind::identity: {
        Permutation p(n_c);
        std::iota(p.begin(), p.end(), 0);
        return p;
    }
    case InterleaverSpec::Kind::digit_swap:
        return digit_swap(n_c, spec.size, spec.rotation);
    case InterleaverSpec::Kind::random_involution:
        return random_involution(n_c, spec.size, spec.seed);
    }
    throw std::logic_error("build_interleaver: unknown kind");
}

} // namespace cpfec
