// BPSK over AWGN (and BSC), LLR computation, SNR convention.
// SNR is Es/N0 for unit-energy BPSK with noise variance sigma^2 per real
// dimension; only SNR differences are compared against reported results.
#ifndef CPFEC_CHANNEL_HPP
#define CPFEC_CHANNEL_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cpfec/bitvec.hpp"
#include "cpfec/llr.hpp"
#include "cpfec/rng.hpp"

namespace cpfec {

struct ChannelConfig {
    enum class Kind { awgn, bsc };
    Kind kind = Kind::awgn;
    double snr_db = 0.0;     // awgn
    double p = 0.0;          // bsc flip probability
    uint64_t master_seed = 0;
};

// x_i = 1 - 2 b_i.
inline std::vector<double> modulate(const BitVector& b) {
    std::vector<double> x(b.size());
    for (int i = 0; i < b.size(); ++i) x[i] = b.get(i) ? -1.0 : 1.0;
    return x;
}

inline std::vector<double> transmit_awgn(const std::vector<double>& x, double sigma, FrameRng& rng) {
    if (!(sigma > 0.0)) throw std::invalid_argument("transmit_awgn: sigma must be > 0");
    std::vector<double> y(x.size());
    for (size_t i = 0; i < x.size(); ++i) y[i] = x[i] + sigma * rng.next_gaussian();
    return y;
}

// l = 2y / sigma^2, clamped.
inline LlrVector llr_from_awgn(const std::vector<double>& y, double sigma) {
    if (!(sigma > 0.0)) throw std::invalid_argument("llr_from_awgn: sigma must be > 0");
    const double c = 2.0 / (sigma * sigma);
    LlrVector l(y.size());
    for (size_t i = 0; i < y.size(); ++i) l[i] = clamp_llr(c * y[i]);
    return l;
}

inline double snr_to_sigma(double snr_db) {
    if (!std::isfinite(snr_db)) throw std::invalid_argument("snr_to_sigma: snr_db must be finite");
    return std::sqrt(1.0 / (2.0 * std::pow(10.0, snr_db / 10.0)));
}

inline BitVector transmit_bsc(const BitVector& b, double p, FrameRng& rng) {
    if (p < 0.0 || p >= 0.5) throw std::invalid_argument("transmit_bsc: need 0 <= p < 0.5");
    BitVector out = b;
    for (int i = 0; i < b.size(); ++i)
        if (rng.next_unit() < p) out.flip(i);
    return out;
}

// sign(0) resolves to +1, i.e. bit 0.
inline bool hard_bit(double llr) { return llr < 0.0; }

inline BitVector hard_decisions(const LlrVector& l) {
    BitVector b(static_cast<int>(l.size()));
    for (size_t i = 0; i < l.size(); ++i)
        if (hard_bit(l[i])) b.set(static_cast<int>(i), true);
    return b;
}

} // namespace cpfec

#endif
