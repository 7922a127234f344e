// Deterministic per-frame random streams: xoshiro256** seeded via splitmix64
// from (master_seed, frame_index). Gaussians by Box-Muller so that results do
// not depend on the standard library's normal_distribution implementation.
#ifndef CPFEC_RNG_HPP
#define CPFEC_RNG_HPP

#include <cmath>
#include <cstdint>

namespace cpfec {

inline constexpr const char* kRngAlgorithm = "xoshiro256** / splitmix64 keying / Box-Muller";

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class FrameRng {
public:
    // Distinct (master_seed, frame_index) pairs map to distinct stream keys:
    // the multiplier is odd, so frame_index -> key is injective per seed.
    FrameRng(uint64_t master_seed, uint64_t frame_index) {
        uint64_t key = master_seed ^ (0x9E3779B97F4A7C15ULL * (frame_index + 1));
        for (auto& w : s_) w = splitmix64(key);
    }

    uint64_t next_u64() {
        const uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform on [0,1), 53-bit resolution.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        // u1 in (0,1] so log(u1) is finite.
        double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
        double u2 = next_unit();
        double r = std::sqrt(-2.0 * std::log(u1));
        double theta = 2.0 * M_PI * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    bool next_bit() {
        if (bits_left_ == 0) {
            bit_pool_ = next_u64();
            bits_left_ = 64;
        }
        bool b = bit_pool_ & 1;
        bit_pool_ >>= 1;
        --bits_left_;
        return b;
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    uint64_t s_[4];
    double spare_ = 0.0;
    bool have_spare_ = false;
    uint64_t bit_pool_ = 0;
    int bits_left_ = 0;
};

} // namespace cpfec

#endif
