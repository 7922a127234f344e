// The three coding schemes end to end: concatenated eBCH lanes, CP-MLC
// (one coded lane XORed across all lanes, single SDD), and CP-MLC-ID
// (d-1 coded lanes XOR-coupled to one bypassed lane, iterative decoding
// with damped extrinsic exchange). An "uncoded" kind exists for channel
// calibration runs.
#ifndef CPFEC_SCHEMES_HPP
#define CPFEC_SCHEMES_HPP

#include <string>
#include <vector>

#include "cpfec/channel.hpp"
#include "cpfec/interleaver.hpp"
#include "cpfec/linear_code.hpp"
#include "cpfec/osd.hpp"

namespace cpfec {

enum class SchemeKind { concatenated, cp_mlc, cp_mlc_id, uncoded };

std::string to_string(SchemeKind k);

struct SchemeConfig {
    SchemeKind kind = SchemeKind::concatenated;
    int d = 3; // number of lanes
    ComponentCode code;
    FlippingSetSpec osd_spec;
    int iterations = 1;                      // cp-mlc-id
    std::vector<double> damping;             // xi[1..I], each in [0,1]
    std::vector<InterleaverSpec> interleavers; // one per lane, lengths n_c
    // The bypassed-bit decision uses l_d + sum of extrinsics by default (the
    // belief-propagation marginal at the bypassed variable node). Setting this
    // false drops the direct channel term and decides from extrinsics alone,
    // which floors the bypassed-bit error rate near Q(2 sqrt(snr)).
    bool bypass_includes_channel_llr = true;
    std::string id; // label used in sweep records

    void validate() const;
};

// Lane-interleaver family (I, S^S, ..., S^S, I): identity on lane 1 and the
// bypassed lane, digit_swap(S) with rotated pairings on the middle lanes.
std::vector<InterleaverSpec> default_interleavers(int d, int size);

// Damping schedules reported for I = 3 and I = 6; all-ones otherwise.
std::vector<double> default_damping(int iterations);

struct Frame {
    BitVector info;                 // scheme info layout (see info_bit_count)
    std::vector<BitVector> coded;   // z_1..z_d before interleaving (n_c each)
    std::vector<BitVector> lanes;   // transmitted b_1..b_d (n_c each)
};

struct TraceEntry {
    int iteration = 0;
    int lane = 0; // 1-based
    int flips = 0; // bits changed by the SDD vs the hard decision of its input
};

struct DecodeResult {
    BitVector info;
    std::vector<TraceEntry> trace; // cp-mlc-id only
    int sdd_invocations = 0;
};

// Info layout per kind: concatenated d*k_c, cp-mlc k_c + (d-1)*n_c,
// cp-mlc-id (d-1)*k_c + n_c, uncoded n_c. Bypassed bits occupy the suffix
// starting at bypassed_offset (empty for concatenated/uncoded).
int info_bit_count(const SchemeConfig& cfg);
int bypassed_offset(const SchemeConfig& cfg);

// Damped hard-decision extrinsic: xi * l_j * (-1)^{s_hat_j}, elementwise.
LlrVector extrinsic_update(double xi, const LlrVector& lane_llr, const BitVector& shat);

Frame cpmlc_encode(const SchemeConfig& cfg, const BitVector& info);
DecodeResult cpmlc_decode(const SchemeConfig& cfg, const std::vector<LlrVector>& lanes);

Frame cpmlcid_encode(const SchemeConfig& cfg, const BitVector& info);
DecodeResult cpmlcid_decode(const SchemeConfig& cfg, const std::vector<LlrVector>& lanes);

Frame concatenated_encode(const SchemeConfig& cfg, const BitVector& info);
DecodeResult concatenated_decode(const SchemeConfig& cfg, const std::vector<LlrVector>& lanes);

Frame scheme_encode(const SchemeConfig& cfg, const BitVector& info);
DecodeResult scheme_decode(const SchemeConfig& cfg, const std::vector<LlrVector>& lanes);

// Total overhead in percent: (d*n_c) / (info bits per frame) * (544/514) - 1.
double scheme_overhead(const SchemeConfig& cfg);

// Conditional probabilities that an unreliable-lane LLR erases, given that the
// paired lane's extrinsic hard decision was wrong (first) or right (second),
// over a BSC(p): ((1-p)^2 + p^2, 2p(1-p)).
std::pair<double, double> bsc_erasure_probabilities(double p);

// Factor-graph message schedule: lane j = ((i-1) mod (d-1)) + 1 per iteration,
// with the variable->check / check->variable message chain per visit.
struct ScheduleEntry {
    int iteration = 0;
    int lane = 0;
    std::vector<std::string> messages;
};
std::vector<ScheduleEntry> message_schedule(int d, int iterations);

} // namespace cpfec

#endif
