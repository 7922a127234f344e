// Monte Carlo harness: BER points with deterministic per-frame seeding,
// threshold-SNR bisection, NCG, and the interleaver-size experiment.
// Counts are identical for any worker count because every frame's outcome
// is a pure function of (master_seed, frame_index) and stopping decisions
// happen only at a fixed checkpoint schedule.
#ifndef CPFEC_SIM_HPP
#define CPFEC_SIM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cpfec/channel.hpp"
#include "cpfec/schemes.hpp"

namespace cpfec {

struct StoppingRule {
    int64_t min_bit_errors = 100;
    int64_t min_frames = 10000;
    int64_t max_frames = 10000000;
};

struct SweepRecord {
    std::string scheme_id;
    double snr_db = 0.0;
    int64_t frames = 0;
    int64_t bits = 0; // information bits delivered to the outer code
    int64_t bit_errors = 0;
    double pre_outer_ber = 0.0;
    int64_t bypassed_bit_errors = 0;
    double wall_seconds = 0.0;
    uint64_t master_seed = 0;
    bool under_resolved = false; // hit max_frames below min_bit_errors
};

SweepRecord run_point(const SchemeConfig& scheme, const ChannelConfig& channel,
                      const StoppingRule& rule, int workers = 1);

struct ThresholdResult {
    double snr_db = 0.0;
    bool under_resolved = false; // some decisive probe could not certify the target
    std::vector<SweepRecord> probes;
};

// Bisection (monotone-BER assumption) for the SNR where the measured pre-outer
// BER crosses target_ber; requires BER(lo) > target and BER(hi) < target.
ThresholdResult required_snr(const SchemeConfig& scheme, uint64_t master_seed, double target_ber,
                             double bracket_lo_db, double bracket_hi_db, double tol_db,
                             const StoppingRule& rule, int workers = 1);

double q_func(double x);
double q_func_inv(double p);

// SNR (dB, Es/N0) at which uncoded BPSK reaches the given BER: Q(sqrt(2 snr)).
double uncoded_snr_db_at(double ber);

// Total code rate including the 514/544 outer factor.
double total_rate(const SchemeConfig& scheme);

struct NcgResult {
    double ncg_db = 0.0;
    double rate_total = 0.0;
    ThresholdResult threshold;
};

// NCG = SNR_uncoded(1e-15) - required_snr(scheme, 2.2e-4) + 10 log10(R_total).
NcgResult ncg(const SchemeConfig& scheme, uint64_t master_seed, double bracket_lo_db,
              double bracket_hi_db, double tol_db, const StoppingRule& rule, int workers = 1);

struct InterleaverSweepRow {
    int size = 0;
    int iterations = 0;
    double required_snr_db = 0.0;
    double snr_loss_db = 0.0; // vs the S = n_c reference at the same I
    bool under_resolved = false;
};

// For each (S, I): SNR loss at target_ber (default: the KP4 threshold)
// relative to the S = n_c reference at the same iteration count.
std::vector<InterleaverSweepRow> interleaver_sweep(const SchemeConfig& base,
                                                   const std::vector<int>& sizes,
                                                   const std::vector<int>& iteration_counts,
                                                   uint64_t master_seed, double bracket_lo_db,
                                                   double bracket_hi_db, double tol_db,
                                                   const StoppingRule& rule, int workers = 1,
                                                   double target_ber = 2.2e-4);

// Soft-decision decoder invocations normalized to three lanes.
double sdd_count_per3(const SchemeConfig& scheme);

} // namespace cpfec

#endif
