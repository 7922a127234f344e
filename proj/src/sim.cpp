#include "cpfec/sim.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace cpfec {

namespace {

struct Counts {
    int64_t bit_errors = 0;
    int64_t bypassed_errors = 0;
};

Counts simulate_frame(const SchemeConfig& scheme, double sigma, uint64_t master_seed,
                      uint64_t frame_index) {
    FrameRng rng(master_seed, frame_index);
    const int nbits = info_bit_count(scheme);
    const BitVector info = BitVector::random(nbits, rng);
    const Frame frame = scheme_encode(scheme, info);

    std::vector<LlrVector> llrs;
    llrs.reserve(frame.lanes.size());
    for (const auto& lane : frame.lanes)
        llrs.push_back(llr_from_awgn(transmit_awgn(modulate(lane), sigma, rng), sigma));

    const DecodeResult dec = scheme_decode(scheme, llrs);

    Counts c;
    const int off = bypassed_offset(scheme);
    for (int i = 0; i < nbits; ++i)
        if (dec.info.get(i) != info.get(i)) {
            ++c.bit_errors;
            if (i >= off) ++c.bypassed_errors;
        }
    return c;
}

Counts simulate_range(const SchemeConfig& scheme, double sigma, uint64_t master_seed,
                      int64_t begin, int64_t end, int workers) {
    workers = static_cast<int>(std::max<int64_t>(1, std::min<int64_t>(workers, end - begin)));
    if (workers == 1) {
        Counts total;
        for (int64_t f = begin; f < end; ++f) {
            Counts c = simulate_frame(scheme, sigma, master_seed, static_cast<uint64_t>(f));
            total.bit_errors += c.bit_errors;
            total.bypassed_errors += c.bypassed_errors;
        }
        return total;
    }
    std::vector<Counts> partial(workers);
    std::vector<std::thread> pool;
    const int64_t span = end - begin;
    for (int w = 0; w < workers; ++w) {
        const int64_t lo = begin + span * w / workers;
        const int64_t hi = begin + span * (w + 1) / workers;
        pool.emplace_back([&, w, lo, hi] { partial[w] = simulate_range(scheme, sigma, master_seed, lo, hi, 1); });
    }
    for (auto& t : pool) t.join();
    Counts total;
    for (const Counts& c : partial) {
        total.bit_errors += c.bit_errors;
        total.bypassed_errors += c.bypassed_errors;
    }
    return total;
}

} // namespace

SweepRecord run_point(const SchemeConfig& scheme, const ChannelConfig& channel,
                      const StoppingRule& rule, int workers) {
    if (channel.kind != ChannelConfig::Kind::awgn)
        throw std::invalid_argument("run_point: only the AWGN channel is simulated");
    if (rule.min_frames > rule.max_frames)
        throw std::invalid_argument("run_point: min_frames > max_frames");
    scheme.validate();

    const auto t0 = std::chrono::steady_clock::now();
    const double sigma = snr_to_sigma(channel.snr_db);
    const int64_t bits_per_frame = info_bit_count(scheme);

    Counts total;
    int64_t done = 0;
    // Fixed checkpoint schedule (1.5x growth) so the stop decision does not
    // depend on the worker count.
    int64_t checkpoint = std::max<int64_t>(1, rule.min_frames);
    for (;;) {
        checkpoint = std::min(checkpoint, rule.max_frames);
        Counts c = simulate_range(scheme, sigma, channel.master_seed, done, checkpoint, workers);
        total.bit_errors += c.bit_errors;
        total.bypassed_errors += c.bypassed_errors;
        done = checkpoint;
        const bool resolved = done >= rule.min_frames && total.bit_errors >= rule.min_bit_errors;
        if (resolved || done >= rule.max_frames) break;
        checkpoint = done + std::max<int64_t>(256, done / 2);
    }

    SweepRecord rec;
    rec.scheme_id = scheme.id.empty() ? to_string(scheme.kind) : scheme.id;
    rec.snr_db = channel.snr_db;
    rec.frames = done;
    rec.bits = done * bits_per_frame;
    rec.bit_errors = total.bit_errors;
    rec.pre_outer_ber = rec.bits > 0 ? static_cast<double>(total.bit_errors) / rec.bits : 0.0;
    rec.bypassed_bit_errors = total.bypassed_errors;
    rec.master_seed = channel.master_seed;
    rec.under_resolved = total.bit_errors < rule.min_bit_errors;
    rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

ThresholdResult required_snr(const SchemeConfig& scheme, uint64_t master_seed, double target_ber,
                             double bracket_lo_db, double bracket_hi_db, double tol_db,
                             const StoppingRule& rule, int workers) {
    if (!(bracket_lo_db < bracket_hi_db)) throw std::invalid_argument("required_snr: bad bracket");
    if (!(tol_db > 0.0)) throw std::invalid_argument("required_snr: tol must be > 0");

    ThresholdResult res;
    auto probe = [&](double snr_db) -> const SweepRecord& {
        ChannelConfig ch{ChannelConfig::Kind::awgn, snr_db, 0.0, master_seed};
        res.probes.push_back(run_point(scheme, ch, rule, workers));
        const SweepRecord& r = res.probes.back();
        // A probe claiming "below target" without enough errors is only sound
        // if BER = target would have produced min_bit_errors in its budget.
        if (r.under_resolved && static_cast<double>(r.bits) * target_ber < static_cast<double>(rule.min_bit_errors))
            res.under_resolved = true;
        return r;
    };

    double lo = bracket_lo_db, hi = bracket_hi_db;
    if (probe(lo).pre_outer_ber <= target_ber)
        throw std::runtime_error("required_snr: BER at bracket low end does not exceed target");
    if (probe(hi).pre_outer_ber > target_ber)
        throw std::runtime_error("required_snr: BER at bracket high end is above target");

    while (hi - lo > tol_db) {
        const double mid = 0.5 * (lo + hi);
        if (probe(mid).pre_outer_ber > target_ber)
            lo = mid;
        else
            hi = mid;
    }
    res.snr_db = 0.5 * (lo + hi);
    return res;
}

double q_func(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

double q_func_inv(double p) {
    if (!(p > 0.0) || p >= 0.5) throw std::invalid_argument("q_func_inv: need 0 < p < 0.5");
    double lo = 0.0, hi = 45.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (q_func(mid) > p)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double uncoded_snr_db_at(double ber) {
    const double x = q_func_inv(ber);
    return 10.0 * std::log10(x * x / 2.0);
}

double total_rate(const SchemeConfig& scheme) {
    if (scheme.kind == SchemeKind::uncoded) return 1.0;
    const double inner = static_cast<double>(info_bit_count(scheme)) /
                         (static_cast<double>(scheme.d) * scheme.code.n_c);
    return inner * (514.0 / 544.0);
}

NcgResult ncg(const SchemeConfig& scheme, uint64_t master_seed, double bracket_lo_db,
              double bracket_hi_db, double tol_db, const StoppingRule& rule, int workers) {
    NcgResult res;
    res.rate_total = total_rate(scheme);
    res.threshold = required_snr(scheme, master_seed, OuterCodeModel{}.threshold_ber, bracket_lo_db,
                                 bracket_hi_db, tol_db, rule, workers);
    res.ncg_db = uncoded_snr_db_at(OuterCodeModel{}.target_post_ber) - res.threshold.snr_db +
                 10.0 * std::log10(res.rate_total);
    return res;
}

std::vector<InterleaverSweepRow> interleaver_sweep(const SchemeConfig& base,
                                                   const std::vector<int>& sizes,
                                                   const std::vector<int>& iteration_counts,
                                                   uint64_t master_seed, double bracket_lo_db,
                                                   double bracket_hi_db, double tol_db,
                                                   const StoppingRule& rule, int workers,
                                                   double target_ber) {
    if (base.kind != SchemeKind::cp_mlc_id)
        throw std::invalid_argument("interleaver_sweep: base scheme must be cp-mlc-id");
    const double target = target_ber;

    std::vector<InterleaverSweepRow> rows;
    for (int iters : iteration_counts) {
        SchemeConfig cfg = base;
        cfg.iterations = iters;
        cfg.damping = default_damping(iters);

        auto threshold_at = [&](int s) {
            cfg.interleavers = default_interleavers(cfg.d, s);
            cfg.id = to_string(cfg.kind) + "/" + cfg.code.name + "/I" + std::to_string(iters) +
                     "/S" + std::to_string(s);
            return required_snr(cfg, master_seed, target, bracket_lo_db, bracket_hi_db, tol_db,
                                rule, workers);
        };

        const ThresholdResult ref = threshold_at(cfg.code.n_c);
        for (int s : sizes) {
            const ThresholdResult thr = s == cfg.code.n_c ? ref : threshold_at(s);
            rows.push_back({s, iters, thr.snr_db, thr.snr_db - ref.snr_db,
                            thr.under_resolved || ref.under_resolved});
        }
    }
    return rows;
}

double sdd_count_per3(const SchemeConfig& scheme) {
    switch (scheme.kind) {
    case SchemeKind::concatenated: return 3.0;
    case SchemeKind::cp_mlc: return 3.0 / scheme.d; // one SDD per frame of d lanes
    case SchemeKind::cp_mlc_id: return 3.0 * scheme.iterations / scheme.d;
    case SchemeKind::uncoded: return 0.0;
    }
    return 0.0;
}

} // namespace cpfec
