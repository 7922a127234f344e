#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cpfec/config.hpp"
#include "cpfec/sim.hpp"

using namespace cpfec;

namespace {

SchemeConfig uncoded_scheme() {
    return scheme_from_config(ConfigMap{{"scheme.kind", "uncoded"}});
}

SchemeConfig small_concat() {
    SchemeConfig cfg;
    cfg.kind = SchemeKind::concatenated;
    cfg.d = 3;
    cfg.code = build_ebch_field(4, 11);
    cfg.osd_spec = FlippingSetSpec{true, true, true, 11, 11};
    cfg.id = "concat-16-11";
    return cfg;
}

ChannelConfig awgn(double snr_db, uint64_t seed) {
    return ChannelConfig{ChannelConfig::Kind::awgn, snr_db, 0.0, seed};
}

} // namespace

TEST_CASE("q function and its inverse") {
    CHECK(q_func(0.0) == doctest::Approx(0.5));
    CHECK(q_func(3.0) == doctest::Approx(0.0013498980316).epsilon(1e-9));
    CHECK(q_func_inv(q_func(3.0)) == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(q_func_inv(q_func(7.5)) == doctest::Approx(7.5).epsilon(1e-9));
    CHECK_THROWS(q_func_inv(0.6));
    // Uncoded BPSK needs ~7.9 dB (Es/N0) for BER 2.2e-4 and ~15 dB for 1e-15.
    CHECK(uncoded_snr_db_at(2.2e-4) == doctest::Approx(7.907).epsilon(1e-3));
    CHECK(uncoded_snr_db_at(1e-15) == doctest::Approx(14.99).epsilon(1e-3));
}

TEST_CASE("run_point counts are identical for 1, 4 and 8 workers") {
    SchemeConfig scheme = small_concat();
    StoppingRule rule{50, 200, 5000};
    SweepRecord r1 = run_point(scheme, awgn(2.0, 77), rule, 1);
    SweepRecord r4 = run_point(scheme, awgn(2.0, 77), rule, 4);
    SweepRecord r8 = run_point(scheme, awgn(2.0, 77), rule, 8);
    for (const SweepRecord* r : {&r4, &r8}) {
        CHECK(r->frames == r1.frames);
        CHECK(r->bits == r1.bits);
        CHECK(r->bit_errors == r1.bit_errors);
        CHECK(r->bypassed_bit_errors == r1.bypassed_bit_errors);
        CHECK(r->pre_outer_ber == r1.pre_outer_ber);
        CHECK(r->under_resolved == r1.under_resolved);
    }
    CHECK(r1.bits == r1.frames * 33);
    CHECK(r1.pre_outer_ber == doctest::Approx(double(r1.bit_errors) / double(r1.bits)));
}

TEST_CASE("noise-free and noise-dominated regimes") {
    SchemeConfig scheme = small_concat();
    StoppingRule rule{100, 300, 600};

    SweepRecord clean = run_point(scheme, awgn(20.0, 1), rule, 1);
    CHECK(clean.bit_errors == 0);
    CHECK(clean.under_resolved); // flagged: max_frames hit below min_bit_errors
    CHECK(clean.frames == 600);

    SweepRecord noisy = run_point(scheme, awgn(-10.0, 1), rule, 1);
    CHECK(noisy.pre_outer_ber >= 0.1);
    CHECK(!noisy.under_resolved);
    CHECK(noisy.frames == 300); // resolved at the first checkpoint
}

TEST_CASE("uncoded bpsk calibration against the q function") {
    SchemeConfig scheme = uncoded_scheme();
    for (double snr : {2.0, 5.0}) {
        StoppingRule rule{400, 2000, 2000000};
        SweepRecord r = run_point(scheme, awgn(snr, 123), rule, 1);
        const double expect = q_func(std::sqrt(2.0 * std::pow(10.0, snr / 10.0)));
        const double sd = std::sqrt(expect * (1 - expect) / static_cast<double>(r.bits));
        CHECK(std::fabs(r.pre_outer_ber - expect) < 3.0 * sd);
    }
}

TEST_CASE("required_snr on uncoded bpsk matches the analytic inverse") {
    SchemeConfig scheme = uncoded_scheme();
    StoppingRule rule{800, 5000, 400000};
    ThresholdResult thr = required_snr(scheme, 9, 2.2e-4, 6.0, 10.0, 0.01, rule, 1);
    CHECK(!thr.under_resolved);
    CHECK(std::fabs(thr.snr_db - uncoded_snr_db_at(2.2e-4)) < 0.05);

    // Unbracketable target: BER never exceeds 0.5.
    CHECK_THROWS(required_snr(scheme, 9, 0.5, 6.0, 10.0, 0.05, rule, 1));
}

TEST_CASE("required_snr is monotone in the target and stable in max_frames") {
    SchemeConfig scheme = uncoded_scheme();
    StoppingRule rule{300, 2000, 100000};
    ThresholdResult loose = required_snr(scheme, 5, 1e-2, 0.0, 8.0, 0.02, rule, 1);
    ThresholdResult tight = required_snr(scheme, 5, 1e-3, 0.0, 8.0, 0.02, rule, 1);
    CHECK(tight.snr_db > loose.snr_db);

    // Well-resolved probes never hit max_frames, so doubling it is a no-op.
    StoppingRule doubled{300, 2000, 200000};
    ThresholdResult again = required_snr(scheme, 5, 1e-2, 0.0, 8.0, 0.02, doubled, 1);
    CHECK(again.snr_db == loose.snr_db);
}

TEST_CASE("sdd counts per three lanes") {
    CHECK(sdd_count_per3(scheme_from_config(ConfigMap{{"scheme.kind", "concatenated"}})) == 3.0);
    CHECK(sdd_count_per3(scheme_from_config(ConfigMap{{"scheme.kind", "cp-mlc"}})) == 1.5);
    auto id3 = scheme_from_config(ConfigMap{{"scheme.kind", "cp-mlc-id"}});
    CHECK(sdd_count_per3(id3) == 3.0);
    auto id6 = scheme_from_config(
        ConfigMap{{"scheme.kind", "cp-mlc-id"}, {"scheme.iterations", "6"}});
    CHECK(sdd_count_per3(id6) == 6.0);
}

TEST_CASE("total rate includes the outer factor") {
    auto concat = scheme_from_config(ConfigMap{{"scheme.kind", "concatenated"}});
    CHECK(total_rate(concat) == doctest::Approx((113.0 / 128.0) * (514.0 / 544.0)).epsilon(1e-12));
    auto id = scheme_from_config(ConfigMap{{"scheme.kind", "cp-mlc-id"}});
    CHECK(total_rate(id) == doctest::Approx((340.0 / 384.0) * (514.0 / 544.0)).epsilon(1e-12));
    CHECK(total_rate(uncoded_scheme()) == 1.0);
}

TEST_CASE("full-scale throughput probe") {
    auto cfg = scheme_from_config(ConfigMap{{"scheme.kind", "cp-mlc-id"}});
    StoppingRule rule{1, 400, 400};
    SweepRecord r = run_point(cfg, awgn(4.0, 3), rule, 1);
    MESSAGE("cp-mlc-id(128,106) I=3: ", r.frames / r.wall_seconds, " frames/s, ber=", r.pre_outer_ber);
    CHECK(r.frames == 400);
}
