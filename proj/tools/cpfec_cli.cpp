// Monte Carlo experiment driver: BER sweeps, threshold search, NCG, the
// interleaver-size experiment and the message-schedule trace.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "cpfec/config.hpp"
#include "cpfec/sim.hpp"

using namespace cpfec;

namespace {

struct CommonOpts {
    std::string config_path;
    std::string out_path;
    uint64_t seed = 1;
    bool seed_set = false;
    int workers = 1;
    long min_errors = -1, min_frames = -1, max_frames = -1;
    bool allow_unresolved = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--config", o.config_path, "key=value config file");
    cmd->add_option("--out", o.out_path, "output CSV path (stdout if omitted); also writes <out>.meta");
    cmd->add_option("--seed", o.seed, "master seed")->each([&](const std::string&) { o.seed_set = true; });
    cmd->add_option("--workers", o.workers, "worker threads");
    cmd->add_option("--min-errors", o.min_errors, "stop rule: min bit errors");
    cmd->add_option("--min-frames", o.min_frames, "stop rule: min frames");
    cmd->add_option("--max-frames", o.max_frames, "stop rule: max frames");
    cmd->add_flag("--allow-unresolved", o.allow_unresolved,
                  "exit 0 even if a threshold query is under-resolved");
}

struct Setup {
    ConfigMap cfg;
    SchemeConfig scheme;
    ChannelConfig channel;
    StoppingRule rule;
};

Setup make_setup(const CommonOpts& o) {
    Setup s;
    if (!o.config_path.empty()) s.cfg = load_config_file(o.config_path);
    s.scheme = scheme_from_config(s.cfg);
    s.channel = channel_from_config(s.cfg);
    s.rule = stopping_from_config(s.cfg);
    if (o.seed_set) s.channel.master_seed = o.seed;
    if (o.min_errors >= 0) s.rule.min_bit_errors = o.min_errors;
    if (o.min_frames >= 0) s.rule.min_frames = o.min_frames;
    if (o.max_frames >= 0) s.rule.max_frames = o.max_frames;
    return s;
}

const char* kCsvHeader =
    "scheme,snr_db,frames,bits,bit_errors,pre_outer_ber,bypassed_bit_errors,"
    "wall_seconds,master_seed,under_resolved";

std::string csv_line(const SweepRecord& r) {
    std::ostringstream os;
    os.precision(10);
    os << r.scheme_id << ',' << r.snr_db << ',' << r.frames << ',' << r.bits << ','
       << r.bit_errors << ',' << r.pre_outer_ber << ',' << r.bypassed_bit_errors << ','
       << r.wall_seconds << ',' << r.master_seed << ',' << (r.under_resolved ? 1 : 0);
    return os.str();
}

class Output {
public:
    explicit Output(const std::string& path) : path_(path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return path_.empty() ? std::cout : file_; }

    void write_meta(const Setup& s, const CommonOpts& o, const std::string& extra) {
        if (path_.empty()) return;
        std::ofstream meta(path_ + ".meta");
        meta << "tool: cpfec\n"
             << "rng: " << kRngAlgorithm << "\n"
             << "scheme: " << s.scheme.id << "\n"
             << "code: " << (s.scheme.kind == SchemeKind::uncoded ? "-" : s.scheme.code.name) << "\n"
             << "osd: "
             << (s.scheme.kind == SchemeKind::uncoded ? "-" : format_flipping_spec(s.scheme.osd_spec))
             << "\n"
             << "seed: " << s.channel.master_seed << "\n"
             << "workers: " << o.workers << "\n"
             << "stop.min_errors: " << s.rule.min_bit_errors << "\n"
             << "stop.min_frames: " << s.rule.min_frames << "\n"
             << "stop.max_frames: " << s.rule.max_frames << "\n";
        if (s.scheme.kind == SchemeKind::cp_mlc_id) {
            meta << "damping:";
            for (double xi : s.scheme.damping) meta << ' ' << xi;
            meta << "\ninterleavers:";
            for (const auto& spec : s.scheme.interleavers) meta << ' ' << format_interleaver_spec(spec);
            meta << "\n";
        }
        if (!extra.empty()) meta << extra;
        meta << "config_echo_begin\n";
        for (const auto& [k, v] : s.cfg) meta << k << " = " << v << "\n";
        meta << "config_echo_end\n";
    }

private:
    std::string path_;
    std::ofstream file_;
};

std::vector<double> parse_grid(const std::string& spec) {
    // "a:step:b" inclusive range, or a comma-separated list.
    std::vector<double> out;
    if (spec.find(':') != std::string::npos) {
        double a, step, b;
        if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &a, &step, &b) != 3 || step <= 0)
            throw std::runtime_error("bad grid spec: " + spec);
        for (double v = a; v <= b + 1e-9; v += step) out.push_back(v);
    } else {
        std::istringstream is(spec);
        std::string tok;
        while (std::getline(is, tok, ',')) out.push_back(std::stod(tok));
    }
    if (out.empty()) throw std::runtime_error("empty grid spec");
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"channel-polarized multilevel coding simulator"};
    app.require_subcommand(1);

    CommonOpts o;

    auto* sweep = app.add_subcommand("sweep", "pre-outer BER vs SNR grid");
    std::string snr_spec = "3.0:0.25:5.0";
    sweep->add_option("--snr", snr_spec, "SNR grid, 'a:step:b' or comma list (dB)");
    add_common(sweep, o);

    auto* threshold = app.add_subcommand("threshold", "required SNR at a target pre-outer BER");
    double target = OuterCodeModel{}.threshold_ber;
    double blo = 2.0, bhi = 6.5, tol = 0.01;
    threshold->add_option("--target", target, "target pre-outer BER");
    threshold->add_option("--bracket-lo", blo, "bracket low end (dB)");
    threshold->add_option("--bracket-hi", bhi, "bracket high end (dB)");
    threshold->add_option("--tol", tol, "bisection tolerance (dB)");
    add_common(threshold, o);

    auto* ncg_cmd = app.add_subcommand("ncg", "net coding gain at the KP4 threshold");
    ncg_cmd->add_option("--bracket-lo", blo, "bracket low end (dB)");
    ncg_cmd->add_option("--bracket-hi", bhi, "bracket high end (dB)");
    ncg_cmd->add_option("--tol", tol, "bisection tolerance (dB)");
    add_common(ncg_cmd, o);

    auto* isweep = app.add_subcommand("interleaver-sweep", "SNR loss vs interleaver size");
    std::string sizes_spec = "1,2,4,8,128";
    std::string iters_spec = "3,6";
    double isweep_target = OuterCodeModel{}.threshold_ber;
    isweep->add_option("--sizes", sizes_spec, "interleaver sizes S (comma list)");
    isweep->add_option("--iterations", iters_spec, "iteration counts (comma list)");
    isweep->add_option("--target", isweep_target, "target pre-outer BER for the loss reference");
    isweep->add_option("--bracket-lo", blo, "bracket low end (dB)");
    isweep->add_option("--bracket-hi", bhi, "bracket high end (dB)");
    isweep->add_option("--tol", tol, "bisection tolerance (dB)");
    add_common(isweep, o);

    auto* trace = app.add_subcommand("schedule-trace", "factor-graph message schedule");
    int trace_d = 3, trace_iters = 3;
    trace->add_option("--d", trace_d, "number of lanes");
    trace->add_option("--iterations", trace_iters, "iteration count");
    add_common(trace, o);

    CLI11_PARSE(app, argc, argv);

    try {
        if (trace->parsed()) {
            Setup s = make_setup(o);
            int d = trace_d, iters = trace_iters;
            if (!o.config_path.empty() && s.scheme.kind == SchemeKind::cp_mlc_id &&
                !trace->count("--d") && !trace->count("--iterations")) {
                d = s.scheme.d;
                iters = s.scheme.iterations;
            }
            Output out(o.out_path);
            for (const auto& e : message_schedule(d, iters)) {
                out.stream() << "i=" << e.iteration << " lane=" << e.lane << ":";
                for (size_t k = 0; k < e.messages.size(); ++k)
                    out.stream() << (k ? " -> " : " ") << e.messages[k];
                out.stream() << "\n";
            }
            return 0;
        }

        Setup s = make_setup(o);
        Output out(o.out_path);

        if (sweep->parsed()) {
            out.write_meta(s, o, "command: sweep\n");
            out.stream() << kCsvHeader << "\n";
            for (double snr : parse_grid(snr_spec)) {
                ChannelConfig ch = s.channel;
                ch.snr_db = snr;
                out.stream() << csv_line(run_point(s.scheme, ch, s.rule, o.workers)) << std::endl;
            }
            return 0;
        }

        if (threshold->parsed()) {
            out.write_meta(s, o, "command: threshold\n");
            ThresholdResult thr = required_snr(s.scheme, s.channel.master_seed, target, blo, bhi,
                                               tol, s.rule, o.workers);
            out.stream() << kCsvHeader << "\n";
            for (const auto& r : thr.probes) out.stream() << csv_line(r) << "\n";
            out.stream() << "# required_snr_db = " << thr.snr_db
                         << (thr.under_resolved ? " (under-resolved)" : "") << "\n";
            std::cerr << "required_snr_db = " << thr.snr_db
                      << (thr.under_resolved ? " (under-resolved)" : "") << "\n";
            return thr.under_resolved && !o.allow_unresolved ? 2 : 0;
        }

        if (ncg_cmd->parsed()) {
            out.write_meta(s, o, "command: ncg\n");
            NcgResult r = ncg(s.scheme, s.channel.master_seed, blo, bhi, tol, s.rule, o.workers);
            out.stream() << kCsvHeader << "\n";
            for (const auto& p : r.threshold.probes) out.stream() << csv_line(p) << "\n";
            out.stream() << "# required_snr_db = " << r.threshold.snr_db << "\n"
                         << "# rate_total = " << r.rate_total << "\n"
                         << "# ncg_db = " << r.ncg_db
                         << (r.threshold.under_resolved ? " (under-resolved)" : "") << "\n";
            std::cerr << "ncg_db = " << r.ncg_db
                      << (r.threshold.under_resolved ? " (under-resolved)" : "") << "\n";
            return r.threshold.under_resolved && !o.allow_unresolved ? 2 : 0;
        }

        if (isweep->parsed()) {
            out.write_meta(s, o, "command: interleaver-sweep\n");
            std::vector<int> sizes, iters;
            for (double v : parse_grid(sizes_spec)) sizes.push_back(static_cast<int>(v));
            for (double v : parse_grid(iters_spec)) iters.push_back(static_cast<int>(v));
            auto rows = interleaver_sweep(s.scheme, sizes, iters, s.channel.master_seed, blo, bhi,
                                          tol, s.rule, o.workers, isweep_target);
            out.stream() << "size,iterations,required_snr_db,snr_loss_db,under_resolved\n";
            bool any_unresolved = false;
            for (const auto& r : rows) {
                out.stream() << r.size << ',' << r.iterations << ',' << r.required_snr_db << ','
                             << r.snr_loss_db << ',' << (r.under_resolved ? 1 : 0) << "\n";
                any_unresolved |= r.under_resolved;
            }
            return any_unresolved && !o.allow_unresolved ? 2 : 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
