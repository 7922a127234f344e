#include "cpfec/schemes.hpp"

#include <stdexcept>

namespace cpfec {

std::string to_string(SchemeKind k) {
    switch (k) {
    case SchemeKind::concatenated: return "concatenated";
    case SchemeKind::cp_mlc: return "cp-mlc";
    case SchemeKind::cp_mlc_id: return "cp-mlc-id";
    case SchemeKind::uncoded: return "uncoded";
    }
    return "?";
}

void SchemeConfig::validate() const {
    if (kind == SchemeKind::uncoded) return;
    if (d < 2) throw std::invalid_argument("scheme: need d >= 2");
    if (code.n_c <= 0) throw std::invalid_argument("scheme: missing component code");
    if (kind == SchemeKind::cp_mlc_id) {
        if (iterations < 1) throw std::invalid_argument("scheme: need iterations >= 1");
        if (static_cast<int>(damping.size()) != iterations)
            throw std::invalid_argument("scheme: damping length != iterations");
        for (double xi : damping)
            if (xi < 0.0 || xi > 1.0) throw std::invalid_argument("scheme: damping must be in [0,1]");
        if (static_cast<int>(interleavers.size()) != d)
            throw std::invalid_argument("scheme: need one interleaver per lane");
    }
}

std::vector<InterleaverSpec> default_interleavers(int d, int size) {
    std::vector<InterleaverSpec> specs(d, InterleaverSpec::identity_spec());
    for (int j = 1; j < d - 1; ++j)
        specs[j] = InterleaverSpec::digit_swap_spec(size, /*rotation=*/j - 1);
    return specs;
}

std::vector<double> default_damping(int iterations) {
    if (iterations == 3) return {0.3, 1.0, 1.0};
    if (iterations == 6) return {0.2, 0.3, 0.5, 0.7, 0.9, 1.0};
    return std::vector<double>(iterations, 1.0);
}

int info_bit_count(const SchemeConfig& cfg) {
    const int n = cfg.code.n_c, k = cfg.code.k_c;
    switch (cfg.kind) {
    case SchemeKind::concatenated: return cfg.d * k;
    case SchemeKind::cp_mlc: return k + (cfg.d - 1) * n;
    case SchemeKind::cp_mlc_id: return (cfg.d - 1) * k + n;
    case SchemeKind::uncoded: return n > 0 ? n : 128;
    }
    return 0;
}

int bypassed_offset(const SchemeConfig& cfg) {
    switch (cfg.kind) {
    case SchemeKind::cp_mlc: return cfg.code.k_c;
    case SchemeKind::cp_mlc_id: return (cfg.d - 1) * cfg.code.k_c;
    default: return info_bit_count(cfg); // empty bypassed region
    }
}

namespace {

void check_info_size(const SchemeConfig& cfg, const BitVector& info) {
    if (info.size() != info_bit_count(cfg))
        throw std::invalid_argument("scheme encode: info length mismatch");
}

void check_lanes(const SchemeConfig& cfg, const std::vector<LlrVector>& lanes) {
    if (static_cast<int>(lanes.size()) != cfg.d)
        throw std::invalid_argument("scheme decode: expected d lanes");
    for (const auto& l : lanes)
        if (static_cast<int>(l.size()) != cfg.code.n_c)
            throw std::invalid_argument("scheme decode: lane length != n_c");
}

std::vector<Permutation> lane_perms(const SchemeConfig& cfg) {
    std::vector<Permutation> perms;
    perms.reserve(cfg.interleavers.size());
    for (const auto& spec : cfg.interleavers) perms.push_back(build_interleaver(spec, cfg.code.n_c));
    return perms;
}

void copy_bits(const BitVector& src, int src_begin, BitVector& dst, int dst_begin, int len) {
    for (int i = 0; i < len; ++i) dst.set(dst_begin + i, src.get(src_begin + i));
}

} // namespace

Frame concatenated_encode(const SchemeConfig& cfg, const BitVector& info) {
    check_info_size(cfg, info);
    const int k = cfg.code.k_c;
    Frame f;
    f.info = info;
    for (int j = 0; j < cfg.d; ++j) f.coded.push_back(cfg.code.encode(info.slice(j * k, k)));
    f.lanes = f.coded;
    return f;
}

DecodeResult concatenated_decode(const SchemeConfig& cfg, const std::vector<LlrVector>& lanes) {
    check_lanes(cfg, lanes);
    const int k = cfg.code.k_c;
    DecodeResult res;
    res.info = BitVector(info_bit_count(cfg));
    for (int j = 0; j < cfg.d; ++j) {
        OsdResult r = osd_decode(cfg.code, lanes[j], cfg.osd_spec);
        ++res.sdd_invocations;
        copy_bits(r.info, 0, res.info, j * k, k);
    }
    return res;
}

LlrVector extrinsic_update(double xi, const LlrVector& lane_llr, const BitVector& shat) {
    if (static_cast<int>(lane_llr.size()) != shat.size())
        throw std::invalid_argument("extrinsic_update: length mismatch");
    LlrVector ext(lane_llr.size());
    for (size_t t = 0; t < lane_llr.size(); ++t)
        ext[t] = xi * lane_llr[t] * (shat.get(static_cast<int>(t)) ? -1.0 : 1.0);
    return ext;
}

Frame cpmlc_encode(const SchemeConfig& cfg, const BitVector& info) {
    check_info_size(cfg, info);
    const int n = cfg.code.n_c, k = cfg.code.k_c;
    Frame f;
    f.info = info;
    f.coded.push_back(cfg.code.encode(info.slice(0, k)));
    for (int j = 1; j < cfg.d; ++j) f.coded.push_back(info.slice(k + (j - 1) * n, n));
    f.lanes = f.coded;
    for (int j = 1; j < cfg.d; ++j) f.lanes[0] ^= f.coded[j]; // b1 = z1 ^ z2 ^ ... ^ zd
    return f;
}

DecodeResult cpmlc_decode(const SchemeConfig& cfg, const std::vector<LlrVector>& lanes) {
    check_lanes(cfg, lanes);
    const int n = cfg.code.n_c, k = cfg.code.k_c;

    // Unreliable-lane LLR: lambda_1 = l_1 [+] l_2 [+] ... [+] l_d.
    LlrVector lambda(n);
    for (int t = 0; t < n; ++t) {
        double acc = lanes[0][t];
        for (int j = 1; j < cfg.d; ++j) acc = boxplus(acc, lanes[j][t]);
        lambda[t] = acc;
    }
    OsdResult z1 = osd_decode(cfg.code, lambda, cfg.osd_spec);

    DecodeResult res;
    res.sdd_invocations = 1;
    res.info = BitVector(info_bit_count(cfg));
    copy_bits(z1.info, 0, res.info, 0, k);

    // Reliable lanes: gamma_j = l_j + (-1)^{z1} boxplus of the other lanes.
    for (int j = 1; j < cfg.d; ++j) {
        for (int t = 0; t < n; ++t) {
            double other = lanes[0][t];
            for (int i = 1; i < cfg.d; ++i)
                if (i != j) other = boxplus(other, lanes[i][t]);
            double gamma = lanes[j][t] + (z1.codeword.get(t) ? -other : other);
            res.info.set(k + (j - 1) * n + t, hard_bit(gamma));
        }
    }
    return res;
}

Frame cpmlcid_encode(const SchemeConfig& cfg, const BitVector& info) {
    check_info_size(cfg, info);
    const int n = cfg.code.n_c, k = cfg.code.k_c;
    const auto perms = lane_perms(cfg);
    Frame f;
    f.info = info;
    for (int j = 0; j < cfg.d - 1; ++j) f.coded.push_back(cfg.code.encode(info.slice(j * k, k)));
    f.coded.push_back(info.slice((cfg.d - 1) * k, n)); // bypassed z_d

    std::vector<BitVector> s;
    s.reserve(cfg.d);
    for (int j = 0; j < cfg.d; ++j) s.push_back(apply_perm(perms[j], f.coded[j]));
    for (int j = 0; j < cfg.d - 1; ++j) f.lanes.push_back(s[j] ^ s[cfg.d - 1]);
    f.lanes.push_back(s[cfg.d - 1]);
    return f;
}

DecodeResult cpmlcid_decode(const SchemeConfig& cfg, const std::vector<LlrVector>& lanes) {
    check_lanes(cfg, lanes);
    const int n = cfg.code.n_c, k = cfg.code.k_c, d = cfg.d;
    const auto perms = lane_perms(cfg);

    std::vector<LlrVector> l_ext(d - 1, LlrVector(n, 0.0));
    std::vector<BitVector> zhat(d - 1);
    std::vector<bool> visited(d - 1, false);

    DecodeResult res;

    auto lane_input = [&](int j) { // lambda_j^in = l_j [+] (l_d + sum_{j' != j} l_ext_{d,j'})
        LlrVector lambda(n);
        for (int t = 0; t < n; ++t) {
            double tilde = lanes[d - 1][t];
            for (int jp = 0; jp < d - 1; ++jp)
                if (jp != j) tilde += l_ext[jp][t];
            lambda[t] = boxplus(lanes[j][t], tilde);
        }
        return lambda;
    };

    for (int i = 1; i <= cfg.iterations; ++i) {
        const int j = (i - 1) % (d - 1);
        LlrVector lambda_z = apply_perm(perms[j], lane_input(j)); // back to code domain
        OsdResult r = osd_decode(cfg.code, lambda_z, cfg.osd_spec);
        ++res.sdd_invocations;
        res.trace.push_back({i, j + 1, BitVector::hamming(r.codeword, hard_decisions(lambda_z))});

        BitVector shat = apply_perm(perms[j], r.codeword);
        l_ext[j] = extrinsic_update(cfg.damping[i - 1], lanes[j], shat);
        zhat[j] = std::move(r.codeword);
        visited[j] = true;
    }

    // Bypassed bits from the accumulated extrinsics.
    LlrVector gamma(n, 0.0);
    for (int jp = 0; jp < d - 1; ++jp)
        for (int t = 0; t < n; ++t) gamma[t] += l_ext[jp][t];
    if (cfg.bypass_includes_channel_llr)
        for (int t = 0; t < n; ++t) gamma[t] += lanes[d - 1][t];
    BitVector zd_hat = apply_perm(perms[d - 1], hard_decisions(gamma));

    res.info = BitVector(info_bit_count(cfg));
    for (int j = 0; j < d - 1; ++j) {
        // Lanes are unvisited only when I < d-1; fall back to hard decisions.
        BitVector cw = visited[j] ? zhat[j] : hard_decisions(apply_perm(perms[j], lane_input(j)));
        copy_bits(cw, 0, res.info, j * k, k);
    }
    copy_bits(zd_hat, 0, res.info, (d - 1) * k, n);
    return res;
}

Frame scheme_encode(const SchemeConfig& cfg, const BitVector& info) {
    switch (cfg.kind) {
    case SchemeKind::concatenated: return concatenated_encode(cfg, info);
    case SchemeKind::cp_mlc: return cpmlc_encode(cfg, info);
    case SchemeKind::cp_mlc_id: return cpmlcid_encode(cfg, info);
    case SchemeKind::uncoded: {
        check_info_size(cfg, info);
        return Frame{info, {info}, {info}};
    }
    }
    throw std::logic_error("scheme_encode: unknown kind");
}

DecodeResult scheme_decode(const SchemeConfig& cfg, const std::vector<LlrVector>& lanes) {
    switch (cfg.kind) {
    case SchemeKind::concatenated: return concatenated_decode(cfg, lanes);
    case SchemeKind::cp_mlc: return cpmlc_decode(cfg, lanes);
    case SchemeKind::cp_mlc_id: return cpmlcid_decode(cfg, lanes);
    case SchemeKind::uncoded: {
        if (lanes.size() != 1) throw std::invalid_argument("uncoded decode: expected one lane");
        DecodeResult res;
        res.info = hard_decisions(lanes[0]);
        return res;
    }
    }
    throw std::logic_error("scheme_decode: unknown kind");
}

double scheme_overhead(const SchemeConfig& cfg) {
    if (cfg.kind == SchemeKind::uncoded) return 0.0;
    const double transmitted = static_cast<double>(cfg.d) * cfg.code.n_c;
    const double info = static_cast<double>(info_bit_count(cfg));
    const double outer = 544.0 / 514.0;
    return (transmitted / info * outer - 1.0) * 100.0;
}

std::pair<double, double> bsc_erasure_probabilities(double p) {
    if (p < 0.0 || p > 0.5) throw std::invalid_argument("bsc_erasure_probabilities: p out of [0, 0.5]");
    return {(1.0 - p) * (1.0 - p) + p * p, 2.0 * p * (1.0 - p)};
}

std::vector<ScheduleEntry> message_schedule(int d, int iterations) {
    if (d < 2 || iterations < 1) throw std::invalid_argument("message_schedule: need d >= 2, I >= 1");
    std::vector<ScheduleEntry> sched;
    for (int i = 1; i <= iterations; ++i) {
        const int j = (i - 1) % (d - 1) + 1;
        const std::string S = "S" + std::to_string(j);
        const std::string dH = "dH" + std::to_string(j);
        const std::string dx = "d" + std::to_string(j);
        const std::string it = "[" + std::to_string(i) + "]";
        ScheduleEntry e{i, j, {}};
        if (i > 1) { // later visits start from the bypassed variable node
            e.messages.push_back("phi(Bd," + dx + ")" + it);
            e.messages.push_back("psi(" + dx + "," + S + ")" + it);
        }
        e.messages.push_back("phi(" + S + "," + dH + ")" + it);
        e.messages.push_back("psi(" + dH + "," + S + ")" + it);
        e.messages.push_back("phi(" + S + "," + dx + ")" + it);
        e.messages.push_back("psi(" + dx + ",Bd)" + it);
        sched.push_back(std::move(e));
    }
    return sched;
}

} // namespace cpfec
