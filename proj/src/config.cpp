#include "cpfec/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cpfec {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, sep)) out.push_back(trim(item));
    return out;
}

std::string get_or(const ConfigMap& cfg, const std::string& key, const std::string& fallback) {
    auto it = cfg.find(key);
    return it == cfg.end() ? fallback : it->second;
}

long get_long(const ConfigMap& cfg, const std::string& key, long fallback) {
    auto it = cfg.find(key);
    return it == cfg.end() ? fallback : std::stol(it->second);
}

double get_double(const ConfigMap& cfg, const std::string& key, double fallback) {
    auto it = cfg.find(key);
    return it == cfg.end() ? fallback : std::stod(it->second);
}

bool get_bool(const ConfigMap& cfg, const std::string& key, bool fallback) {
    auto it = cfg.find(key);
    if (it == cfg.end()) return fallback;
    if (it->second == "true" || it->second == "1") return true;
    if (it->second == "false" || it->second == "0") return false;
    throw std::invalid_argument("config: boolean expected for " + key);
}

} // namespace

ConfigMap parse_config_text(const std::string& text) {
    ConfigMap cfg;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: missing '=' on line " + std::to_string(lineno));
        cfg[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return cfg;
}

ConfigMap load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

FlippingSetSpec parse_flipping_spec(const std::string& s) {
    FlippingSetSpec spec{false, false, false, 0, 0};
    for (const std::string& tok : split(s, '+')) {
        if (tok == "t0") {
            spec.include_order0 = true;
        } else if (tok == "t1") {
            spec.include_order1 = true;
        } else if (tok.rfind("t2(", 0) == 0 && tok.back() == ')') {
            const auto parts = split(tok.substr(3, tok.size() - 4), ',');
            if (parts.size() != 2) throw std::invalid_argument("flipping spec: want t2(m1,m2)");
            spec.include_pairs = true;
            spec.m1 = std::stoi(parts[0]);
            spec.m2 = std::stoi(parts[1]);
        } else {
            throw std::invalid_argument("flipping spec: unknown token '" + tok + "'");
        }
    }
    if (!spec.include_order0 && !spec.include_order1 && !spec.include_pairs)
        throw std::invalid_argument("flipping spec: empty");
    return spec;
}

std::string format_flipping_spec(const FlippingSetSpec& spec) {
    std::string s;
    auto add = [&](const std::string& tok) {
        if (!s.empty()) s += "+";
        s += tok;
    };
    if (spec.include_order0) add("t0");
    if (spec.include_order1) add("t1");
    if (spec.include_pairs)
        add("t2(" + std::to_string(spec.m1) + "," + std::to_string(spec.m2) + ")");
    return s;
}

InterleaverSpec parse_interleaver_spec(const std::string& s) {
    if (s == "identity") return InterleaverSpec::identity_spec();
    if (s.rfind("digit-swap(", 0) == 0 && s.back() == ')') {
        const auto parts = split(s.substr(11, s.size() - 12), ',');
        if (parts.size() == 1) return InterleaverSpec::digit_swap_spec(std::stoi(parts[0]));
        if (parts.size() == 2)
            return InterleaverSpec::digit_swap_spec(std::stoi(parts[0]), std::stoi(parts[1]));
    }
    if (s.rfind("random-involution(", 0) == 0 && s.back() == ')') {
        const auto parts = split(s.substr(18, s.size() - 19), ',');
        if (parts.size() == 2)
            return InterleaverSpec::random_involution_spec(std::stoi(parts[0]), std::stoull(parts[1]));
    }
    throw std::invalid_argument("interleaver spec: cannot parse '" + s + "'");
}

std::string format_interleaver_spec(const InterleaverSpec& spec) {
    switch (spec.kind) {
    case InterleaverSpec::Kind::identity: return "identity";
    case InterleaverSpec::Kind::digit_swap:
        if (spec.rotation)
            return "digit-swap(" + std::to_string(spec.size) + "," + std::to_string(spec.rotation) + ")";
        return "digit-swap(" + std::to_string(spec.size) + ")";
    case InterleaverSpec::Kind::random_involution:
        return "random-involution(" + std::to_string(spec.size) + "," + std::to_string(spec.seed) + ")";
    }
    return "?";
}

ComponentCode code_by_name(const std::string& name) {
    const auto parts = split(name, '-');
    if (parts.size() == 3 && parts[0] == "ebch") {
        const int n = std::stoi(parts[1]);
        const int k = std::stoi(parts[2]);
        int m = 0;
        while ((1 << (m + 1)) < n) ++m;
        ++m;
        if ((1 << m) != n) throw std::invalid_argument("code name: n must be a power of two");
        return build_ebch_field(m, k);
    }
    throw std::invalid_argument("code name: cannot parse '" + name + "'");
}

std::string scheme_label(const SchemeConfig& cfg) {
    if (cfg.kind == SchemeKind::uncoded) return "uncoded";
    // Slash-separated so the label stays a single CSV field.
    std::string s = to_string(cfg.kind) + "/" + cfg.code.name + "/t" +
                    std::to_string(flipping_set_size(cfg.osd_spec, cfg.code.k_c));
    if (cfg.kind == SchemeKind::cp_mlc_id) s += "/I" + std::to_string(cfg.iterations);
    s += "/d" + std::to_string(cfg.d);
    return s;
}

SchemeConfig scheme_from_config(const ConfigMap& cfg) {
    SchemeConfig sc;
    const std::string kind = get_or(cfg, "scheme.kind", "cp-mlc-id");
    if (kind == "concatenated")
        sc.kind = SchemeKind::concatenated;
    else if (kind == "cp-mlc")
        sc.kind = SchemeKind::cp_mlc;
    else if (kind == "cp-mlc-id")
        sc.kind = SchemeKind::cp_mlc_id;
    else if (kind == "uncoded")
        sc.kind = SchemeKind::uncoded;
    else
        throw std::invalid_argument("config: unknown scheme.kind '" + kind + "'");

    if (sc.kind == SchemeKind::uncoded) {
        sc.id = "uncoded";
        return sc;
    }

    // Table defaults per kind: codes, candidate sets and lane counts of the
    // roughly 19.5%-OH constructions.
    std::string default_code = "ebch-128-106", default_osd = "t0+t1+t2(40,29)";
    int default_d = 3;
    if (sc.kind == SchemeKind::concatenated) default_code = "ebch-128-113";
    if (sc.kind == SchemeKind::cp_mlc) {
        default_code = "ebch-128-99";
        default_d = 2;
    }

    sc.code = code_by_name(get_or(cfg, "scheme.code", default_code));
    sc.osd_spec = parse_flipping_spec(get_or(cfg, "scheme.osd", default_osd));
    sc.d = static_cast<int>(get_long(cfg, "scheme.d", default_d));

    if (sc.kind == SchemeKind::cp_mlc_id) {
        sc.iterations = static_cast<int>(get_long(cfg, "scheme.iterations", 3));
        if (auto it = cfg.find("scheme.damping"); it != cfg.end()) {
            for (const auto& tok : split(it->second, ',')) sc.damping.push_back(std::stod(tok));
        } else {
            sc.damping = default_damping(sc.iterations);
        }
        if (auto it = cfg.find("scheme.interleavers"); it != cfg.end()) {
            for (const auto& tok : split(it->second, ','))
                sc.interleavers.push_back(parse_interleaver_spec(tok));
        } else {
            const int s = static_cast<int>(get_long(cfg, "scheme.interleaver_size", sc.code.n_c));
            sc.interleavers = default_interleavers(sc.d, s);
        }
        sc.bypass_includes_channel_llr = get_bool(cfg, "scheme.bypass_includes_channel_llr", true);
    }
    sc.id = get_or(cfg, "scheme.id", scheme_label(sc));
    sc.validate();
    return sc;
}

ChannelConfig channel_from_config(const ConfigMap& cfg) {
    ChannelConfig ch;
    const std::string kind = get_or(cfg, "channel.kind", "awgn");
    if (kind == "awgn")
        ch.kind = ChannelConfig::Kind::awgn;
    else if (kind == "bsc")
        ch.kind = ChannelConfig::Kind::bsc;
    else
        throw std::invalid_argument("config: unknown channel.kind '" + kind + "'");
    ch.snr_db = get_double(cfg, "channel.snr_db", 4.0);
    ch.p = get_double(cfg, "channel.p", 0.0);
    ch.master_seed = static_cast<uint64_t>(get_long(cfg, "seed", 1));
    return ch;
}

StoppingRule stopping_from_config(const ConfigMap& cfg) {
    StoppingRule rule;
    rule.min_bit_errors = get_long(cfg, "stop.min_errors", rule.min_bit_errors);
    rule.min_frames = get_long(cfg, "stop.min_frames", rule.min_frames);
    rule.max_frames = get_long(cfg, "stop.max_frames", rule.max_frames);
    return rule;
}

} // namespace cpfec
