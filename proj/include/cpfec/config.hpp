// Plain-text key=value configuration and the spec strings used in configs:
// code names ("ebch-128-106"), flipping sets ("t0+t1+t2(40,29)") and
// interleavers ("identity", "digit-swap(8)", "random-involution(8,7)").
#ifndef CPFEC_CONFIG_HPP
#define CPFEC_CONFIG_HPP

#include <map>
#include <string>

#include "cpfec/sim.hpp"

namespace cpfec {

using ConfigMap = std::map<std::string, std::string>;

ConfigMap parse_config_text(const std::string& text);
ConfigMap load_config_file(const std::string& path);

FlippingSetSpec parse_flipping_spec(const std::string& s);
std::string format_flipping_spec(const FlippingSetSpec& spec);

InterleaverSpec parse_interleaver_spec(const std::string& s);
std::string format_interleaver_spec(const InterleaverSpec& spec);

// "ebch-<n>-<k>" with n a power of two (n = 2^m).
ComponentCode code_by_name(const std::string& name);

// Build a SchemeConfig from "scheme.*" keys; missing keys fall back to the
// reference constructions for the given kind.
SchemeConfig scheme_from_config(const ConfigMap& cfg);
ChannelConfig channel_from_config(const ConfigMap& cfg);
StoppingRule stopping_from_config(const ConfigMap& cfg);

std::string scheme_label(const SchemeConfig& cfg);

} // namespace cpfec

#endif
