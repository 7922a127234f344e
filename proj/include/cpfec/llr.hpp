// Boxplus LLR algebra: a [+] b = 2 atanh(tanh(a/2) tanh(b/2)), evaluated in
// the numerically stable Jacobian form. All LLRs are clamped to +-kLlrMax.
#ifndef CPFEC_LLR_HPP
#define CPFEC_LLR_HPP

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

namespace cpfec {

using LlrVector = std::vector<double>;

inline constexpr double kLlrMax = 40.0;

inline double clamp_llr(double l) { return std::clamp(l, -kLlrMax, kLlrMax); }

inline double boxplus(double a, double b) {
    a = clamp_llr(a);
    b = clamp_llr(b);
    const double mag = std::min(std::fabs(a), std::fabs(b));
    double r = ((a < 0.0) == (b < 0.0) ? mag : -mag) //
               + std::log1p(std::exp(-std::fabs(a + b))) //
               - std::log1p(std::exp(-std::fabs(a - b)));
    // |a [+] b| <= min(|a|, |b|) holds exactly; clamping removes float dust.
    return std::clamp(r, -mag, mag);
}

inline double boxplus_reduce(std::span<const double> l) {
    if (l.empty()) throw std::invalid_argument("boxplus_reduce: empty input");
    double acc = clamp_llr(l[0]);
    for (size_t i = 1; i < l.size(); ++i) acc = boxplus(acc, l[i]);
    return acc;
}

} // namespace cpfec

#endif
