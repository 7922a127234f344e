#include "cpfec/gf2m.hpp"

#include <algorithm>
#include <stdexcept>

namespace cpfec {

BinaryPolynomial BinaryPolynomial::from_mask(uint64_t mask) {
    BinaryPolynomial p;
    for (int i = 0; i < 64; ++i)
        if ((mask >> i) & 1) {
            p.c_.resize(i + 1, 0);
            p.c_[i] = 1;
        }
    return p;
}

BinaryPolynomial BinaryPolynomial::x_pow_plus_one(int n) {
    BinaryPolynomial p;
    p.c_.assign(n + 1, 0);
    p.c_[0] = 1;
    p.c_[n] = 1;
    return p;
}

void BinaryPolynomial::set_coeff(int i, bool v) {
    if (i >= static_cast<int>(c_.size())) {
        if (!v) return;
        c_.resize(i + 1, 0);
    }
    c_[i] = v ? 1 : 0;
    normalize();
}

void BinaryPolynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BinaryPolynomial BinaryPolynomial::operator+(const BinaryPolynomial& o) const {
    BinaryPolynomial r;
    r.c_.assign(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = (i < c_.size() ? c_[i] : 0) ^ (i < o.c_.size() ? o.c_[i] : 0);
    r.normalize();
    return r;
}

BinaryPolynomial BinaryPolynomial::operator*(const BinaryPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    BinaryPolynomial r;
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i])
            for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] ^= o.c_[j];
    r.normalize();
    return r;
}

BinaryPolynomial BinaryPolynomial::mod(const BinaryPolynomial& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("polynomial division by zero");
    BinaryPolynomial r = *this;
    int dd = divisor.degree();
    while (r.degree() >= dd) {
        int shift = r.degree() - dd;
        for (int i = 0; i <= dd; ++i)
            if (divisor.c_[i]) r.c_[i + shift] ^= 1;
        r.normalize();
    }
    return r;
}

GaloisField::GaloisField(int m, uint32_t primitive_poly_mask) : m_(m), poly_(primitive_poly_mask) {
    if (m < 2 || m > 16) throw std::invalid_argument("GaloisField: m must be in [2,16]");
    if ((poly_ >> m) != 1) throw std::invalid_argument("GaloisField: polynomial degree must equal m");
    int n = order();
    antilog_.assign(n, 0);
    log_.assign(size_t(1) << m, -1);
    uint32_t x = 1;
    for (int i = 0; i < n; ++i) {
        if (log_[x] != -1) throw std::invalid_argument("GaloisField: polynomial is not primitive");
        antilog_[i] = x;
        log_[x] = i;
        x <<= 1;
        if (x >> m) x ^= poly_;
    }
    if (x != 1) throw std::invalid_argument("GaloisField: alpha^(2^m-1) != 1");
}

uint32_t GaloisField::default_primitive_poly(int m) {
    // Conventional minimal-weight primitive polynomials; m=7 is x^7+x^3+1.
    static constexpr uint32_t kPoly[17] = {
        0,      0,      0x7,    0xB,     0x13,   0x25,   0x43,    0x89,   0x11D,
        0x211,  0x409,  0x805,  0x1053,  0x201B, 0x4443, 0x8003,  0x1100B};
    if (m < 2 || m > 16) throw std::invalid_argument("default_primitive_poly: m must be in [2,16]");
    return kPoly[m];
}

GaloisField GaloisField::with_default_poly(int m) { return {m, default_primitive_poly(m)}; }

GaloisField::Element GaloisField::inv(Element a) const {
    if (a == 0) throw std::invalid_argument("GaloisField::inv: zero has no inverse");
    return antilog_[(order() - log_[a]) % order()];
}

int GaloisField::log(Element a) const {
    if (a == 0 || a > static_cast<Element>(order()))
        throw std::invalid_argument("GaloisField::log: element out of range");
    return log_[a];
}

GaloisField::Element GaloisField::eval(const BinaryPolynomial& p, Element x) const {
    Element acc = 0;
    for (int i = p.degree(); i >= 0; --i) acc = add(mul(acc, x), p.coeff(i) ? 1 : 0);
    return acc;
}

BinaryPolynomial minimal_polynomial(const GaloisField& field, GaloisField::Element e) {
    if (e == 0) throw std::invalid_argument("minimal_polynomial: e must be nonzero");
    // Conjugacy class {e, e^2, e^4, ...}.
    std::vector<GaloisField::Element> conj{e};
    for (auto x = field.mul(e, e); x != e; x = field.mul(x, x)) conj.push_back(x);

    // Expand prod (x + c) with coefficients in the extension field.
    std::vector<GaloisField::Element> p{1};
    for (auto c : conj) {
        std::vector<GaloisField::Element> q(p.size() + 1, 0);
        for (size_t i = 0; i < p.size(); ++i) {
            q[i + 1] ^= p[i];
            q[i] ^= field.mul(c, p[i]);
        }
        p = std::move(q);
    }

    BinaryPolynomial out;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] > 1) throw std::logic_error("minimal_polynomial: non-binary coefficient");
        if (p[i]) out.set_coeff(static_cast<int>(i), true);
    }
    return out;
}

BinaryPolynomial bch_generator(const GaloisField& field, int design_distance) {
    if (design_distance < 3 || design_distance % 2 == 0)
        throw std::invalid_argument("bch_generator: design distance must be odd and >= 3");
    if (design_distance - 2 >= field.order())
        throw std::invalid_argument("bch_generator: design distance too large for field order");

    std::vector<BinaryPolynomial> factors;
    for (int i = 1; i <= design_distance - 2; i += 2) {
        BinaryPolynomial mp = minimal_polynomial(field, field.pow_alpha(i));
        if (std::find(factors.begin(), factors.end(), mp) == factors.end()) factors.push_back(mp);
    }
    BinaryPolynomial g = BinaryPolynomial::one();
    for (const auto& f : factors) g = g * f;
    if (g.degree() >= field.order())
        throw std::invalid_argument("bch_generator: design distance too large for field order");
    return g;
}

} // namespace cpfec
