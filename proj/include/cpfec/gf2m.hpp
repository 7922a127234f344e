// GF(2^m) arithmetic via log/antilog tables and binary polynomial algebra.
// Backs eBCH generator construction; none of this is on the decode hot path.
#ifndef CPFEC_GF2M_HPP
#define CPFEC_GF2M_HPP

#include <cstdint>
#include <vector>

namespace cpfec {

// Coefficients stored lowest degree first (shift-register convention).
class BinaryPolynomial {
public:
    BinaryPolynomial() = default; // zero polynomial

    // Bit i of mask is the coefficient of x^i.
    static BinaryPolynomial from_mask(uint64_t mask);
    static BinaryPolynomial one() { return from_mask(1); }
    static BinaryPolynomial x_pow_plus_one(int n); // x^n + 1

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) && c_[i]; }
    void set_coeff(int i, bool v);

    BinaryPolynomial operator+(const BinaryPolynomial& o) const;
    BinaryPolynomial operator*(const BinaryPolynomial& o) const;
    BinaryPolynomial mod(const BinaryPolynomial& divisor) const;
    bool divides(const BinaryPolynomial& dividend) const { return dividend.mod(*this).is_zero(); }

    bool operator==(const BinaryPolynomial&) const = default;

private:
    void normalize();
    std::vector<uint8_t> c_;
};

class GaloisField {
public:
    using Element = uint32_t;

    // Throws if the polynomial is not primitive of degree m (alpha must
    // generate all 2^m - 1 nonzero elements).
    GaloisField(int m, uint32_t primitive_poly_mask);
    static GaloisField with_default_poly(int m);
    static uint32_t default_primitive_poly(int m);

    int m() const { return m_; }
    uint32_t poly_mask() const { return poly_; }
    int order() const { return (1 << m_) - 1; } // multiplicative order

    Element mul(Element a, Element b) const {
        if (a == 0 || b == 0) return 0;
        int s = log_[a] + log_[b];
        if (s >= order()) s -= order();
        return antilog_[s];
    }
    Element inv(Element a) const;
    Element add(Element a, Element b) const { return a ^ b; }
    Element pow_alpha(int e) const { // alpha^e for any integer e
        int n = order();
        int r = e % n;
        if (r < 0) r += n;
        return antilog_[r];
    }
    int log(Element a) const;

    Element eval(const BinaryPolynomial& p, Element x) const; // Horner

private:
    int m_ = 0;
    uint32_t poly_ = 0;
    std::vector<Element> antilog_; // antilog_[i] = alpha^i, i in [0, order)
    std::vector<int> log_;         // log_[antilog_[i]] = i
};

// Monic binary polynomial of least degree with e as a root; e must be nonzero.
BinaryPolynomial minimal_polynomial(const GaloisField& field, GaloisField::Element e);

// Narrow-sense BCH generator over GF(2^m), n = 2^m - 1: lcm of the minimal
// polynomials of alpha^1, alpha^3, ..., alpha^(design_distance - 2).
BinaryPolynomial bch_generator(const GaloisField& field, int design_distance);

} // namespace cpfec

#endif
