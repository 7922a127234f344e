#include "cpfec/linear_code.hpp"

#include <numeric>

namespace cpfec {

ComponentCode build_ebch_field(int m, int k_c) {
    GaloisField field = GaloisField::with_default_poly(m);
    const int n0 = field.order(); // 2^m - 1

    // Smallest odd design distance whose generator gives information length k_c.
    BinaryPolynomial g;
    int delta = 0;
    for (int d = 3;; d += 2) {
        BinaryPolynomial cand = bch_generator(field, d);
        int k = n0 - cand.degree();
        if (k == k_c) {
            g = cand;
            delta = d;
            break;
        }
        if (k < k_c)
            throw std::invalid_argument("build_ebch: no BCH(" + std::to_string(n0) + "," +
                                        std::to_string(k_c) + ") code exists");
    }

    ComponentCode code;
    code.n_c = n0 + 1;
    code.k_c = k_c;
    code.design_distance = delta;
    code.d_min = delta + 1;
    code.field_m = m;
    code.name = "ebch-" + std::to_string(code.n_c) + "-" + std::to_string(k_c);

    // Polynomial-encoder generator rows x^i * g(x), each extended by an overall
    // parity bit so every codeword has even weight.
    BinaryMatrix rows(k_c, code.n_c);
    for (int r = 0; r < k_c; ++r) {
        int weight = 0;
        for (int j = 0; j <= g.degree(); ++j)
            if (g.coeff(j)) {
                rows.set(r, r + j, true);
                ++weight;
            }
        rows.set(r, n0, weight & 1);
    }

    // g(0) = 1 makes the first k_c columns unit lower triangular, so natural
    // priority pivots exactly on columns 0..k_c-1 and G comes out as [I | P].
    std::vector<int> natural(code.n_c);
    std::iota(natural.begin(), natural.end(), 0);
    Elimination elim = gf2_eliminate(rows, natural);
    if (static_cast<int>(elim.pivot_columns.size()) != k_c)
        throw std::logic_error("build_ebch: generator not full rank");
    for (int i = 0; i < k_c; ++i)
        if (elim.pivot_columns[i] != i) throw std::logic_error("build_ebch: unexpected pivot layout");
    code.G = std::move(elim.reduced);

    // H = [P^T | I]; then G H^T = P + P = 0.
    const int r_c = code.n_c - k_c;
    code.H = BinaryMatrix(r_c, code.n_c);
    for (int r = 0; r < r_c; ++r) {
        for (int i = 0; i < k_c; ++i) code.H.set(r, i, code.G.get(i, k_c + r));
        code.H.set(r, k_c + r, true);
    }
    return code;
}

ComponentCode build_ebch(int k_c) { return build_ebch_field(7, k_c); }

} // namespace cpfec
