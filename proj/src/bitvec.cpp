#include "cpfec/bitvec.hpp"

#include <numeric>

namespace cpfec {

Elimination gf2_eliminate(const BinaryMatrix& m, std::span<const int> column_priority) {
    if (static_cast<int>(column_priority.size()) != m.cols())
        throw std::invalid_argument("gf2_eliminate: priority is not a permutation of columns");

    Elimination out;
    out.reduced = m;
    BinaryMatrix& a = out.reduced;
    const int rows = a.rows();

    int rank = 0;
    for (int c : column_priority) {
        if (rank == rows) break;
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a.get(r, c)) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        a.swap_rows(rank, pivot);
        for (int r = 0; r < rows; ++r)
            if (r != rank && a.get(r, c)) a.xor_rows(r, rank);
        out.pivot_columns.push_back(c);
        ++rank;
    }
    return out;
}

int BinaryMatrix::rank() const {
    std::vector<int> natural(cols_);
    std::iota(natural.begin(), natural.end(), 0);
    return static_cast<int>(gf2_eliminate(*this, natural).pivot_columns.size());
}

} // namespace cpfec
